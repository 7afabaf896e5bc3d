"""Password parsings: contiguous segmentations (compositions).

A password of length n has exactly 2**(n-1) compositions. Enumeration is
deterministic — segment count ascending, then lexicographic by cut
positions — so reports and golden tests are reproducible. Growth is
exponential, so limits cap both segment count and total parsings; callers
see ``truncated`` and must widen their answer to a bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import ValidationError
from .rules import RuleCombination


@dataclass(frozen=True)
class EnumerationLimits:
    max_segments: int = 8
    max_parsings: int = 2**20

    def __post_init__(self):
        if self.max_segments < 1 or self.max_parsings < 1:
            raise ValidationError("limits must be >= 1", field="limits")


@dataclass(frozen=True)
class Parsing:
    """An ordered segmentation whose concatenation is the original string."""

    segments: tuple[str, ...]

    def __post_init__(self):
        if not self.segments or any(not s for s in self.segments):
            raise ValidationError("segments must be non-empty", field="segments")

    def text(self) -> str:
        return "".join(self.segments)

    def __len__(self) -> int:
        return len(self.segments)


@dataclass(frozen=True)
class TaggedParsing:
    """A parsing with, per segment, the id of a generating rule or None
    when no rule in the combination matched (fallback segment)."""

    parsing: Parsing
    rule_ids: tuple[str | None, ...]

    def __post_init__(self):
        if len(self.rule_ids) != len(self.parsing.segments):
            raise ValidationError("one tag per segment required", field="rule_ids")


@dataclass(frozen=True)
class ParsingSet:
    password: str
    parsings: tuple[Parsing, ...]
    truncated: bool
    tagged: tuple[TaggedParsing, ...] = field(default=())


def _cut_tuples(n: int, limits: EnumerationLimits):
    """Yield cut-position tuples in the contract order: fewer cuts first,
    then lexicographic. Cut i splits between characters i-1 and i."""
    max_cuts = min(n - 1, limits.max_segments - 1)
    for k in range(max_cuts + 1):
        yield from itertools.combinations(range(1, n), k)


def _segments(password: str, cuts: tuple[int, ...]) -> tuple[str, ...]:
    bounds = (0, *cuts, len(password))
    return tuple(password[a:b] for a, b in zip(bounds, bounds[1:]))


def enumerate_parsings(password: str, limits: EnumerationLimits | None = None) -> ParsingSet:
    """All compositions of ``password`` into contiguous non-empty segments."""
    if not password:
        raise ValidationError("password must be non-empty", field="password")
    limits = limits or EnumerationLimits()
    n = len(password)
    total = 2 ** (n - 1)

    parsings: list[Parsing] = []
    truncated = False
    for cuts in _cut_tuples(n, limits):
        if len(parsings) >= limits.max_parsings:
            truncated = True
            break
        parsings.append(Parsing(segments=_segments(password, cuts)))
    if len(parsings) < total:
        truncated = True
    return ParsingSet(password=password, parsings=tuple(parsings), truncated=truncated)


def conformant_parsings(
    combination: RuleCombination,
    password: str,
    limits: EnumerationLimits | None = None,
) -> ParsingSet:
    """Compositions tagged against a rule combination.

    Every segment carries either the id of the first member rule that
    generates it or a fallback tag (None); every returned parsing is a
    valid composition, so the conformant set is a subset of the exhaustive
    one under identical limits.
    """
    base = enumerate_parsings(password, limits)

    # memoize tags per distinct substring; segments repeat across parsings
    tag_cache: dict[str, str | None] = {}

    def tag(segment: str) -> str | None:
        if segment not in tag_cache:
            matched = next(
                (r.id for r in combination.rules if r.generates(segment)), None
            )
            tag_cache[segment] = matched
        return tag_cache[segment]

    tagged = tuple(
        TaggedParsing(parsing=p, rule_ids=tuple(tag(s) for s in p.segments))
        for p in base.parsings
    )
    return ParsingSet(
        password=password,
        parsings=base.parsings,
        truncated=base.truncated,
        tagged=tagged,
    )


# ---------------------------------------------------------------------------
# Line format: "seg1|seg2|..." with '|' escaped as '\|' (and '\' as '\\',
# required for the format to round-trip)
# ---------------------------------------------------------------------------

def format_parsing(parsing: Parsing) -> str:
    return "|".join(s.replace("\\", "\\\\").replace("|", "\\|") for s in parsing.segments)


def parse_parsing_line(line: str) -> Parsing:
    segments: list[str] = []
    current: list[str] = []
    escaped = False
    for c in line:
        if escaped:
            current.append(c)
            escaped = False
        elif c == "\\":
            escaped = True
        elif c == "|":
            segments.append("".join(current))
            current = []
        else:
            current.append(c)
    if escaped:
        raise ValidationError("dangling escape in parsing line", field="parsing")
    segments.append("".join(current))
    return Parsing(segments=tuple(segments))
