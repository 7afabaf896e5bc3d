"""Alphabets, generation rules, rule combinations, and try-order topologies.

A rule is a generator of a password subset with an exact (or explicitly
bounded) cardinality, a membership test that never requires enumerating the
whole set, and a deterministic enumeration order for the cracking
simulator:

* wordlist rules enumerate in file order;
* mangled wordlists enumerate word-major (each entry, then each transform
  in declared order), duplicates included since each emitted candidate
  costs the attacker one guess;
* character-class rules enumerate shortest-first, then lexicographically
  in the declared character order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from .cardinality import UNBOUNDED, Cardinality, geometric_length_sum
from .errors import ValidationError

DEFAULT_MAX_LENGTH = 64


@dataclass(frozen=True)
class Alphabet:
    """A finite, ordered, duplicate-free set of unicode scalar values."""

    name: str
    characters: tuple[str, ...]

    def __post_init__(self):
        if not self.characters:
            raise ValidationError("alphabet must be non-empty", field="alphabet")
        for c in self.characters:
            if len(c) != 1:
                raise ValidationError(
                    "alphabet entries must be single unicode scalar values",
                    field="alphabet",
                )
        if len(set(self.characters)) != len(self.characters):
            raise ValidationError("alphabet contains duplicates", field="alphabet")
        # frozenset membership keeps covers() linear in the candidate length
        object.__setattr__(self, "_charset", frozenset(self.characters))

    @classmethod
    def from_string(cls, name: str, characters: str) -> Alphabet:
        return cls(name=name, characters=tuple(characters))

    @property
    def size(self) -> int:
        return len(self.characters)

    def __contains__(self, char: str) -> bool:
        return char in self._charset  # type: ignore[attr-defined]

    def covers(self, text: str) -> bool:
        return all(c in self for c in text)


@dataclass(frozen=True)
class AuxConstraint:
    """Auxiliary policy constraints attached to a rule.

    ``min_length`` and ``max_length`` must each be at least 1; an *inverted*
    range (min > max) is the unsatisfiable constraint, which is a legitimate
    value produced by conjunction and accepts nothing. ``charset`` optionally
    restricts which characters may appear (globally, not per position).
    """

    min_length: int = 1
    max_length: int = DEFAULT_MAX_LENGTH
    charset: frozenset[str] | None = None
    case_sensitive: bool = True

    def __post_init__(self):
        if self.min_length < 1 or self.max_length < 1:
            raise ValidationError("lengths must be >= 1", field="aux")

    @property
    def satisfiable(self) -> bool:
        return self.min_length <= self.max_length and (
            self.charset is None or len(self.charset) > 0
        )

    def accepts(self, candidate: str) -> bool:
        if not (self.min_length <= len(candidate) <= self.max_length):
            return False
        if self.charset is not None and any(c not in self.charset for c in candidate):
            return False
        return True


def conjoin_aux(a: AuxConstraint, b: AuxConstraint) -> AuxConstraint:
    """Conjunction of two constraints: accepts exactly the strings both accept.

    Length bounds tighten (max of mins, min of maxes) and character masks
    intersect; an empty result range is representable, not an error.
    """
    if a.charset is None:
        charset = b.charset
    elif b.charset is None:
        charset = a.charset
    else:
        charset = a.charset & b.charset
    return AuxConstraint(
        min_length=max(a.min_length, b.min_length),
        max_length=min(a.max_length, b.max_length),
        charset=charset,
        case_sensitive=a.case_sensitive or b.case_sensitive,
    )


# ---------------------------------------------------------------------------
# Mangling transforms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Transform:
    """One word-mangling transformation: a pure string map with a preimage
    computation so mangled membership is decidable by inverse lookup."""

    kind: str  # identity | lowercase | uppercase | capitalize | affix | leet
    prefix: str = ""
    suffix: str = ""
    leet_map: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        known = {"identity", "lowercase", "uppercase", "capitalize", "affix", "leet"}
        if self.kind not in known:
            raise ValidationError(f"unknown transform kind: {self.kind}", field="transforms")

    def apply(self, word: str) -> str:
        if self.kind == "identity":
            return word
        if self.kind == "lowercase":
            return word.lower()
        if self.kind == "uppercase":
            return word.upper()
        if self.kind == "capitalize":
            return word[:1].upper() + word[1:].lower()
        if self.kind == "affix":
            return self.prefix + word + self.suffix
        # leet: replace every occurrence of each source character
        out = word
        for src, dst in self.leet_map:
            out = out.replace(src, dst)
        return out

    def preimages(self, candidate: str) -> list[str]:
        """All words ``w`` with ``apply(w) == candidate``, up to case-map
        ambiguity. Every returned string is re-checked by the caller."""
        if self.kind == "identity":
            return [candidate]
        if self.kind == "lowercase":
            # any casing of candidate could be the source; membership check
            # is done against a casefolded index by the rule
            return [candidate] if candidate == candidate.lower() else []
        if self.kind == "uppercase":
            return [candidate] if candidate == candidate.upper() else []
        if self.kind == "capitalize":
            if candidate != candidate[:1].upper() + candidate[1:].lower():
                return []
            return [candidate]
        if self.kind == "affix":
            if not (candidate.startswith(self.prefix) and candidate.endswith(self.suffix)):
                return []
            core = candidate[len(self.prefix): len(candidate) - len(self.suffix)]
            if len(core) + len(self.prefix) + len(self.suffix) != len(candidate):
                return []
            return [core]
        # leet: per-position inverse options; a source char surviving in the
        # candidate is impossible because apply() replaces all occurrences
        sources = {src for src, _ in self.leet_map}
        inverse: dict[str, list[str]] = {}
        for src, dst in self.leet_map:
            inverse.setdefault(dst, []).append(src)
        options: list[list[str]] = []
        for c in candidate:
            opts = list(inverse.get(c, []))
            if c not in sources:
                opts.append(c)
            if not opts:
                return []
            options.append(opts)
        return ["".join(chars) for chars in itertools.product(*options)]


def identity_transform() -> Transform:
    return Transform(kind="identity")


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True, kw_only=True)
class Rule:
    """Base generator. Subclasses fix the generator kind."""

    id: str
    alphabet: Alphabet
    aux: AuxConstraint

    kind = "abstract"

    def cardinality(self) -> Cardinality:
        raise NotImplementedError

    @property
    def cardinality_exact(self) -> bool:
        return True

    def generates(self, candidate: str) -> bool:
        raise NotImplementedError

    def candidates(self) -> Iterator[str]:
        """Deterministic enumeration of the rule's output set."""
        raise NotImplementedError


def _match_key(entry: str, case_sensitive: bool) -> str:
    return entry if case_sensitive else entry.casefold()


@dataclass(frozen=True, kw_only=True)
class WordlistRule(Rule):
    entries: tuple[str, ...]

    kind = "wordlist"

    def __post_init__(self):
        if len(set(self.entries)) != len(self.entries):
            raise ValidationError("wordlist entries must be deduplicated", field="entries")
        for e in self.entries:
            if not e:
                raise ValidationError("wordlist entries must be non-empty", field="entries")
            if not self.alphabet.covers(e):
                raise ValidationError(
                    f"wordlist entry uses characters outside alphabet {self.alphabet.name!r}",
                    field="entries",
                )
            if not self.aux.accepts(e):
                raise ValidationError(
                    "wordlist entry violates the rule's aux constraint", field="entries"
                )
        object.__setattr__(
            self,
            "_index",
            frozenset(_match_key(e, self.aux.case_sensitive) for e in self.entries),
        )

    def cardinality(self) -> Cardinality:
        return len(self.entries)

    def generates(self, candidate: str) -> bool:
        if not self.alphabet.covers(candidate) or not self.aux.accepts(candidate):
            return False
        return _match_key(candidate, self.aux.case_sensitive) in self._index  # type: ignore[attr-defined]

    def candidates(self) -> Iterator[str]:
        return iter(self.entries)


@dataclass(frozen=True, kw_only=True)
class MangledWordlistRule(Rule):
    entries: tuple[str, ...]
    transforms: tuple[Transform, ...]

    kind = "mangled_wordlist"

    def __post_init__(self):
        if not self.transforms:
            raise ValidationError("mangled wordlist needs at least one transform", field="transforms")
        if len(set(self.entries)) != len(self.entries):
            raise ValidationError("wordlist entries must be deduplicated", field="entries")
        object.__setattr__(self, "_entry_set", frozenset(self.entries))
        # case maps lose source casing, so preimages are ambiguous; index
        # their images once (bounded by entry count, not the output space)
        case_images = {
            i: frozenset(t.apply(e) for e in self.entries)
            for i, t in enumerate(self.transforms)
            if t.kind in ("lowercase", "uppercase", "capitalize")
        }
        object.__setattr__(self, "_case_images", case_images)

    def cardinality(self) -> Cardinality:
        # upper bound: transforms may collide (Pass + lowercase == pass)
        return len(self.entries) * len(self.transforms)

    @property
    def cardinality_exact(self) -> bool:
        return False

    def _acceptable(self, candidate: str) -> bool:
        return self.alphabet.covers(candidate) and self.aux.accepts(candidate)

    def generates(self, candidate: str) -> bool:
        if not self._acceptable(candidate):
            return False
        for i, t in enumerate(self.transforms):
            images = self._case_images.get(i)  # type: ignore[attr-defined]
            if images is not None:
                if candidate in images:
                    return True
                continue
            for pre in t.preimages(candidate):
                if pre in self._entry_set and t.apply(pre) == candidate:  # type: ignore[attr-defined]
                    return True
        return False

    def candidates(self) -> Iterator[str]:
        for word in self.entries:
            for t in self.transforms:
                out = t.apply(word)
                if self._acceptable(out):
                    yield out


@dataclass(frozen=True, kw_only=True)
class CharClassRule(Rule):
    """All strings over a character class with lengths in the aux range."""

    charset: tuple[str, ...]

    kind = "char_class"

    def __post_init__(self):
        if not self.charset:
            raise ValidationError("character class must be non-empty", field="charset")
        if len(set(self.charset)) != len(self.charset):
            raise ValidationError("character class contains duplicates", field="charset")
        for c in self.charset:
            if c not in self.alphabet:
                raise ValidationError(
                    f"class character {c!r} outside alphabet {self.alphabet.name!r}",
                    field="charset",
                )
        object.__setattr__(self, "_class_set", frozenset(self.charset))

    def cardinality(self) -> Cardinality:
        return geometric_length_sum(len(self.charset), self.aux.min_length, self.aux.max_length)

    def generates(self, candidate: str) -> bool:
        if not self.aux.accepts(candidate):
            return False
        return all(c in self._class_set for c in candidate)  # type: ignore[attr-defined]

    def candidates(self) -> Iterator[str]:
        for length in range(self.aux.min_length, self.aux.max_length + 1):
            for combo in itertools.product(self.charset, repeat=length):
                yield "".join(combo)


@dataclass(frozen=True, kw_only=True)
class ExternalRule(Rule):
    """An externally supplied enumerable (e.g. a pretrained guessing model),
    registered with a declared cardinality and membership predicate. The
    engine never trains models; open-ended generators declare UNBOUNDED."""

    declared_cardinality: Cardinality
    membership: Callable[[str], bool]
    enumerator: Callable[[], Iterator[str]] | None = None
    exact: bool = True

    kind = "external"

    def cardinality(self) -> Cardinality:
        return self.declared_cardinality

    @property
    def cardinality_exact(self) -> bool:
        return self.exact

    def generates(self, candidate: str) -> bool:
        if not self.alphabet.covers(candidate) or not self.aux.accepts(candidate):
            return False
        return bool(self.membership(candidate))

    def candidates(self) -> Iterator[str]:
        if self.enumerator is None:
            raise ValidationError(
                f"external rule {self.id!r} declared no enumerator", field="rules"
            )
        return self.enumerator()


# -- factories with user-facing validation ----------------------------------

def make_char_class_rule(
    rule_id: str,
    alphabet: Alphabet,
    charset: str | tuple[str, ...],
    min_length: int,
    max_length: int,
) -> CharClassRule:
    if min_length < 1 or max_length < 1:
        raise ValidationError("lengths must be >= 1", field="rules")
    if min_length > max_length:
        raise ValidationError("min_length > max_length", field="rules")
    chars = tuple(charset)
    return CharClassRule(
        id=rule_id,
        alphabet=alphabet,
        aux=AuxConstraint(min_length=min_length, max_length=max_length, charset=frozenset(chars)),
        charset=chars,
    )


def make_wordlist_rule(
    rule_id: str,
    alphabet: Alphabet,
    entries: list[str] | tuple[str, ...],
    case_sensitive: bool = True,
) -> WordlistRule:
    deduped = tuple(dict.fromkeys(entries))
    if not deduped:
        raise ValidationError("wordlist is empty", field="rules")
    max_len = max(len(e) for e in deduped)
    aux = AuxConstraint(min_length=1, max_length=max_len, case_sensitive=case_sensitive)
    return WordlistRule(id=rule_id, alphabet=alphabet, aux=aux, entries=deduped)


def make_mangled_rule(
    rule_id: str,
    alphabet: Alphabet,
    entries: list[str] | tuple[str, ...],
    transforms: list[Transform] | tuple[Transform, ...],
) -> MangledWordlistRule:
    deduped = tuple(dict.fromkeys(entries))
    if not deduped:
        raise ValidationError("wordlist is empty", field="rules")
    ts = tuple(transforms)
    max_len = max(len(t.apply(e)) for e in deduped for t in ts) if ts else 0
    aux = AuxConstraint(min_length=1, max_length=max(max_len, 1))
    return MangledWordlistRule(
        id=rule_id, alphabet=alphabet, aux=aux, entries=deduped, transforms=ts
    )


# ---------------------------------------------------------------------------
# Combinations and topologies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UnionSize:
    value: Cardinality
    exact: bool


@dataclass(frozen=True)
class RuleCombination:
    """A finite set of rules with set-union generation semantics."""

    rules: tuple[Rule, ...]

    def __post_init__(self):
        if not self.rules:
            raise ValidationError("rule combination must be non-empty", field="rules")
        ids = [r.id for r in self.rules]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate rule ids in combination", field="rules")

    def generates(self, candidate: str) -> bool:
        return any(r.generates(candidate) for r in self.rules)

    def generating_rules(self, candidate: str) -> list[Rule]:
        return [r for r in self.rules if r.generates(candidate)]

    def union_cardinality(self) -> UnionSize:
        """Exact deduplicated size when computable without enumeration risk
        (all-wordlist members, or a single member), else the subadditive
        bound sum(|rule|)."""
        if all(isinstance(r, WordlistRule) for r in self.rules):
            seen: set[str] = set()
            for r in self.rules:
                seen.update(r.entries)  # type: ignore[attr-defined]
            return UnionSize(value=len(seen), exact=True)
        if len(self.rules) == 1:
            only = self.rules[0]
            return UnionSize(value=only.cardinality(), exact=only.cardinality_exact)
        total: Cardinality = 0
        for r in self.rules:
            total = total + r.cardinality()
        return UnionSize(value=total, exact=False)

    def by_id(self, rule_id: str) -> Rule:
        for r in self.rules:
            if r.id == rule_id:
                return r
        raise ValidationError(f"no rule with id {rule_id!r}", field="rules")


@dataclass(frozen=True)
class Topology:
    """A total try-order over distinct rules (a directed path)."""

    ordered_rules: tuple[Rule, ...]

    def __post_init__(self):
        if not self.ordered_rules:
            raise ValidationError("topology must be non-empty", field="topology")
        ids = [r.id for r in self.ordered_rules]
        if len(set(ids)) != len(ids):
            raise ValidationError("topology repeats a rule", field="topology")

    def as_combination(self) -> RuleCombination:
        return RuleCombination(rules=self.ordered_rules)


# ---------------------------------------------------------------------------
# Wordlist file format
# ---------------------------------------------------------------------------

def load_wordlist(path: str | Path) -> tuple[str, ...]:
    """Load a wordlist file: UTF-8, one entry per line, LF terminated,
    '#'-prefixed lines ignored, duplicates dropped, order preserved."""
    text = Path(path).read_text(encoding="utf-8")
    entries = []
    for line in text.split("\n"):
        line = line.rstrip("\r")
        if not line or line.startswith("#"):
            continue
        entries.append(line)
    return tuple(dict.fromkeys(entries))
