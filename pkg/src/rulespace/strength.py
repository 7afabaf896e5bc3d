"""Time-to-crack strength verdicts.

The binary hypothesis test compares estimated time-to-crack against an
acceptable threshold T: H1 (strong) when cracking is expected to take at
least T seconds, H0 otherwise. Time arithmetic stays in exact rationals
until display so verdicts at the T boundary are deterministic.

The adversary's compute power scales with the calendar year (doubling
every two years by default); power and parallelism divide the time to
crack — faster attackers mean weaker passwords. The literal multiplicative
placement of the scaling factor is available behind ``literal_scaling``
for comparison, with the caveat that it makes passwords look stronger as
attackers get faster.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Union

from .cardinality import UNBOUNDED, Cardinality, bits, is_finite, _Unbounded
from .errors import ValidationError
from .rules import RuleCombination, Topology

Seconds = Union[Fraction, _Unbounded]

# sqrt(2) to 30 decimal digits as an exact rational: odd year offsets get a
# deterministic rational approximation, even offsets stay exact powers of two
_SQRT2 = Fraction(math.isqrt(2 * 10**60), 10**30)


def moore_scaling(baseline_year: int, year: int) -> Fraction:
    """Relative computing power after (year - baseline_year) years of
    doubling every two years: 2**((year - baseline) / 2)."""
    if year < baseline_year:
        raise ValidationError("year precedes the baseline year", field="year")
    offset = year - baseline_year
    power = Fraction(2) ** (offset // 2)
    return power * _SQRT2 if offset % 2 else power


def doubling_scaling(baseline_year: int, period_years: int = 2) -> Callable[[int], Fraction]:
    """Scaling function that doubles every ``period_years``."""
    if period_years < 1:
        raise ValidationError("doubling period must be >= 1", field="scaling")

    def scale(year: int) -> Fraction:
        if year < baseline_year:
            raise ValidationError("year precedes the baseline year", field="year")
        offset = year - baseline_year
        whole, rem = divmod(offset, period_years)
        power = Fraction(2) ** whole
        if rem == 0:
            return power
        # fractional periods: deterministic rational approximation of 2**(rem/period)
        approx = Fraction(str(round(2 ** (rem / period_years), 12)))
        return power * approx

    return scale


def table_scaling(table: Mapping[int, Fraction | int]) -> Callable[[int], Fraction]:
    """Step-function scaling from explicit (year -> factor) entries; years
    between entries use the largest listed year not after them."""
    if not table:
        raise ValidationError("scaling table is empty", field="scaling")
    entries = sorted((int(y), Fraction(v)) for y, v in table.items())

    def scale(year: int) -> Fraction:
        if year < entries[0][0]:
            raise ValidationError("year precedes the scaling table", field="year")
        chosen = entries[0][1]
        for y, v in entries:
            if y <= year:
                chosen = v
            else:
                break
        return chosen

    return scale


def constant_parallelism(processors: int = 1) -> Callable[[int], int]:
    if processors < 1:
        raise ValidationError("parallelism must be >= 1", field="parallelism")
    return lambda year: processors


@dataclass(frozen=True)
class ProtectionFunction:
    """A password-storage transform characterized by its relative guessing
    cost: seconds per guess against the reference attacker rate."""

    id: str
    cost_model: Fraction
    description: str = ""

    def __post_init__(self):
        if self.cost_model <= 0:
            raise ValidationError("cost_model must be positive", field="protection")


PROTECTION_PRESETS: dict[str, ProtectionFunction] = {
    "fast_hash": ProtectionFunction(
        id="fast_hash", cost_model=Fraction(1), description="unsalted fast hash (unit reference cost)"
    ),
    "iterated_hash_10k": ProtectionFunction(
        id="iterated_hash_10k", cost_model=Fraction(10_000), description="iterated hash, 10k rounds"
    ),
    "memory_hard_kdf": ProtectionFunction(
        id="memory_hard_kdf", cost_model=Fraction(1_000_000), description="memory-hard key derivation"
    ),
}


@dataclass(frozen=True)
class AdversaryModel:
    """Everything the attacker brings: guessing rate, compute growth,
    parallel hardware, rules, and an optional committed try-order."""

    id: str
    baseline_year: int
    guess_rate: Fraction  # guesses/second at the baseline year against unit-cost protection
    rules: RuleCombination
    topology: Topology | None = None
    scaling: Callable[[int], Fraction] | None = None  # None = doubling every 2 years
    parallelism: Callable[[int], int] | None = None  # None = single stream
    randomize_rule_order: bool = False  # no committed order: draw one per experiment seed
    aux: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.guess_rate <= 0:
            raise ValidationError("guess_rate must be positive", field="adversary")

    def compute_scaling(self, year: int) -> Fraction:
        if self.scaling is not None:
            return self.scaling(year)
        return moore_scaling(self.baseline_year, year)

    def parallel_streams(self, year: int) -> int:
        streams = 1 if self.parallelism is None else self.parallelism(year)
        if streams < 1:
            raise ValidationError("parallelism must be >= 1", field="parallelism")
        return streams


def time_to_crack(
    eta: Cardinality,
    f: ProtectionFunction,
    adversary: AdversaryModel,
    year: int,
    literal_scaling: bool = False,
) -> Seconds:
    """Expected seconds to exhaust ``eta`` guesses against ``f`` at ``year``.

    Default placement divides by compute scaling and parallelism; the
    literal placement multiplies scaling instead.
    """
    if year < adversary.baseline_year:
        raise ValidationError("evaluation year precedes adversary baseline", field="year")
    if not is_finite(eta):
        return UNBOUNDED
    if not isinstance(eta, int) or eta < 0:
        raise ValidationError("eta must be a non-negative cardinality", field="eta")
    scale = adversary.compute_scaling(year)
    streams = adversary.parallel_streams(year)
    if literal_scaling:
        return (f.cost_model * scale * eta) / (adversary.guess_rate * streams)
    return (f.cost_model * eta) / (adversary.guess_rate * scale * streams)


@dataclass(frozen=True)
class StrengthVerdict:
    hypothesis: str  # "H1" = strong, "H0" = not strong
    estimated_ttc_seconds: Seconds
    threshold_seconds: Fraction
    evaluation_year: int
    eta_used: Cardinality

    def __post_init__(self):
        strong = self.estimated_ttc_seconds >= self.threshold_seconds
        if (self.hypothesis == "H1") != strong:
            raise ValidationError("verdict inconsistent with its own inputs")

    def to_record(self) -> dict:
        return {
            "hypothesis": self.hypothesis,
            "fat_strong": self.hypothesis == "H1",
            "estimated_ttc_seconds": _seconds_to_float(self.estimated_ttc_seconds),
            "estimated_ttc_display": humanize_seconds(self.estimated_ttc_seconds),
            "threshold_seconds": _seconds_to_float(self.threshold_seconds),
            "evaluation_year": self.evaluation_year,
            "eta_used_bits": round(bits(self.eta_used), 4),
        }


def fat_strength_test(
    eta: Cardinality,
    f: ProtectionFunction,
    adversary: AdversaryModel,
    year: int,
    threshold_seconds: Fraction | int,
    literal_scaling: bool = False,
) -> StrengthVerdict:
    """H1 when time-to-crack is at least the acceptable threshold T.

    The boundary belongs to H1: a password expected to survive exactly T
    seconds meets the requirement.
    """
    threshold = Fraction(threshold_seconds)
    if threshold <= 0:
        raise ValidationError("threshold T must be positive", field="threshold")
    ttc = time_to_crack(eta, f, adversary, year, literal_scaling=literal_scaling)
    hypothesis = "H1" if ttc >= threshold else "H0"
    return StrengthVerdict(
        hypothesis=hypothesis,
        estimated_ttc_seconds=ttc,
        threshold_seconds=threshold,
        evaluation_year=year,
        eta_used=eta,
    )


# ---------------------------------------------------------------------------
# Display helpers
# ---------------------------------------------------------------------------

def _seconds_to_float(value: Seconds) -> float | None:
    if not is_finite(value):
        return None
    try:
        return float(value)
    except OverflowError:
        return math.inf


_UNITS = (
    ("century", Fraction(100 * 365 * 24 * 3600)),
    ("year", Fraction(365 * 24 * 3600)),
    ("day", Fraction(24 * 3600)),
    ("hour", Fraction(3600)),
    ("minute", Fraction(60)),
    ("second", Fraction(1)),
)


def humanize_seconds(value: Seconds) -> str:
    if not is_finite(value):
        return "unbounded"
    if value < Fraction(1):
        return "less than a second"
    for name, unit in _UNITS:
        if value >= unit:
            count = value / unit
            if count >= 1000 and name == "century":
                return "millennia"
            shown = int(count) if count == int(count) else round(float(count), 1)
            plural = "" if shown == 1 else "s"
            return f"{shown} {name}{plural}"
    return "less than a second"
