"""Desk-scale cracking-experiment simulator.

A simulated adversary enumerates candidate passwords rule by rule in its
try-order, applies the concrete protection transform, and compares against
the protected target. Time is simulated through budget accounting — the
number of guesses affordable within T at the adversary's effective rate —
never wall-clock, so experiments are deterministic and reproducible.

Enumeration order is fixed: topology order across rules (or declared
combination order; a randomizing adversary draws a seed-indexed
permutation), and within a rule the order documented in ``rules``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterable

from .errors import ValidationError
from .rules import Alphabet, Rule
from .strength import AdversaryModel, ProtectionFunction


def fnv1a_64(text: str) -> str:
    """Tiny non-cryptographic digest used as the default desk transform.

    Injectivity over the enumerated space is a fixture responsibility
    (see :func:`assert_injective`), not an engine guarantee.
    """
    h = 0xCBF29CE484222325
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return f"{h:016x}"


def assert_injective(transform: Callable[[str], str], candidates: Iterable[str]) -> None:
    """Raise if the transform collides anywhere over the given space."""
    seen: dict[str, str] = {}
    for cand in candidates:
        digest = transform(cand)
        prior = seen.get(digest)
        if prior is not None and prior != cand:
            raise ValidationError(
                f"transform collision between {prior!r} and {cand!r}", field="transform"
            )
        seen[digest] = cand


@dataclass(frozen=True)
class ExperimentSpec:
    alphabet: Alphabet
    protection: ProtectionFunction
    transform: Callable[[str], str]
    adversary: AdversaryModel
    threshold_seconds: Fraction
    year: int
    random_seed: int = 0
    target: str | None = None  # protected form of the password under `transform`
    max_simulated_guesses: int = 10_000_000  # desk-scale guard, not a semantic cap

    def __post_init__(self):
        if self.threshold_seconds <= 0:
            raise ValidationError("threshold T must be positive", field="threshold")

    def guess_budget(self) -> int:
        """Guesses affordable within T: floor(T * r0 * s(t) * mu(t) / cost)."""
        raw = (
            self.threshold_seconds
            * self.adversary.guess_rate
            * self.adversary.compute_scaling(self.year)
            * self.adversary.parallel_streams(self.year)
            / self.protection.cost_model
        )
        return max(math.floor(raw), 0)

    def seconds_per_guess(self) -> Fraction:
        return self.protection.cost_model / (
            self.adversary.guess_rate
            * self.adversary.compute_scaling(self.year)
            * self.adversary.parallel_streams(self.year)
        )

    def to_record(self) -> dict:
        return {
            "record_version": 1,
            "alphabet": self.alphabet.name,
            "protection": self.protection.id,
            "adversary": self.adversary.id,
            "threshold_seconds": float(self.threshold_seconds),
            "year": self.year,
            "random_seed": self.random_seed,
            "guess_budget": self.guess_budget(),
        }


@dataclass(frozen=True)
class ExperimentOutcome:
    result: int  # 1 = cracked within budget
    guesses_used: int
    cracked_candidate: str | None
    elapsed_simulated_seconds: Fraction
    guess_budget: int

    def __post_init__(self):
        if self.result == 1 and self.cracked_candidate is None:
            raise ValidationError("a cracked outcome must carry the candidate")
        if self.guesses_used > self.guess_budget:
            raise ValidationError("guesses exceed budget")

    def to_record(self) -> dict:
        return {
            "record_version": 1,
            "result": self.result,
            "guesses_used": self.guesses_used,
            "guess_budget": self.guess_budget,
            "elapsed_simulated_seconds": float(self.elapsed_simulated_seconds),
        }


def _try_order(spec: ExperimentSpec) -> tuple[Rule, ...]:
    adversary = spec.adversary
    if adversary.topology is not None:
        return adversary.topology.ordered_rules
    rules = adversary.rules.rules
    if adversary.randomize_rule_order and len(rules) > 1:
        perms = list(itertools.permutations(range(len(rules))))
        chosen = perms[spec.random_seed % len(perms)]
        return tuple(rules[i] for i in chosen)
    return rules


def run_experiment(spec: ExperimentSpec) -> ExperimentOutcome:
    """Enumerate candidates in try-order against the protected target.

    Stops at the first transform match or at budget exhaustion, whichever
    comes first. A zero budget is an immediate miss.
    """
    if spec.target is None:
        raise ValidationError("experiment spec has no target", field="target")
    budget = spec.guess_budget()
    if budget > spec.max_simulated_guesses:
        raise ValidationError(
            f"guess budget {budget} exceeds the desk-scale simulation guard "
            f"({spec.max_simulated_guesses}); lower T or the adversary rate, "
            "or raise max_simulated_guesses explicitly",
            field="threshold",
        )
    per_guess = spec.seconds_per_guess()

    guesses = 0
    for rule in _try_order(spec):
        for candidate in rule.candidates():
            if guesses >= budget:
                return ExperimentOutcome(
                    result=0,
                    guesses_used=guesses,
                    cracked_candidate=None,
                    elapsed_simulated_seconds=per_guess * guesses,
                    guess_budget=budget,
                )
            guesses += 1
            if spec.transform(candidate) == spec.target:
                return ExperimentOutcome(
                    result=1,
                    guesses_used=guesses,
                    cracked_candidate=candidate,
                    elapsed_simulated_seconds=per_guess * guesses,
                    guess_budget=budget,
                )
    return ExperimentOutcome(
        result=0,
        guesses_used=guesses,
        cracked_candidate=None,
        elapsed_simulated_seconds=per_guess * guesses,
        guess_budget=budget,
    )


@dataclass(frozen=True)
class FatSecureResult:
    secure: bool
    mean_result: Fraction
    trials: int
    outcomes: tuple[ExperimentOutcome, ...] = field(default=(), repr=False)

    def to_record(self) -> dict:
        return {
            "record_version": 1,
            "secure": self.secure,
            "mean_result": float(self.mean_result),
            "trials": self.trials,
        }


def fat_secure(password: str, spec: ExperimentSpec, trials: int = 1) -> FatSecureResult:
    """Empirical security label: run the experiment across seeded trials
    and call the password secure when the mean outcome is below one half.

    Deterministic adversaries need a single trial; randomizing adversaries
    get distinct seeds spec.random_seed + 0..trials-1.
    """
    if trials < 1:
        raise ValidationError("trials must be >= 1", field="trials")
    if not password:
        raise ValidationError("password must be non-empty", field="password")
    target = spec.transform(password)
    outcomes = tuple(
        run_experiment(replace(spec, target=target, random_seed=spec.random_seed + i))
        for i in range(trials)
    )
    mean = Fraction(sum(o.result for o in outcomes), trials)
    return FatSecureResult(
        secure=mean < Fraction(1, 2), mean_result=mean, trials=trials, outcomes=outcomes
    )
