"""Scoring pipeline: password -> parsings -> complexity -> strength verdict.

The engine is an immutable bundle of the configured alphabet, rules,
policy bounds, protection/adversary presets, and defaults. Scoring never
logs or persists the password; validation errors about it are phrased
without echoing it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .complexity import ComplexityReport, PolicyBounds, compute_report
from .errors import ValidationError
from .evaluation import EstimatorAdapter
from .parsing import EnumerationLimits
from .rules import Alphabet, RuleCombination, Topology
from .strength import (
    AdversaryModel,
    ProtectionFunction,
    StrengthVerdict,
    fat_strength_test,
)


@dataclass(frozen=True)
class ScoreResult:
    complexity: ComplexityReport
    verdict: StrengthVerdict
    adversary_id: str
    protection_id: str

    def to_record(self) -> dict:
        record = {"record_version": 1}
        record.update(self.complexity.to_record())
        record.update(self.verdict.to_record())
        record["adversary"] = self.adversary_id
        record["protection"] = self.protection_id
        return record


def canonical_record_json(record: dict) -> str:
    """The one serialization both the CLI and the service emit, so their
    outputs are byte-identical for identical inputs."""
    return json.dumps(record, sort_keys=True, indent=2)


def _as_fraction(value, field_name: str) -> Fraction:
    """Exact rational from caller input; floats go through their decimal
    string form so an API "0.1" means one tenth."""
    if isinstance(value, bool) or value is None:
        raise ValidationError(f"{field_name} must be a number", field=field_name)
    try:
        if isinstance(value, float):
            return Fraction(str(value))
        return Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ValidationError(f"{field_name} must be a number", field=field_name)


@dataclass(frozen=True)
class Engine:
    alphabet: Alphabet
    combination: RuleCombination
    bounds: PolicyBounds
    limits: EnumerationLimits
    protections: dict[str, ProtectionFunction]
    adversaries: dict[str, AdversaryModel]
    default_protection: str
    default_adversary: str
    threshold_seconds: Fraction
    evaluation_year: int
    topology: Topology | None = None
    literal_scaling: bool = False
    source: dict = field(default_factory=dict, repr=False)  # parsed config, for echo

    def __post_init__(self):
        if self.default_protection not in self.protections:
            raise ValidationError(
                f"default protection {self.default_protection!r} not defined",
                field="defaults.protection",
            )
        if self.default_adversary not in self.adversaries:
            raise ValidationError(
                f"default adversary {self.default_adversary!r} not defined",
                field="defaults.adversary",
            )

    def resolve_protection(self, protection_id: str | None) -> ProtectionFunction:
        pid = protection_id or self.default_protection
        if pid not in self.protections:
            raise ValidationError(f"unknown protection {pid!r}", field="protection")
        return self.protections[pid]

    def resolve_adversary(self, adversary_id: str | None) -> AdversaryModel:
        aid = adversary_id or self.default_adversary
        if aid not in self.adversaries:
            raise ValidationError(f"unknown adversary {aid!r}", field="adversary")
        return self.adversaries[aid]

    def score(
        self,
        password: str,
        adversary_id: str | None = None,
        protection_id: str | None = None,
        threshold_seconds: Fraction | int | float | str | None = None,
        year: int | None = None,
    ) -> ScoreResult:
        """All applicable complexity estimates, then the strength test with
        the minimum estimate."""
        if not password:
            raise ValidationError("password must be non-empty", field="password")
        if not self.alphabet.covers(password):
            # deliberately does not say which characters: no echo of input
            raise ValidationError(
                "password contains characters outside the configured alphabet",
                field="password",
            )
        adversary = self.resolve_adversary(adversary_id)
        protection = self.resolve_protection(protection_id)
        if threshold_seconds is None:
            threshold = self.threshold_seconds
        else:
            threshold = _as_fraction(threshold_seconds, "t_seconds")
        if year is None:
            eval_year = self.evaluation_year
        elif isinstance(year, bool) or not isinstance(year, int):
            raise ValidationError("year must be an integer", field="year")
        else:
            eval_year = year

        report = compute_report(
            password, self.combination, self.bounds, self.limits, self.topology
        )
        verdict = fat_strength_test(
            report.eta_final,
            protection,
            adversary,
            eval_year,
            threshold,
            literal_scaling=self.literal_scaling,
        )
        return ScoreResult(
            complexity=report,
            verdict=verdict,
            adversary_id=adversary.id,
            protection_id=protection.id,
        )

    def self_estimator(self) -> EstimatorAdapter:
        """This engine's own strength test packaged as an estimator: marks a
        password secure exactly when the hypothesis test returns H1 for the
        given adversary description."""
        bounds = self.bounds
        limits = self.limits
        year = self.evaluation_year
        literal = self.literal_scaling

        def mark(alphabet, protection, adversary, password, threshold_seconds, aux) -> int:
            report = compute_report(
                password, adversary.rules, bounds, limits, adversary.topology
            )
            verdict = fat_strength_test(
                report.eta_final,
                protection,
                adversary,
                year,
                threshold_seconds,
                literal_scaling=literal,
            )
            return 1 if verdict.hypothesis == "H1" else 0

        return EstimatorAdapter(id="engine", mark=mark)

    def redacted_config(self) -> dict:
        """Config echo safe to expose over the service: structure and
        presets, never wordlist contents."""
        from .cardinality import bits  # local import to keep module deps flat

        return {
            "alphabet": {"name": self.alphabet.name, "size": self.alphabet.size},
            "bounds": {
                "min_length": self.bounds.min_length,
                "max_length": self.bounds.max_length,
            },
            "rules": [
                {
                    "id": r.id,
                    "kind": r.kind,
                    "cardinality_bits": round(bits(r.cardinality()), 4),
                    "cardinality_exact": r.cardinality_exact,
                }
                for r in self.combination.rules
            ],
            "topology": (
                [r.id for r in self.topology.ordered_rules] if self.topology else None
            ),
            "protections": [
                {
                    "id": p.id,
                    "cost_model_seconds_per_guess": float(p.cost_model),
                    "description": p.description,
                }
                for p in self.protections.values()
            ],
            "adversaries": [
                {
                    "id": a.id,
                    "baseline_year": a.baseline_year,
                    "baseline_guess_rate": float(a.guess_rate),
                }
                for a in self.adversaries.values()
            ],
            "defaults": {
                "adversary": self.default_adversary,
                "protection": self.default_protection,
                "t_seconds": float(self.threshold_seconds),
                "year": self.evaluation_year,
            },
            "limits": {
                "max_segments": self.limits.max_segments,
                "max_parsings": self.limits.max_parsings,
            },
            "literal_scaling": self.literal_scaling,
        }
