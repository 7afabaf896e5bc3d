"""Estimator evaluation against oracle ground truth.

An estimator marks each test password secure (1) or not (0); the cracking
simulator provides the ground-truth label. The two failure modes are kept
separate: marking insecure passwords as secure breaks *reliability*,
marking secure passwords as insecure breaks *inclusion*, and an estimator
is *accurate* only when both fractions stay within the epsilon threshold
(default 1/|P|, boundary inclusive). Fractions are exact rationals so the
boundary comparison is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Mapping

from .errors import ValidationError
from .oracle import ExperimentSpec, fat_secure
from .rules import Alphabet
from .strength import AdversaryModel, ProtectionFunction

# Def-style estimator inputs: alphabet, protection, adversary description,
# password, acceptable time T, free-form aux.
MarkFn = Callable[
    [Alphabet, ProtectionFunction, AdversaryModel, str, Fraction, Mapping], int
]


@dataclass(frozen=True)
class EstimatorAdapter:
    id: str
    mark: MarkFn


@dataclass(frozen=True)
class PasswordRecord:
    password: str
    oracle_secure: bool
    estimator_mark: int | None  # None when the estimator failed
    estimator_error: str | None = None

    @property
    def false_secure(self) -> bool:
        return (self.estimator_mark == 1 and not self.oracle_secure) or (
            self.estimator_mark is None
        )

    @property
    def false_insecure(self) -> bool:
        return (self.estimator_mark == 0 and self.oracle_secure) or (
            self.estimator_mark is None
        )


@dataclass(frozen=True)
class EvaluationReport:
    estimator_id: str
    test_set_size: int
    false_secure_fraction: Fraction
    false_insecure_fraction: Fraction
    epsilon: Fraction
    reliable: bool
    inclusive: bool
    accurate: bool
    estimator_errors: int
    per_password_records: tuple[PasswordRecord, ...]

    def to_record(self) -> dict:
        return {
            "record_version": 1,
            "estimator": self.estimator_id,
            "test_set_size": self.test_set_size,
            "false_secure_fraction": float(self.false_secure_fraction),
            "false_insecure_fraction": float(self.false_insecure_fraction),
            "epsilon": float(self.epsilon),
            "reliable": self.reliable,
            "inclusive": self.inclusive,
            "accurate": self.accurate,
            "estimator_errors": self.estimator_errors,
            "per_password": [
                {
                    "password": r.password,
                    "oracle_secure": r.oracle_secure,
                    "mark": r.estimator_mark,
                    "error": r.estimator_error,
                }
                for r in self.per_password_records
            ],
        }

    def summary_table(self) -> str:
        rows = [
            ("estimator", self.estimator_id),
            ("test set size", str(self.test_set_size)),
            ("false-secure fraction", f"{float(self.false_secure_fraction):.4f}"),
            ("false-insecure fraction", f"{float(self.false_insecure_fraction):.4f}"),
            ("epsilon", f"{float(self.epsilon):.4f}"),
            ("reliable", "yes" if self.reliable else "NO"),
            ("inclusive", "yes" if self.inclusive else "NO"),
            ("accurate", "yes" if self.accurate else "NO"),
        ]
        if self.estimator_errors:
            rows.append(("estimator errors", str(self.estimator_errors)))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k:<{width}}  {v}" for k, v in rows)


def default_epsilon(test_set_size: int) -> Fraction:
    return Fraction(1, test_set_size)


def evaluate(
    estimator: EstimatorAdapter,
    test_set: list[str] | tuple[str, ...],
    oracle_spec: ExperimentSpec,
    trials: int = 1,
    epsilon_fn: Callable[[int], Fraction] | None = None,
) -> EvaluationReport:
    """Label each test password with the simulator, collect estimator marks,
    and compare failure fractions against epsilon(|P|).

    An estimator exception on any password counts against both metrics and
    is flagged in the report rather than aborting the run.
    """
    if not test_set:
        raise ValidationError("test set is empty", field="test_set")
    epsilon_fn = epsilon_fn or default_epsilon
    n = len(test_set)
    epsilon = epsilon_fn(n)

    records: list[PasswordRecord] = []
    for i, password in enumerate(test_set):
        truth = fat_secure(
            password, replace(oracle_spec, random_seed=oracle_spec.random_seed + i * trials),
            trials=trials,
        )
        mark: int | None
        error: str | None = None
        try:
            mark = int(
                estimator.mark(
                    oracle_spec.alphabet,
                    oracle_spec.protection,
                    oracle_spec.adversary,
                    password,
                    oracle_spec.threshold_seconds,
                    dict(oracle_spec.adversary.aux),
                )
            )
            if mark not in (0, 1):
                raise ValidationError(f"estimator returned {mark}, expected 0 or 1")
        except Exception as exc:  # estimator failures are data, not crashes
            mark = None
            error = f"{type(exc).__name__}: {exc}"
        records.append(
            PasswordRecord(
                password=password,
                oracle_secure=truth.secure,
                estimator_mark=mark,
                estimator_error=error,
            )
        )

    false_secure = Fraction(sum(1 for r in records if r.false_secure), n)
    false_insecure = Fraction(sum(1 for r in records if r.false_insecure), n)
    reliable = false_secure <= epsilon
    inclusive = false_insecure <= epsilon
    return EvaluationReport(
        estimator_id=estimator.id,
        test_set_size=n,
        false_secure_fraction=false_secure,
        false_insecure_fraction=false_insecure,
        epsilon=epsilon,
        reliable=reliable,
        inclusive=inclusive,
        accurate=reliable and inclusive,
        estimator_errors=sum(1 for r in records if r.estimator_error is not None),
        per_password_records=tuple(records),
    )


# ---------------------------------------------------------------------------
# Built-in estimators
# ---------------------------------------------------------------------------

def length_threshold_estimator(min_length: int = 8) -> EstimatorAdapter:
    """The classic policy baseline: long enough means secure."""

    def mark(alphabet, protection, adversary, password, threshold_seconds, aux) -> int:
        return 1 if len(password) >= min_length else 0

    return EstimatorAdapter(id=f"length{min_length}", mark=mark)
