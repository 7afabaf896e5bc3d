"""Search-space complexity estimates for a password under a rule combination.

Four estimates, all exact integers internally:

* ``eta_upper`` — brute-force space size: sum over lengths k..l of |alpha|**i.
* ``eta_lower_rule`` — smallest cardinality among rules generating the whole
  password; the upper bound when none does.
* ``eta_chain`` — minimum over parsings of the product of per-segment costs,
  where a segment costs the cheapest generating rule or |alpha|**len as the
  brute-force fallback. This is where multipart passwords (digit + word +
  word) collapse far below the whole-password bounds.
* ``eta_order_aware`` — guesses accumulated along a try-order topology up to
  and including the first rule that generates the password.

All estimates are capped at ``eta_upper``: a partitioned brute force is
never harder than brute-forcing the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cardinality import UNBOUNDED, Cardinality, bits, geometric_length_sum, is_finite
from .errors import ValidationError
from .parsing import (
    EnumerationLimits,
    Parsing,
    conformant_parsings,
    format_parsing,
)
from .rules import Alphabet, RuleCombination, Topology


@dataclass(frozen=True)
class PolicyBounds:
    """Password-policy length window [k, l] over an alphabet."""

    alphabet: Alphabet
    min_length: int
    max_length: int

    def __post_init__(self):
        if self.min_length < 1:
            raise ValidationError("policy min_length must be >= 1", field="bounds")
        if self.max_length < self.min_length:
            raise ValidationError("policy max_length < min_length", field="bounds")


def eta_upper(bounds: PolicyBounds) -> int:
    """Exact cardinality of the full search space under the policy bounds."""
    return geometric_length_sum(bounds.alphabet.size, bounds.min_length, bounds.max_length)


def eta_lower_rule(password: str, combination: RuleCombination, bounds: PolicyBounds) -> int:
    """Minimum cardinality over rules that generate the whole password.

    Rules that cannot generate it contribute nothing (their cardinality is
    treated as infinite); if no rule generates it, the lower bound equals
    the upper bound. Capped at eta_upper.
    """
    if not password:
        raise ValidationError("password must be non-empty", field="password")
    upper = eta_upper(bounds)
    finite_cards = [
        r.cardinality()
        for r in combination.rules
        if is_finite(r.cardinality()) and r.generates(password)
    ]
    if not finite_cards:
        return upper
    return min(min(finite_cards), upper)


@dataclass(frozen=True)
class SegmentCost:
    segment: str
    rule_id: str | None  # None = brute-force fallback
    cost: int


@dataclass(frozen=True)
class ChainResult:
    value: int
    parsing: Parsing | None
    segment_costs: tuple[SegmentCost, ...]
    exact: bool  # False when parsing enumeration truncated: value is only an upper bound
    capped: bool  # True when the eta_upper cap bound the result

    def __post_init__(self):
        if self.parsing is not None:
            recomputed = 1
            for sc in self.segment_costs:
                recomputed *= sc.cost
            if recomputed != self.value:
                raise ValidationError("segment costs do not reproduce chain value")


def eta_chain(
    password: str,
    combination: RuleCombination,
    bounds: PolicyBounds,
    limits: EnumerationLimits | None = None,
) -> ChainResult:
    """Minimum product of per-segment costs over all conformant parsings.

    Tie-break: fewest segments, then earliest in the deterministic parsing
    order (both fall out of scanning parsings in enumeration order and
    keeping strict improvements). When the cap binds, no parsing attains
    the returned value, so none is reported.
    """
    upper = eta_upper(bounds)
    pset = conformant_parsings(combination, password, limits)
    alpha_size = bounds.alphabet.size

    cost_cache: dict[str, tuple[int, str | None]] = {}

    def segment_cost(segment: str) -> tuple[int, str | None]:
        cached = cost_cache.get(segment)
        if cached is None:
            best: int = alpha_size ** len(segment)
            best_rule: str | None = None
            for r in combination.rules:
                c = r.cardinality()
                if is_finite(c) and c < best and r.generates(segment):
                    best, best_rule = c, r.id
            cached = (best, best_rule)
            cost_cache[segment] = cached
        return cached

    best_value: int | None = None
    best_parsing: Parsing | None = None
    best_costs: tuple[SegmentCost, ...] = ()
    for parsing in pset.parsings:
        value = 1
        for seg in parsing.segments:
            value *= segment_cost(seg)[0]
        if best_value is None or value < best_value:
            best_value = value
            best_parsing = parsing
            best_costs = tuple(
                SegmentCost(segment=s, rule_id=segment_cost(s)[1], cost=segment_cost(s)[0])
                for s in parsing.segments
            )

    assert best_value is not None and best_parsing is not None
    if best_value > upper:
        return ChainResult(
            value=upper, parsing=None, segment_costs=(), exact=not pset.truncated, capped=True
        )
    return ChainResult(
        value=best_value,
        parsing=best_parsing,
        segment_costs=best_costs,
        exact=not pset.truncated,
        capped=False,
    )


def eta_order_aware(password: str, topology: Topology, bounds: PolicyBounds) -> int:
    """Guesses accumulated along the topology until the password's rule.

    Sums member cardinalities in try-order up to and including the first
    rule that generates the whole password; the upper bound when no rule
    does, or when an unbounded rule precedes the generating one (the
    accumulated sum absorbs to infinity and the cap takes over).
    """
    if not password:
        raise ValidationError("password must be non-empty", field="password")
    upper = eta_upper(bounds)
    accumulated: Cardinality = 0
    for rule in topology.ordered_rules:
        accumulated = accumulated + rule.cardinality()
        if rule.generates(password):
            return min(accumulated, upper)
    return upper


def eta_order_unknown(password: str, combination: RuleCombination, bounds: PolicyBounds) -> int:
    """Minimum of the order-aware estimate over every possible try-order.

    The order that places a generating rule first is always minimal, so
    this reduces to the smallest generating-rule cardinality — the same
    value as eta_lower_rule. The reduction is asserted by the test suite
    against brute force over all permutations, not assumed here.
    """
    if not password:
        raise ValidationError("password must be non-empty", field="password")
    upper = eta_upper(bounds)
    best: Cardinality = UNBOUNDED
    for rule in combination.rules:
        card = rule.cardinality()
        if is_finite(card) and card < best and rule.generates(password):
            best = card
    if best is UNBOUNDED:
        return upper
    return min(best, upper)


# ---------------------------------------------------------------------------
# Combined report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexityReport:
    eta_upper: int
    eta_lower_rule: int
    eta_chain: int
    eta_order_aware: int | None
    eta_final: int
    normalized: float
    minimizing_parsing: Parsing | None
    per_segment_costs: tuple[SegmentCost, ...]
    chain_exact: bool
    chain_capped: bool

    def to_record(self) -> dict:
        return {
            "eta_upper_bits": round(bits(self.eta_upper), 4),
            "eta_lower_rule_bits": round(bits(self.eta_lower_rule), 4),
            "eta_chain_bits": round(bits(self.eta_chain), 4),
            "eta_order_aware_bits": (
                round(bits(self.eta_order_aware), 4)
                if self.eta_order_aware is not None
                else None
            ),
            "eta_final_bits": round(bits(self.eta_final), 4),
            "normalized": round(self.normalized, 4),
            "minimizing_parsing": (
                format_parsing(self.minimizing_parsing)
                if self.minimizing_parsing is not None
                else None
            ),
            "per_segment_costs": [
                {
                    "segment": sc.segment,
                    "rule": sc.rule_id if sc.rule_id is not None else "fallback",
                    "cost_bits": round(bits(sc.cost), 4),
                }
                for sc in self.per_segment_costs
            ],
            "truncated": not self.chain_exact,
            "capped": self.chain_capped,
        }

    def to_text(self) -> str:
        lines = [
            f"upper bound        : {bits(self.eta_upper):10.4f} bits",
            f"whole-password rule: {bits(self.eta_lower_rule):10.4f} bits",
            f"chain rule         : {bits(self.eta_chain):10.4f} bits"
            + ("" if self.chain_exact else "  (truncated: upper bound only)"),
        ]
        if self.eta_order_aware is not None:
            lines.append(f"order aware        : {bits(self.eta_order_aware):10.4f} bits")
        lines.append(f"final complexity   : {bits(self.eta_final):10.4f} bits")
        lines.append(f"normalized         : {self.normalized:10.4f}")
        if self.minimizing_parsing is not None:
            lines.append(f"minimizing parsing : {format_parsing(self.minimizing_parsing)}")
            for sc in self.per_segment_costs:
                priced_by = sc.rule_id if sc.rule_id is not None else "fallback"
                lines.append(f"  {sc.segment!r} <- {priced_by} ({bits(sc.cost):.4f} bits)")
        return "\n".join(lines)


def compute_report(
    password: str,
    combination: RuleCombination,
    bounds: PolicyBounds,
    limits: EnumerationLimits | None = None,
    topology: Topology | None = None,
) -> ComplexityReport:
    """Run every applicable estimate and normalize the minimum."""
    upper = eta_upper(bounds)
    lower = eta_lower_rule(password, combination, bounds)
    chain = eta_chain(password, combination, bounds, limits)
    order = eta_order_aware(password, topology, bounds) if topology is not None else None

    candidates = [lower, chain.value]
    if order is not None:
        candidates.append(order)
    final = min(candidates)

    if upper <= 1:
        normalized = 0.0
    else:
        normalized = bits(final) / bits(upper) if final > 0 else 0.0

    return ComplexityReport(
        eta_upper=upper,
        eta_lower_rule=lower,
        eta_chain=chain.value,
        eta_order_aware=order,
        eta_final=final,
        normalized=normalized,
        minimizing_parsing=chain.parsing,
        per_segment_costs=chain.segment_costs,
        chain_exact=chain.exact,
        chain_capped=chain.capped,
    )
