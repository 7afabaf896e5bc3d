import math
import random
import string

import pytest

from rulespace.complexity import (
    PolicyBounds,
    compute_report,
    eta_chain,
    eta_lower_rule,
    eta_order_aware,
    eta_order_unknown,
    eta_upper,
)
from rulespace.cardinality import UNBOUNDED, bits
from rulespace.errors import ValidationError
from rulespace.parsing import EnumerationLimits
from rulespace.rules import (
    Alphabet,
    AuxConstraint,
    ExternalRule,
    RuleCombination,
    Topology,
    make_char_class_rule,
    make_wordlist_rule,
)

from helpers import brute_chain_min, brute_class_strings, brute_order_aware

ALNUM = Alphabet.from_string("alnum62", string.ascii_letters + string.digits)
LOWER = Alphabet.from_string("lower", string.ascii_lowercase)
TOY = Alphabet.from_string("toy", "ab1")


@pytest.fixture(scope="module")
def twenty_k_words():
    entries = [f"word{i:05d}" for i in range(20_000)]
    entries[100] = "Love"
    entries[200] = "Soccer"
    return make_wordlist_rule("words", ALNUM, entries)


@pytest.fixture(scope="module")
def single_digit():
    return make_char_class_rule("digit", ALNUM, "0123456789", 1, 1)


@pytest.fixture(scope="module")
def digits_1_4():
    return make_char_class_rule("digits", ALNUM, "0123456789", 1, 4)


# ---------------------------------------------------------------------------
# eta_upper
# ---------------------------------------------------------------------------

def test_eta_upper_lowercase_eight():
    bounds = PolicyBounds(alphabet=LOWER, min_length=8, max_length=8)
    assert eta_upper(bounds) == 208_827_064_576


def test_eta_upper_tiny():
    two = Alphabet.from_string("two", "01")
    assert eta_upper(PolicyBounds(alphabet=two, min_length=1, max_length=2)) == 6


def test_eta_upper_matches_independent_summation():
    bounds = PolicyBounds(alphabet=ALNUM, min_length=6, max_length=15)
    expected = 0
    for i in range(6, 16):
        term = 1
        for _ in range(i):
            term *= 62
        expected += term
    assert eta_upper(bounds) == expected


def test_policy_bounds_validation():
    with pytest.raises(ValidationError):
        PolicyBounds(alphabet=ALNUM, min_length=0, max_length=4)
    with pytest.raises(ValidationError):
        PolicyBounds(alphabet=ALNUM, min_length=5, max_length=4)


# ---------------------------------------------------------------------------
# eta_lower_rule
# ---------------------------------------------------------------------------

def test_lower_rule_picks_smallest_generating_rule(digits_1_4, twenty_k_words):
    combo = RuleCombination(rules=(digits_1_4, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    assert eta_lower_rule("555", combo, bounds) == 11_110
    assert eta_lower_rule("Love", combo, bounds) == 20_000


def test_lower_rule_falls_back_to_upper_bound(digits_1_4, twenty_k_words):
    combo = RuleCombination(rules=(digits_1_4, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    assert eta_lower_rule("zqx9!", combo, bounds) == eta_upper(bounds)


def test_lower_rule_ignores_unbounded_rules(twenty_k_words):
    open_model = ExternalRule(
        id="model", alphabet=ALNUM, aux=AuxConstraint(1, 16),
        declared_cardinality=UNBOUNDED, membership=lambda s: True,
    )
    combo = RuleCombination(rules=(open_model, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    assert eta_lower_rule("Love", combo, bounds) == 20_000
    # unbounded is never "the smallest subset": fallback applies instead
    only_model = RuleCombination(rules=(open_model,))
    assert eta_lower_rule("Love", only_model, bounds) == eta_upper(bounds)


# ---------------------------------------------------------------------------
# eta_chain
# ---------------------------------------------------------------------------

def test_chain_golden_example(single_digit, twenty_k_words):
    combo = RuleCombination(rules=(single_digit, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    got = eta_chain("1LoveSoccer", combo, bounds)
    assert got.value == 10 * 20_000 * 20_000
    assert bits(got.value) == pytest.approx(31.8974, abs=1e-4)
    assert got.parsing is not None
    assert got.parsing.segments == ("1", "Love", "Soccer")
    assert [(sc.segment, sc.rule_id, sc.cost) for sc in got.segment_costs] == [
        ("1", "digit", 10), ("Love", "words", 20_000), ("Soccer", "words", 20_000),
    ]
    assert not got.capped
    # 11 characters exceed the default 8-segment window, so the default
    # answer is flagged as a bound; widening the window confirms it's tight
    assert not got.exact
    full = eta_chain(
        "1LoveSoccer", combo, bounds, EnumerationLimits(max_segments=11, max_parsings=2**20)
    )
    assert full.exact and full.value == got.value


def test_chain_specific_parsing_cost_uses_min_semantics(single_digit, twenty_k_words):
    # cost of the parsing 1|Lov|eSoccer: the digit rule prices "1" at 10,
    # below the 62-way single-character fallback, and both word segments
    # fall back, so the product is 10 * 62**3 * 62**7 = 10 * 62**10
    # (62.8639 bits). An all-fallback costing of the same parsing would be
    # 62**11 = 65.4962 bits.
    combo = RuleCombination(rules=(single_digit, twenty_k_words))
    per_seg = {
        "1": 10,          # min(digit 10, fallback 62)
        "Lov": 62**3,     # fallback
        "eSoccer": 62**7, # fallback
    }
    cost = 1
    for seg in ("1", "Lov", "eSoccer"):
        generating = [r.cardinality() for r in combo.rules if r.generates(seg)]
        expected = min(generating + [62 ** len(seg)])
        assert expected == per_seg[seg]
        cost *= expected
    assert bits(cost) == pytest.approx(62.8639, abs=1e-4)
    assert bits(62**11) == pytest.approx(65.4962, abs=1e-4)


def test_chain_single_fallback_character():
    only_words = RuleCombination(rules=(make_wordlist_rule("w", ALNUM, ["xy"]),))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    got = eta_chain("a", only_words, bounds)
    assert got.value == 62
    assert got.segment_costs[0].rule_id is None


def test_chain_matches_brute_force_minimizer_on_toy_universe():
    digits = make_char_class_rule("digits", TOY, "1", 1, 2)
    words = make_wordlist_rule("words", TOY, ["ab"])
    combo = RuleCombination(rules=(digits, words))
    bounds = PolicyBounds(alphabet=TOY, min_length=1, max_length=3)
    upper = eta_upper(bounds)
    rule_sets = {r.id: set(r.candidates()) for r in combo.rules}
    rule_cards = {r.id: r.cardinality() for r in combo.rules}
    for password in brute_class_strings("ab1", 1, 3):
        expected = brute_chain_min(password, rule_sets, rule_cards, TOY.size, upper)
        got = eta_chain(password, combo, bounds)
        assert got.value == expected, password


def test_chain_tie_breaks_toward_fewest_segments():
    # "aaaa" whole (via the 100-entry list) and "aa|aa" (10 * 10 via the
    # 10-entry list) both cost 100; the single-segment parsing must win
    big = make_wordlist_rule("big", ALNUM, ["aaaa"] + [f"f{i:03d}" for i in range(99)])
    small = make_wordlist_rule("small", ALNUM, ["aa"] + [f"g{i}" for i in range(9)])
    combo = RuleCombination(rules=(big, small))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    got = eta_chain("aaaa", combo, bounds)
    assert got.value == 100
    assert got.parsing is not None
    assert got.parsing.segments == ("aaaa",)


def test_chain_caps_at_upper_bound_for_out_of_policy_lengths():
    words = make_wordlist_rule("w", LOWER, ["ab", "cd"])
    combo = RuleCombination(rules=(words,))
    bounds = PolicyBounds(alphabet=LOWER, min_length=1, max_length=2)
    # a 4-char password's cheapest parsing uses two wordlist hits: 2*2 = 4,
    # well under the cap
    got = eta_chain("abab", combo, bounds)
    assert got.value == 4
    # an unmatched 4-char password would cost 26**4 > eta_upper: capped
    got2 = eta_chain("zzzz", combo, bounds)
    assert got2.capped
    assert got2.value == eta_upper(bounds)
    assert got2.parsing is None and got2.segment_costs == ()


def test_chain_truncation_tags_result_as_bound_only():
    words = make_wordlist_rule("w", LOWER, ["ab"])
    combo = RuleCombination(rules=(words,))
    bounds = PolicyBounds(alphabet=LOWER, min_length=1, max_length=16)
    got = eta_chain("ababab", combo, bounds, EnumerationLimits(max_segments=8, max_parsings=2))
    assert not got.exact
    # truncated minimum is an upper bound on the true minimum
    full = eta_chain("ababab", combo, bounds)
    assert full.exact
    assert got.value >= full.value


def test_chain_argmin_recomputes_to_reported_value(single_digit, twenty_k_words):
    combo = RuleCombination(rules=(single_digit, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    for password in ("1LoveSoccer", "Love1", "word00005", "9", "xyzzy"):
        got = eta_chain(password, combo, bounds)
        assert got.parsing is not None
        recomputed = 1
        for sc in got.segment_costs:
            recomputed *= sc.cost
        assert recomputed == got.value


# ---------------------------------------------------------------------------
# eta_order_aware and eta_order_unknown
# ---------------------------------------------------------------------------

def test_order_aware_accumulates_until_generating_rule(digits_1_4, twenty_k_words):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    topo = Topology(ordered_rules=(digits_1_4, twenty_k_words))
    assert eta_order_aware("Love", topo, bounds) == 11_110 + 20_000
    # cross-check by simulating sequential enumeration counts
    expected = brute_order_aware(
        "Love",
        [(r.id, r.cardinality(), set(r.candidates())) for r in topo.ordered_rules],
        eta_upper(bounds),
    )
    assert expected == 31_110


def test_order_aware_single_rule_reduces_to_rule_cardinality(twenty_k_words):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    topo = Topology(ordered_rules=(twenty_k_words,))
    assert eta_order_aware("Love", topo, bounds) == 20_000


def test_order_aware_fallback_when_not_generatable(digits_1_4):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    topo = Topology(ordered_rules=(digits_1_4,))
    assert eta_order_aware("Love", topo, bounds) == eta_upper(bounds)


def test_order_aware_unbounded_rule_before_generating_rule(twenty_k_words):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    open_model = ExternalRule(
        id="model", alphabet=ALNUM, aux=AuxConstraint(1, 16),
        declared_cardinality=UNBOUNDED, membership=lambda s: False,
    )
    topo = Topology(ordered_rules=(open_model, twenty_k_words))
    assert eta_order_aware("Love", topo, bounds) == eta_upper(bounds)


def test_order_unknown_takes_best_order(digits_1_4, twenty_k_words):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    combo = RuleCombination(rules=(digits_1_4, twenty_k_words))
    # enumerate both orders explicitly and take the min of the Eq-style sums
    both_orders = [
        eta_order_aware("Love", Topology(ordered_rules=(digits_1_4, twenty_k_words)), bounds),
        eta_order_aware("Love", Topology(ordered_rules=(twenty_k_words, digits_1_4)), bounds),
    ]
    assert min(both_orders) == 20_000
    assert eta_order_unknown("Love", combo, bounds) == 20_000


def test_order_unknown_fallback_and_singleton(digits_1_4):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    combo = RuleCombination(rules=(digits_1_4,))
    assert eta_order_unknown("Love", combo, bounds) == eta_upper(bounds)
    topo = Topology(ordered_rules=(digits_1_4,))
    assert eta_order_unknown("555", combo, bounds) == eta_order_aware("555", topo, bounds)


def _random_toy_combo(rng, tag):
    strings = brute_class_strings("ab1", 1, 3)
    rules = []
    for i in range(rng.randint(1, 3)):
        if rng.random() < 0.5:
            rules.append(
                make_wordlist_rule(f"{tag}w{i}", TOY, rng.sample(strings, rng.randint(1, 5)))
            )
        else:
            chars = "".join(rng.sample("ab1", rng.randint(1, 3)))
            lo = rng.randint(1, 3)
            rules.append(make_char_class_rule(f"{tag}c{i}", TOY, chars, lo, rng.randint(lo, 3)))
    return RuleCombination(rules=tuple(rules))


def test_order_unknown_equals_lower_rule_and_permutation_brute_force():
    import itertools

    rng = random.Random(8)
    bounds = PolicyBounds(alphabet=TOY, min_length=1, max_length=3)
    upper = eta_upper(bounds)
    for trial in range(40):
        combo = _random_toy_combo(rng, f"t{trial}")
        password = rng.choice(brute_class_strings("ab1", 1, 3))
        analytic = eta_order_unknown(password, combo, bounds)
        assert analytic == eta_lower_rule(password, combo, bounds)
        brute = min(
            eta_order_aware(password, Topology(ordered_rules=perm), bounds)
            for perm in itertools.permutations(combo.rules)
        )
        assert analytic == brute


# ---------------------------------------------------------------------------
# Cross-estimate invariants
# ---------------------------------------------------------------------------

def test_bound_ordering_chain_le_lower_le_upper():
    rng = random.Random(99)
    bounds = PolicyBounds(alphabet=TOY, min_length=1, max_length=3)
    for trial in range(50):
        combo = _random_toy_combo(rng, f"b{trial}")
        password = rng.choice(brute_class_strings("ab1", 1, 3))
        chain = eta_chain(password, combo, bounds).value
        lower = eta_lower_rule(password, combo, bounds)
        upper = eta_upper(bounds)
        assert chain <= lower <= upper


def test_adding_a_rule_never_increases_estimates():
    rng = random.Random(1234)
    bounds = PolicyBounds(alphabet=TOY, min_length=1, max_length=3)
    strings = brute_class_strings("ab1", 1, 3)
    for trial in range(60):
        combo = _random_toy_combo(rng, f"m{trial}")
        extra = make_wordlist_rule(f"m{trial}extra", TOY, rng.sample(strings, rng.randint(1, 5)))
        grown = RuleCombination(rules=combo.rules + (extra,))
        password = rng.choice(strings)
        assert eta_lower_rule(password, grown, bounds) <= eta_lower_rule(password, combo, bounds)
        assert (
            eta_chain(password, grown, bounds).value
            <= eta_chain(password, combo, bounds).value
        )
        assert eta_order_unknown(password, grown, bounds) <= eta_order_unknown(
            password, combo, bounds
        )


def test_cheaper_generating_rule_strictly_decreases_lower_bound(twenty_k_words):
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    combo = RuleCombination(rules=(twenty_k_words,))
    before = eta_lower_rule("Love", combo, bounds)
    assert before == 20_000
    tiny = make_wordlist_rule("leak", ALNUM, ["Love", "Soccer"])
    grown = RuleCombination(rules=combo.rules + (tiny,))
    after = eta_lower_rule("Love", grown, bounds)
    assert after == 2
    assert after < before


# ---------------------------------------------------------------------------
# Combined report
# ---------------------------------------------------------------------------

def test_report_normalized_is_one_when_no_rule_matches():
    words = make_wordlist_rule("w", LOWER, ["ab"])
    combo = RuleCombination(rules=(words,))
    bounds = PolicyBounds(alphabet=LOWER, min_length=4, max_length=4)
    report = compute_report("zzzz", combo, bounds)
    assert report.eta_final == report.eta_upper
    assert report.normalized == pytest.approx(1.0)


def test_report_normalized_zero_when_upper_is_one():
    single = Alphabet.from_string("one", "a")
    words = make_wordlist_rule("w", single, ["a"])
    combo = RuleCombination(rules=(words,))
    bounds = PolicyBounds(alphabet=single, min_length=1, max_length=1)
    report = compute_report("a", combo, bounds)
    assert report.eta_upper == 1
    assert report.normalized == 0.0


def test_report_invariants_and_fixed_record_fields(single_digit, twenty_k_words):
    combo = RuleCombination(rules=(single_digit, twenty_k_words))
    bounds = PolicyBounds(alphabet=ALNUM, min_length=1, max_length=16)
    topo = Topology(ordered_rules=(single_digit, twenty_k_words))
    report = compute_report("1LoveSoccer", combo, bounds, topology=topo)
    assert report.eta_lower_rule <= report.eta_upper
    assert report.eta_chain <= report.eta_upper
    assert report.eta_order_aware is not None
    assert report.eta_order_aware <= report.eta_upper
    assert 0.0 <= report.normalized <= 1.0
    record = report.to_record()
    for key in ("eta_upper_bits", "eta_chain_bits", "normalized",
                "minimizing_parsing", "per_segment_costs"):
        assert key in record
    assert record["minimizing_parsing"] == "1|Love|Soccer"
    text = report.to_text()
    assert "1|Love|Soccer" in text
