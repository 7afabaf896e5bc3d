import itertools
import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rulespace.cardinality import UNBOUNDED
from rulespace.errors import ValidationError
from rulespace.rules import (
    Alphabet,
    AuxConstraint,
    ExternalRule,
    RuleCombination,
    Transform,
    conjoin_aux,
    load_wordlist,
    make_char_class_rule,
    make_mangled_rule,
    make_wordlist_rule,
)

from helpers import brute_class_strings

ALNUM = Alphabet.from_string("alnum62", string.ascii_letters + string.digits)
TOY = Alphabet.from_string("toy", "ab1")


# ---------------------------------------------------------------------------
# Alphabet
# ---------------------------------------------------------------------------

def test_alphabet_counts_and_membership():
    assert ALNUM.size == 62
    assert "a" in ALNUM and "!" not in ALNUM
    assert ALNUM.covers("Love123") and not ALNUM.covers("no spaces")


def test_alphabet_rejects_empty_duplicates_and_multichar():
    with pytest.raises(ValidationError):
        Alphabet(name="empty", characters=())
    with pytest.raises(ValidationError):
        Alphabet.from_string("dupe", "aa")
    with pytest.raises(ValidationError):
        Alphabet(name="multi", characters=("ab",))


# ---------------------------------------------------------------------------
# AuxConstraint conjunction
# ---------------------------------------------------------------------------

def test_conjoin_intersects_length_ranges():
    got = conjoin_aux(AuxConstraint(1, 8), AuxConstraint(4, 12))
    assert (got.min_length, got.max_length) == (4, 8)
    assert got.satisfiable


def test_conjoin_empty_intersection_is_a_value_not_an_error():
    got = conjoin_aux(AuxConstraint(1, 3), AuxConstraint(5, 6))
    assert not got.satisfiable
    assert not got.accepts("abcd")


def test_conjoin_identity():
    digits_only = AuxConstraint(1, 4, charset=frozenset("0123456789"))
    got = conjoin_aux(digits_only, AuxConstraint(1, 4))
    assert got == digits_only


def test_aux_rejects_zero_lengths():
    with pytest.raises(ValidationError):
        AuxConstraint(min_length=0, max_length=4)
    with pytest.raises(ValidationError):
        AuxConstraint(min_length=1, max_length=0)


@given(
    a_lo=st.integers(1, 6), a_hi=st.integers(1, 6),
    b_lo=st.integers(1, 6), b_hi=st.integers(1, 6),
    s=st.text(alphabet="ab1", min_size=0, max_size=7),
)
def test_conjoin_accepts_iff_both_accept(a_lo, a_hi, b_lo, b_hi, s):
    a = AuxConstraint(a_lo, max(a_lo, a_hi))
    b = AuxConstraint(b_lo, max(b_lo, b_hi))
    both = conjoin_aux(a, b)
    assert both.accepts(s) == (a.accepts(s) and b.accepts(s))


# ---------------------------------------------------------------------------
# Character-class rules
# ---------------------------------------------------------------------------

def test_char_class_cardinality_known_values():
    lower = Alphabet.from_string("lower", string.ascii_lowercase)
    rule = make_char_class_rule("lower8", lower, string.ascii_lowercase, 8, 8)
    assert rule.cardinality() == 208_827_064_576
    digits = make_char_class_rule("digits", ALNUM, "0123456789", 1, 4)
    assert digits.cardinality() == 11_110
    assert digits.cardinality_exact


def test_char_class_rejects_malformed_lengths():
    with pytest.raises(ValidationError):
        make_char_class_rule("bad", ALNUM, "0123456789", 0, 0)
    with pytest.raises(ValidationError):
        make_char_class_rule("bad", ALNUM, "0123456789", 3, 2)


def test_char_class_rejects_characters_outside_alphabet():
    with pytest.raises(ValidationError):
        make_char_class_rule("bad", TOY, "xy", 1, 2)


def test_digit_rule_membership():
    digits = make_char_class_rule("digits", ALNUM, "0123456789", 1, 4)
    assert digits.generates("555")
    assert digits.generates("0011")
    assert not digits.generates("hello")
    assert not digits.generates("12345")  # too long
    assert not digits.generates("")


@pytest.mark.parametrize("alpha_chars", ["ab", "ab1", "ab12"])
@pytest.mark.parametrize("lo,hi", [(1, 1), (1, 3), (2, 4)])
def test_char_class_cardinality_matches_brute_enumeration(alpha_chars, lo, hi):
    alphabet = Alphabet.from_string("a", alpha_chars)
    rule = make_char_class_rule("r", alphabet, alpha_chars, lo, hi)
    brute = brute_class_strings(alpha_chars, lo, hi)
    assert rule.cardinality() == len(brute)
    assert list(rule.candidates()) == brute  # shortlex order, declared char order


def test_membership_soundness_equals_enumeration():
    # generates(rule, s) <=> s appears in the rule's full enumeration
    alphabet = Alphabet.from_string("a", "ab1")
    rule = make_char_class_rule("r", alphabet, "ab1", 1, 3)
    enumerated = set(rule.candidates())
    assert len(enumerated) < 10**6
    for length in range(0, 5):
        for tup in itertools.product("ab1x", repeat=length):
            s = "".join(tup)
            assert rule.generates(s) == (s in enumerated)


# ---------------------------------------------------------------------------
# Wordlist rules
# ---------------------------------------------------------------------------

def test_wordlist_cardinality_is_entry_count():
    entries = [f"w{i:04d}" for i in range(20_000)]
    rule = make_wordlist_rule("words", ALNUM, entries)
    assert rule.cardinality() == 20_000
    assert rule.cardinality_exact


def test_wordlist_membership_and_order():
    rule = make_wordlist_rule("words", ALNUM, ["Love", "Soccer", "hello"])
    assert rule.generates("Love")
    assert not rule.generates("love")  # case-sensitive by default
    assert not rule.generates("absent")
    assert list(rule.candidates()) == ["Love", "Soccer", "hello"]


def test_wordlist_case_insensitive_membership_widens_matching_only():
    rule = make_wordlist_rule("words", ALNUM, ["love"], case_sensitive=False)
    assert rule.generates("LOVE") and rule.generates("Love")
    # cardinality and enumeration stay at the verbatim entries
    assert rule.cardinality() == 1
    assert list(rule.candidates()) == ["love"]


def test_wordlist_rejects_entries_outside_alphabet():
    with pytest.raises(ValidationError):
        make_wordlist_rule("words", TOY, ["abc"])


def test_load_wordlist_format(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text(
        "# comment\nalpha\nbeta\n\nalpha\ngamma\r\n# another\nbeta\n",
        encoding="utf-8",
    )
    assert load_wordlist(path) == ("alpha", "beta", "gamma")


# ---------------------------------------------------------------------------
# Mangled wordlists
# ---------------------------------------------------------------------------

def test_transform_apply_and_preimages():
    cap = Transform(kind="capitalize")
    assert cap.apply("love") == "Love"
    suffix1 = Transform(kind="affix", suffix="1")
    assert suffix1.apply("pass") == "pass1"
    assert suffix1.preimages("pass1") == ["pass"]
    assert suffix1.preimages("pass") == []
    leet = Transform(kind="leet", leet_map=(("a", "4"), ("e", "3")))
    assert leet.apply("apple") == "4ppl3"
    assert "apple" in leet.preimages("4ppl3")
    # a surviving source character means the transform never produced it
    assert leet.preimages("4pple") == []


def test_unknown_transform_kind_rejected():
    with pytest.raises(ValidationError):
        Transform(kind="reverse")


def test_mangled_rule_inverse_membership():
    rule = make_mangled_rule(
        "mangled",
        ALNUM,
        ["love", "pass"],
        [Transform(kind="identity"), Transform(kind="capitalize"),
         Transform(kind="affix", suffix="1")],
    )
    for candidate in ("love", "Love", "love1", "pass", "Pass", "pass1"):
        assert rule.generates(candidate), candidate
    assert not rule.generates("LOVE")
    assert not rule.generates("love2")


def test_mangled_cardinality_is_a_tagged_bound():
    # "Pass" capitalizes to itself, so the true output set is smaller
    rule = make_mangled_rule(
        "mangled", ALNUM, ["Pass", "pass"],
        [Transform(kind="identity"), Transform(kind="capitalize")],
    )
    assert rule.cardinality() == 4
    assert not rule.cardinality_exact
    # true distinct outputs: identity gives Pass/pass, capitalize only Pass
    assert len(set(rule.candidates())) == 2


def test_mangled_enumeration_is_word_major():
    rule = make_mangled_rule(
        "mangled", ALNUM, ["ab", "cd"],
        [Transform(kind="identity"), Transform(kind="affix", suffix="9")],
    )
    assert list(rule.candidates()) == ["ab", "ab9", "cd", "cd9"]


def test_mangled_membership_soundness_vs_enumeration():
    rule = make_mangled_rule(
        "m", ALNUM, ["ab", "Ab", "ba"],
        [Transform(kind="identity"), Transform(kind="capitalize"),
         Transform(kind="uppercase"), Transform(kind="affix", prefix="1", suffix="2")],
    )
    enumerated = set(rule.candidates())
    probes = set(enumerated) | {"ab", "AB", "Ba", "1ab2", "1AB2", "xy", "ab2", "1ab"}
    for s in probes:
        assert rule.generates(s) == (s in enumerated), s


# ---------------------------------------------------------------------------
# External rules
# ---------------------------------------------------------------------------

def test_external_rule_uses_declared_cardinality_and_membership():
    members = {"tok1", "tok2", "tok3"}
    rule = ExternalRule(
        id="model",
        alphabet=ALNUM,
        aux=AuxConstraint(1, 8),
        declared_cardinality=3,
        membership=lambda s: s in members,
        enumerator=lambda: iter(sorted(members)),
    )
    assert rule.cardinality() == 3
    assert rule.generates("tok1") and not rule.generates("tok9")
    assert list(rule.candidates()) == ["tok1", "tok2", "tok3"]


def test_external_rule_may_declare_unbounded():
    rule = ExternalRule(
        id="open",
        alphabet=ALNUM,
        aux=AuxConstraint(1, 64),
        declared_cardinality=UNBOUNDED,
        membership=lambda s: True,
    )
    assert rule.cardinality() is UNBOUNDED
    with pytest.raises(ValidationError):
        rule.candidates()


# ---------------------------------------------------------------------------
# Combinations
# ---------------------------------------------------------------------------

def test_union_cardinality_disjoint_wordlists_exact():
    a = make_wordlist_rule("a", ALNUM, ["x1", "x2", "x3"])
    b = make_wordlist_rule("b", ALNUM, ["y1", "y2", "y3", "y4"])
    got = RuleCombination(rules=(a, b)).union_cardinality()
    assert got.value == 7 and got.exact


def test_union_cardinality_idempotent_for_identical_entries():
    entries = ["x1", "x2", "x3"]
    a = make_wordlist_rule("a", ALNUM, entries)
    b = make_wordlist_rule("b", ALNUM, entries)
    got = RuleCombination(rules=(a, b)).union_cardinality()
    assert got.value == 3 and got.exact


def test_union_cardinality_mixed_is_a_certified_bound():
    # verify the bound against the true union on a 3-character toy alphabet
    words = make_wordlist_rule("w", TOY, ["ab", "ba", "1a"])
    digits = make_char_class_rule("d", TOY, "1", 1, 2)
    combo = RuleCombination(rules=(words, digits))
    got = combo.union_cardinality()
    assert not got.exact
    assert got.value == 3 + 2  # sum of member cardinalities
    true_union = set(words.candidates()) | set(digits.candidates())
    assert len(true_union) <= got.value


def test_combination_generates_is_set_union():
    words = make_wordlist_rule("w", TOY, ["ab"])
    digits = make_char_class_rule("d", TOY, "1", 1, 2)
    combo = RuleCombination(rules=(words, digits))
    assert combo.generates("ab") and combo.generates("11")
    assert not combo.generates("ba")
    assert [r.id for r in combo.generating_rules("ab")] == ["w"]


def test_combination_rejects_empty_and_duplicate_ids():
    with pytest.raises(ValidationError):
        RuleCombination(rules=())
    a = make_wordlist_rule("same", ALNUM, ["x"])
    b = make_wordlist_rule("same", ALNUM, ["y"])
    with pytest.raises(ValidationError):
        RuleCombination(rules=(a, b))


def _random_toy_rules(rng, tag):
    """A few random small rules over the toy alphabet, enumerable exactly."""
    rules = []
    strings = brute_class_strings("ab1", 1, 3)
    n_rules = rng.randint(1, 3)
    for i in range(n_rules):
        if rng.random() < 0.5:
            entries = rng.sample(strings, rng.randint(1, 6))
            rules.append(make_wordlist_rule(f"{tag}w{i}", TOY, entries))
        else:
            chars = rng.sample("ab1", rng.randint(1, 3))
            lo = rng.randint(1, 3)
            hi = rng.randint(lo, 3)
            rules.append(make_char_class_rule(f"{tag}c{i}", TOY, "".join(chars), lo, hi))
    return rules


def test_subadditivity_with_equality_iff_disjoint():
    # exhaustive ground truth on alphabets of size <= 4, lengths <= 3
    import random

    rng = random.Random(20240811)
    for trial in range(60):
        rules = _random_toy_rules(rng, f"t{trial}")
        combo = RuleCombination(rules=tuple(rules))
        member_sets = [set(r.candidates()) for r in rules]
        true_union = set().union(*member_sets)
        sum_of_cards = sum(len(s) for s in member_sets)
        assert len(true_union) <= sum_of_cards
        pairwise_disjoint = all(
            not (member_sets[i] & member_sets[j])
            for i in range(len(rules))
            for j in range(i + 1, len(rules))
        )
        assert (len(true_union) == sum_of_cards) == pairwise_disjoint
        bound = combo.union_cardinality()
        assert len(true_union) <= bound.value
        if bound.exact:
            assert bound.value == len(true_union)
