"""Independent brute-force oracles used to cross-check the engine.

Everything here deliberately avoids the library's own enumeration and
costing code paths: compositions come from a recursive splitter, class
rules from a recursive character appender, and chain costs from exhaustive
iteration over per-segment rule assignments.
"""

from __future__ import annotations

import itertools


def brute_class_strings(chars: str, min_length: int, max_length: int) -> list[str]:
    """All strings over ``chars`` with lengths in range, shortest first then
    in ``chars`` order, built by recursive appending."""
    out: list[str] = []

    def extend(prefix: str, remaining: int):
        if remaining == 0:
            out.append(prefix)
            return
        for c in chars:
            extend(prefix + c, remaining - 1)

    for length in range(min_length, max_length + 1):
        extend("", length)
    return out


def all_compositions(text: str) -> list[tuple[str, ...]]:
    """Every contiguous segmentation, by recursive first-segment split."""
    if not text:
        return [()]
    out: list[tuple[str, ...]] = []
    for i in range(1, len(text) + 1):
        head = text[:i]
        for tail in all_compositions(text[i:]):
            out.append((head,) + tail)
    return out


def brute_chain_min(
    password: str,
    rule_sets: dict[str, set[str]],
    rule_cards: dict[str, int],
    alphabet_size: int,
    upper: int,
) -> int:
    """Exhaustive minimum over every composition and every per-segment rule
    assignment (including the brute-force fallback), capped at ``upper``."""
    best = None
    for parts in all_compositions(password):
        per_segment_choices = []
        for seg in parts:
            choices = [alphabet_size ** len(seg)]
            for rule_id, members in rule_sets.items():
                if seg in members:
                    choices.append(rule_cards[rule_id])
            per_segment_choices.append(choices)
        for assignment in itertools.product(*per_segment_choices):
            cost = 1
            for c in assignment:
                cost *= c
            if best is None or cost < best:
                best = cost
    assert best is not None
    return min(best, upper)


def brute_order_aware(
    password: str,
    ordered: list[tuple[str, int, set[str]]],
    upper: int,
) -> int:
    """Sequential-enumeration count: guesses spent walking rules in order
    until one's member set contains the password."""
    spent = 0
    for _rule_id, card, members in ordered:
        spent += card
        if password in members:
            return min(spent, upper)
    return upper


def guess_position(password: str, ordered_candidate_lists: list[list[str]]) -> int | None:
    """1-based position of the password in a concatenated enumeration, or
    None when it never appears."""
    position = 0
    for candidates in ordered_candidate_lists:
        for cand in candidates:
            position += 1
            if cand == password:
                return position
    return None
