import itertools

import pytest

from adb import (
    EPS,
    TICK,
    IncompatibleAlphabet,
    Out,
    concat,
    enumerate_accepting_runs,
    intersect_regular,
    language_sample,
    lift_regular,
    nfa_member,
    run_output,
    star,
    union,
    untime,
    untimed_sample,
)


def untimed_pairs(auto1, auto2, budget, overhead):
    """Expected untimed concatenations from run pairs whose combined cost
    (transitions plus bridge overhead) fits the budget."""
    runs1 = list(enumerate_accepting_runs(auto1, budget))
    runs2 = list(enumerate_accepting_runs(auto2, budget))
    out = set()
    for r1 in runs1:
        for r2 in runs2:
            if len(r1) + len(r2) + overhead <= budget:
                u1 = untime(run_output(auto1, r1))
                u2 = untime(run_output(auto2, r2))
                out.add(u1 + u2)
    return out


def untimed_star_words(auto, budget, per_iteration):
    """Expected untimed star sample: concatenations of accepting-run outputs
    whose per-iteration costs sum within the budget."""
    runs = [
        (len(r) + per_iteration, untime(run_output(auto, r)))
        for r in enumerate_accepting_runs(auto, budget)
    ]
    best = {(): 0}
    frontier = [((), 0)]
    while frontier:
        word, cost = frontier.pop()
        for extra, u in runs:
            total = cost + extra
            if total <= budget:
                combined = word + u
                if best.get(combined, budget + 1) > total:
                    best[combined] = total
                    frontier.append((combined, total))
    return set(best)


def test_union_sample_equality(a1, a3):
    u = union(a1, a3)
    assert u.alphabet == a1.alphabet | a3.alphabet
    for bound in (0, 3, 6, 9):
        expected = language_sample(a1, bound) | language_sample(a3, bound)
        assert language_sample(u, bound + 1) == expected


def test_union_is_validated_and_disjoint(a1, a3):
    u = union(a1, a3)
    assert u.start == "$u"
    assert all(loc == "$u" or loc[:2] in ("1$", "2$") for loc in u.locations)


def test_concat_tick_chains(a1):
    c = concat(a1, a1)
    # one flush chain of max-delay many ticks per accepting location
    ticks = [t for t in c.transitions if t[1] is TICK]
    assert len(ticks) == a1.max_delay
    assert c.accepting == {"2$l0"}


def test_concat_sample_equality(a1, a3):
    for left, right in [(a1, a1), (a1, a3)]:
        c = concat(left, right)
        overhead = left.max_delay + 1
        for budget in (7, 13):
            expected = untimed_pairs(left, right, budget, overhead)
            assert untimed_sample(c, budget) == expected


def test_star_sample_equality(a1, a3):
    for auto in (a1, a3):
        s = star(auto)
        per_iteration = auto.max_delay + 1
        for budget in (12,):
            expected = untimed_star_words(auto, budget, per_iteration)
            assert untimed_sample(s, budget) == expected


def test_star_zero_delay_uses_eps():
    from adb import validate_adb

    flat = validate_adb(
        ["l0", "l1"], ["a"], "l0", ["l1"], [("l0", Out("a", 0), "l1")]
    )
    s = star(flat)
    assert not any(t[1] is TICK for t in s.transitions)
    # each iteration costs three transitions: eps in, the output, eps back
    assert untimed_sample(s, 9) == {(), ("a",), ("a", "a"), ("a", "a", "a")}


def test_star_accepts_empty_word(a1):
    s = star(a1)
    assert s.start in s.accepting
    assert () in untimed_sample(s, 0)


def test_lift_regular(abc_blocks):
    lifted = lift_regular(abc_blocks)
    assert lifted.max_delay == 0
    words = untimed_sample(lifted, 6)
    for u in words:
        assert nfa_member(abc_blocks, u)
    assert ("a", "b", "c") in words
    assert ("a", "a", "b") in words


def test_intersect_regular_product(a1, abc_blocks, bac_blocks, sigma_star):
    prod = intersect_regular(a1, abc_blocks)
    sample = untimed_sample(prod, 40)
    assert ("a", "b", "c") in sample
    assert ("a", "a", "b", "b", "c", "c") in sample

    everything = intersect_regular(a1, sigma_star)
    assert untimed_sample(everything, 13) == untimed_sample(a1, 12)


def test_intersect_regular_size_bound(a1, abc_blocks):
    prod = intersect_regular(a1, abc_blocks)
    n_a = len(a1.locations)
    n_r = len(abc_blocks.states)
    m = a1.max_delay
    assert len(prod.locations) <= 1 + n_a * n_r ** (2 * m + 1)


def test_intersect_regular_rejects_missing_symbols(a3, abc_blocks):
    with pytest.raises(IncompatibleAlphabet):
        intersect_regular(a3, abc_blocks)


def test_intersection_untimed_equality(a1, aabbcc):
    # sample of the product equals the filtered sample of the input
    prod = intersect_regular(a1, aabbcc)
    got = untimed_sample(prod, 60)
    want = {u for u in untimed_sample(a1, 12) if u == ("a", "a", "b", "b", "c", "c")}
    assert got == want
