import pytest

import worked_examples as wx
from preorder_bca import (
    GroundSet,
    NotACompletion,
    TooLarge,
    canonical_completion,
    enumerate_completions,
    enumerate_preorders,
    enumerate_total_preorders,
    is_completion,
    is_maximal_completion,
    is_total,
    to_total,
    validate_preorder,
)
from preorder_bca import families
from preorder_bca.core import Relation
from conftest import random_preorder


def test_total_preorder_counts_match_fubini():
    for n in range(1, 6):
        ground = GroundSet(tuple(f"e{i}" for i in range(n)))
        count = sum(1 for _ in enumerate_total_preorders(ground))
        assert count == wx.fubini(n)


def test_total_preorder_stream_is_deterministic_and_total():
    ground = GroundSet(("a", "b", "c", "d"))
    first = [t.blocks for t in enumerate_total_preorders(ground)]
    second = [t.blocks for t in enumerate_total_preorders(ground)]
    assert first == second
    for t in enumerate_total_preorders(ground):
        assert is_total(t.as_preorder)


def test_total_preorder_guard():
    ground = GroundSet(tuple(f"e{i}" for i in range(10)))
    with pytest.raises(TooLarge):
        list(enumerate_total_preorders(ground))
    # explicit override admits the larger sweep
    stream = enumerate_total_preorders(ground, max_n=10)
    next(iter(stream))


def test_preorder_counts():
    for n, want in ((1, 1), (2, 4), (3, 29), (4, 355)):
        ground = GroundSet(tuple(f"e{i}" for i in range(n)))
        seen = set()
        for p in enumerate_preorders(ground):
            validate_preorder(Relation(p.ground, p.rows))
            seen.add(p.rows)
        assert len(seen) == want


def test_example2_has_seven_completions():
    ex2 = wx.example2_base()
    got = {c.blocks for c in enumerate_completions(ex2)}
    want = {c.blocks for c in wx.example2_completions()}
    assert got == want
    assert len(got) == 7


def test_completions_of_equality_are_all_totals():
    for n in (2, 3, 4):
        eq = families.equality(n)
        count = sum(1 for _ in enumerate_completions(eq))
        assert count == wx.fubini(n)


def test_every_completion_completes(rng):
    for _ in range(25):
        base = random_preorder(rng, 5)
        for cand in enumerate_completions(base):
            assert is_completion(cand, base)


def test_example3_maximal_completions():
    ex3 = wx.example3_base()
    got = {c.blocks for c in enumerate_completions(ex3, "maximal")}
    want = {c.blocks for c in wx.example3_maximal()}
    assert got == want


def test_maximal_filter_members_pass_the_exhaustive_check(rng):
    for _ in range(15):
        base = random_preorder(rng, 4)
        maximal = {c.blocks for c in enumerate_completions(base, "maximal")}
        for cand in enumerate_completions(base):
            assert is_maximal_completion(cand, base) == (cand.blocks in maximal)


def test_example6_and_8_maximal_sets():
    # counts fixed by exhaustive enumeration, cross-checked in the suite by
    # filtering the full total-preorder universe; the two-block relation and
    # the three named completions of example 8 are all maximal
    fence_max = {c.blocks for c in enumerate_completions(wx.example6_fence(), "maximal")}
    crown_max = {c.blocks for c in enumerate_completions(wx.example6_crown(), "maximal")}
    answer = wx.example6_answer().blocks
    assert answer in fence_max and answer in crown_max
    assert len(fence_max) == 8
    assert len(crown_max) == 4

    ex8 = wx.example8_base()
    maximal8 = {c.blocks for c in enumerate_completions(ex8, "maximal")}
    assert len(maximal8) == 9
    for named in wx.example8_named():
        assert named.blocks in maximal8
        assert is_maximal_completion(named, ex8)


def test_is_maximal_completion_rejects_non_completions():
    eq = families.equality(2)
    not_completion = wx.total(("x1", "x2"), ("x1",), ("x2",))
    # a linear order is a completion of equality, so use a broken base instead
    chain = families.chain(2)
    flipped = wx.total(("x1", "x2"), ("x2",), ("x1",))
    with pytest.raises(NotACompletion):
        is_maximal_completion(flipped, chain)
    assert is_maximal_completion(to_total(families.indifferent(2)), eq)
    assert not is_maximal_completion(not_completion, eq)


def test_strict_completions():
    # strict completions of a partial order are linear orders
    for base in (wx.example2_base(), wx.example3_base(), families.fence(4)):
        strict = list(enumerate_completions(base, "strict"))
        assert strict
        for cand in strict:
            assert all(b.bit_count() == 1 for b in cand.blocks)
            assert is_completion(cand, base)

    # with genuine indifference in the base, strict completions keep it
    rem = wx.three_member_tie_base()
    for cand in enumerate_completions(rem, "strict"):
        assert max(b.bit_count() for b in cand.blocks) == 6


def test_canonical_completion_examples():
    eq = families.equality(3)
    assert canonical_completion(eq).blocks == (eq.ground.full_mask,)

    cont2 = families.containment_order(2)
    assert canonical_completion(cont2) == families.cardinality_ordering(2)

    total = families.sum_ordering(3)
    assert canonical_completion(total.as_preorder) == total


def test_canonical_is_always_maximal(rng):
    for _ in range(20):
        base = random_preorder(rng, 5)
        canonical = canonical_completion(base)
        assert is_completion(canonical, base)
        assert is_maximal_completion(canonical, base)


def test_completion_stream_determinism(rng):
    base = random_preorder(rng, 6)
    runs = [[c.blocks for c in enumerate_completions(base)] for _ in range(2)]
    assert runs[0] == runs[1]


def test_enumerate_preorders_guard():
    ground = GroundSet(tuple(f"e{i}" for i in range(5)))
    with pytest.raises(TooLarge):
        list(enumerate_preorders(ground))


def pairwise_is_completion(cand, base):
    # independent membership test, plain pair loops
    crel = cand.as_preorder
    n = base.n
    for i in range(n):
        for j in range(n):
            if base.holds(i, j) and not crel.holds(i, j):
                return False
            if base.holds(i, j) and not base.holds(j, i):
                if not (crel.holds(i, j) and not crel.holds(j, i)):
                    return False
    return True


def test_completion_stream_exact_against_universe_n4():
    # for every base on four elements, the quotient enumeration produces
    # exactly the completions found by filtering all 75 total preorders
    ground = GroundSet(tuple("abcd"))
    universe = list(enumerate_total_preorders(ground))
    for base in enumerate_preorders(ground):
        streamed = {c.blocks for c in enumerate_completions(base)}
        filtered = {t.blocks for t in universe if pairwise_is_completion(t, base)}
        assert streamed == filtered
        filtered_lib = {t.blocks for t in universe if is_completion(t, base)}
        assert streamed == filtered_lib


def test_canonical_maximal_exhaustive_through_n5():
    # every canonical completion sits in the maximal set; exhaustive sweep
    for n in (1, 2, 3, 4, 5):
        ground = GroundSet(tuple(f"e{i}" for i in range(n)))
        for base in enumerate_preorders(ground, max_n=5):
            assert is_maximal_completion(canonical_completion(base), base)
