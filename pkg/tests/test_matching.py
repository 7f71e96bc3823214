import random
import pytest
from hypothesis import given, settings, strategies as st

from berge_ramsey.matching import (
    BipartiteGraph,
    hall_violator,
    max_matching,
    saturating_assignment,
    sdr,
    violates_hall,
)
from oracles import brute_max_matching, brute_sdr_exists


def graph(right, adjacency):
    return BipartiteGraph.build(right, adjacency)


def is_matching(g, m):
    rights = list(m.pairs.values())
    return len(set(rights)) == len(rights) and all(y in g.adjacency[x] for x, y in m.pairs.items())


def test_complete_3x3():
    m = max_matching(graph(3, [[0, 1, 2]] * 3))
    assert len(m) == 3
    assert m.pairs == {0: 0, 1: 1, 2: 2}


def test_star_with_isolated():
    g = graph(3, [[0, 1, 2], [], []])
    m = max_matching(g)
    assert len(m) == 1
    assert hall_violator(g, m) == (1,)


def test_out_of_range_adjacency():
    with pytest.raises(ValueError):
        BipartiteGraph(1, 2, ((5,),))


def test_lifting_shape_saturates_left():
    # left degree >= 2 and right degree <= 2: Hall's condition always holds
    rng = random.Random(7)
    for _ in range(300):
        left = rng.randint(2, 8)
        right = rng.randint(left, 16)
        adj = [set() for _ in range(left)]
        load = [0] * right
        for x in range(left):
            for y in rng.sample(range(right), right):
                if len(adj[x]) >= 2 and rng.random() < 0.5:
                    break
                if load[y] < 2:
                    adj[x].add(y)
                    load[y] += 1
        if min(len(a) for a in adj) < 2:
            continue
        g = graph(right, adj)
        assert brute_max_matching(g.adjacency) == left
        assert max_matching(g).saturates_left(left)


def test_small_graphs_exhaustive():
    """Every bipartite graph with left*right <= 12 slots."""
    checked = 0
    for a in range(1, 9):
        for b in range(1, 9):
            if a * b > 12:
                continue
            slots = [(x, y) for x in range(a) for y in range(b)]
            for code in range(1 << len(slots)):
                adj = [[] for _ in range(a)]
                for k, (x, y) in enumerate(slots):
                    if code >> k & 1:
                        adj[x].append(y)
                g = graph(b, adj)
                m = max_matching(g)
                assert is_matching(g, m)
                assert len(m) == brute_max_matching(g.adjacency)
                checked += 1
    assert checked > 10_000


@given(st.integers(1, 8).flatmap(lambda a: st.tuples(
    st.just(a), st.integers(1, 8).flatmap(lambda b: st.tuples(
        st.just(b), st.lists(st.lists(st.integers(0, b - 1), max_size=b), min_size=a, max_size=a))))))
def test_matches_bruteforce_random(data):
    _, (b, adj) = data
    g = graph(b, adj)
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_max_matching(g.adjacency)
    w = hall_violator(g, m)
    if m.saturates_left(g.left_count):
        assert w is None
    else:
        assert violates_hall(g.adjacency, w)


class TestSDR:
    def test_triangle(self):
        fam = [{1, 2}, {2, 3}, {3, 1}]
        res = sdr(fam)
        assert res
        reps = res.representatives
        assert len(set(reps)) == 3 and all(r in s for r, s in zip(reps, fam))

    def test_hall_failure(self):
        res = sdr([{1}, {2}, {1, 2}])
        assert not res
        assert res.witness == (0, 1, 2)

    def test_cyclic_shift_family(self):
        # S_i = {1..5} minus {i, i+1}, i = 1..4
        fam = [set(range(1, 6)) - {i, i + 1} for i in range(1, 5)]
        assert all(r in s for r, s in zip((3, 4, 5, 1), fam))
        res = sdr(fam)
        assert res
        assert all(r in s for r, s in zip(res.representatives, fam))
        assert len(set(res.representatives)) == 4

    def test_empty_set_blocks(self):
        res = sdr([{0, 1}, set()])
        assert not res and violates_hall([{0, 1}, set()], res.witness)

    def test_empty_family(self):
        assert sdr([]).representatives == ()

    def test_negative_elements_rejected(self):
        with pytest.raises(ValueError):
            sdr([{-1}])

    def test_deterministic(self):
        fam = [{4, 2, 9}, {9, 2}, {2, 4}]
        assert sdr(fam) == sdr(fam)
        # free elements are taken in ascending order before any re-routing
        assert sdr(fam).representatives == (2, 9, 4)


family = st.lists(st.sets(st.integers(0, 6), max_size=5), max_size=6)


@given(family)
def test_sdr_agrees_with_bruteforce(fam):
    res = sdr(fam)
    assert bool(res) == brute_sdr_exists(fam)
    if res:
        reps = res.representatives
        assert len(set(reps)) == len(reps)
        assert all(r in s for r, s in zip(reps, fam))
    else:
        assert violates_hall(fam, res.witness)


@given(family)
def test_sdr_consistent_with_matching(fam):
    ground = sorted(set().union(*fam)) if fam else []
    pos = {x: i for i, x in enumerate(ground)}
    g = graph(len(ground), [[pos[x] for x in s] for s in fam])
    assert bool(sdr(fam)) == max_matching(g).saturates_left(len(fam))


@given(st.integers(1, 6), st.data())
def test_large_sets_always_have_sdr(k, data):
    count = data.draw(st.integers(0, k))
    fam = [data.draw(st.sets(st.integers(0, 20), min_size=k, max_size=k + 2)) for _ in range(count)]
    assert sdr(fam)


@settings(deadline=None)
@given(st.lists(st.integers(0, (1 << 8) - 1), max_size=6))
def test_bitmask_assignment(masks):
    got = saturating_assignment(masks)
    sets = [{b for b in range(8) if m >> b & 1} for m in masks]
    assert (got is not None) == brute_sdr_exists(sets)
    if got is not None:
        assert len(set(got)) == len(got)
        assert all(m >> b & 1 for m, b in zip(masks, got))


def test_bitmask_prefers_low_bits():
    assert saturating_assignment([0b111, 0b110, 0b100]) == [0, 1, 2]
    assert saturating_assignment([0b011, 0b001]) == [1, 0]
