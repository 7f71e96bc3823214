"""Bipartite maximum matching and systems of distinct representatives.

Augmenting paths always try right vertices in ascending order, so every
result here is reproducible for a fixed input ordering.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidArguments


@dataclass(frozen=True)
class BipartiteGraph:
    left_count: int
    right_count: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.left_count:
            raise InvalidArguments("adjacency must list every left vertex")
        for nbrs in self.adjacency:
            for y in nbrs:
                if not 0 <= y < self.right_count:
                    raise InvalidArguments(f"right vertex {y} out of range")

    @classmethod
    def build(cls, right_count: int, adjacency: Iterable[Iterable[int]]) -> BipartiteGraph:
        adj = tuple(tuple(sorted(set(a))) for a in adjacency)
        return cls(len(adj), right_count, adj)


@dataclass(frozen=True)
class Matching:
    """Map left vertex -> right vertex."""

    pairs: dict[int, int]

    def __len__(self) -> int:
        return len(self.pairs)

    def saturates_left(self, left_count: int) -> bool:
        return len(self.pairs) == left_count


def _augment(adj, x, match_right, seen) -> bool:
    # a free right vertex is taken before any re-routing
    for y in adj[x]:
        if y not in match_right:
            match_right[y] = x
            return True
    for y in adj[x]:
        if y in seen:
            continue
        seen.add(y)
        if _augment(adj, match_right[y], match_right, seen):
            match_right[y] = x
            return True
    return False


def _kuhn(g: BipartiteGraph) -> dict[int, int]:
    match_right: dict[int, int] = {}
    limit = sys.getrecursionlimit()
    if g.left_count + 100 > limit:
        sys.setrecursionlimit(g.left_count + 100)
    for x in range(g.left_count):
        _augment(g.adjacency, x, match_right, set())
    return match_right


def max_matching(g: BipartiteGraph) -> Matching:
    match_right = _kuhn(g)
    return Matching({x: y for y, x in sorted(match_right.items(), key=lambda kv: kv[1])})


def hall_violator(g: BipartiteGraph, m: Matching) -> tuple[int, ...] | None:
    """Left vertex set I with |N(I)| < |I|, taken from an unsaturated vertex.

    ``m`` must be maximum. Returns None when ``m`` saturates the left side.
    """
    free = [x for x in range(g.left_count) if x not in m.pairs]
    if not free:
        return None
    match_right = {y: x for x, y in m.pairs.items()}
    lefts = {free[0]}
    stack = [free[0]]
    rights: set[int] = set()
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if y in rights:
                continue
            rights.add(y)
            # y is matched, otherwise m would not be maximum
            x2 = match_right[y]
            if x2 not in lefts:
                lefts.add(x2)
                stack.append(x2)
    return tuple(sorted(lefts))


@dataclass(frozen=True)
class SDRResult:
    """Outcome of :func:`sdr`.

    Exactly one of ``representatives`` / ``witness`` is set. The witness is
    an index set whose union is smaller than itself.
    """

    representatives: tuple[int, ...] | None
    witness: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.representatives is not None


def sdr(sets: Sequence[Iterable[int]]) -> SDRResult:
    family = [frozenset(s) for s in sets]
    ground = sorted(set().union(*family)) if family else []
    if any(x < 0 for x in ground):
        raise InvalidArguments("ground-set elements must be non-negative")
    pos = {x: i for i, x in enumerate(ground)}
    g = BipartiteGraph.build(len(ground), ([pos[x] for x in s] for s in family))
    m = max_matching(g)
    if m.saturates_left(len(family)):
        return SDRResult(tuple(ground[m.pairs[i]] for i in range(len(family))), None)
    return SDRResult(None, hall_violator(g, m))


def violates_hall(sets: Sequence[Iterable[int]], index_set: Iterable[int]) -> bool:
    idx = list(index_set)
    union = set().union(*(set(sets[i]) for i in idx)) if idx else set()
    return len(union) < len(set(idx))


# --- bitmask kernel used by the detectors ----------------------------------

def saturating_assignment(cands: Sequence[int]) -> list[int] | None:
    """Pick distinct bit positions, one from each candidate mask.

    Returns the chosen bit index per entry, or None when impossible. Lower
    bits are tried first, matching the ascending tie-break above.
    """
    owner: dict[int, int] = {}
    taken = 0
    seen = 0

    def augment(i: int) -> bool:
        nonlocal seen, taken
        free = cands[i] & ~taken
        if free:
            low = free & -free
            owner[low] = i
            taken |= low
            return True
        c = cands[i] & ~seen
        while c:
            low = c & -c
            seen |= low
            if augment(owner[low]):
                owner[low] = i
                return True
            c &= ~seen
        return False

    for i in range(len(cands)):
        seen = 0
        if not augment(i):
            return None
    chosen = [0] * len(cands)
    for bit, i in owner.items():
        chosen[i] = bit.bit_length() - 1
    return chosen
