"""Explicit extremal constructions: colorings witnessing Ramsey lower bounds
and the balanced complete k-partite 3-graph T3(N, k)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import InvalidArguments
from .hypergraph import Hypergraph, complete
from .shadow import BLUE, GREEN, RED, ColoredHypergraph


@dataclass(frozen=True)
class PartitionSpec:
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        s = self.part_sizes
        if not s or min(s) < 1:
            raise InvalidArguments("parts must be non-empty")
        if max(s) - min(s) > 1 or list(s) != sorted(s, reverse=True):
            raise InvalidArguments("part sizes must be descending and differ by at most 1")

    @classmethod
    def balanced(cls, total: int, parts: int) -> PartitionSpec:
        q, rem = divmod(total, parts)
        return cls(tuple([q + 1] * rem + [q] * (parts - rem)))

    @property
    def total(self) -> int:
        return sum(self.part_sizes)

    def blocks(self) -> list[range]:
        out, start = [], 0
        for size in self.part_sizes:
            out.append(range(start, start + size))
            start += size
        return out

    def part_of(self) -> list[int]:
        return [i for i, block in enumerate(self.blocks()) for _ in block]


def _check_partite(N: int, k: int) -> None:
    if k < 3 or N < k:
        raise InvalidArguments(f"need k >= 3 and N >= k, got N={N} k={k}")


def turan_partite(N: int, k: int) -> Hypergraph:
    """All triples with at most one vertex in each of k balanced contiguous
    blocks (larger blocks first)."""
    _check_partite(N, k)
    part = PartitionSpec.balanced(N, k).part_of()
    edges = tuple(e for e in combinations(range(N), 3) if len({part[v] for v in e}) == 3)
    return Hypergraph(N, 3, edges)


def t3_count(N: int, k: int) -> int:
    """Edge count of T3(N, k): the third elementary symmetric polynomial of
    the part sizes."""
    _check_partite(N, k)
    e1 = e2 = e3 = 0
    for s in PartitionSpec.balanced(N, k).part_sizes:
        e3 += e2 * s
        e2 += e1 * s
        e1 += s
    return e3


@dataclass(frozen=True)
class ConstructionLayout:
    """A two-block vertex split A / B and the coloring derived from it.

    ``kind`` names the coloring rule so :meth:`validate` can re-derive it.
    """

    kind: str
    a_vertices: frozenset[int]
    b_vertices: frozenset[int]
    colored: ColoredHypergraph

    def validate(self) -> bool:
        n = self.colored.base.n
        if self.a_vertices & self.b_vertices or (self.a_vertices | self.b_vertices) != frozenset(range(n)):
            return False
        rule = _RULES[self.kind](self.a_vertices, self.b_vertices)
        expected = tuple(rule(e) for e in self.colored.base.edges)
        return self.colored.base == complete(n, 3) and expected == self.colored.coloring

    def comments(self) -> list[str]:
        return [
            f"layout {self.kind}",
            "A = " + " ".join(map(str, sorted(self.a_vertices))),
            "B = " + " ".join(map(str, sorted(self.b_vertices))),
        ]


def _ccc_rule(A, B):
    a1, a2 = sorted(A)

    def color(e):
        hit = len(A.intersection(e))
        if hit == 2:
            return GREEN
        if a1 in e:
            return RED
        # triples inside B, or through a2 but not a1
        return BLUE

    return color


def _ck_rule(A, B):
    def color(e):
        return RED if len(B.intersection(e)) >= 2 else BLUE

    return color


_RULES = {"ccc": _ccc_rule, "ck-small": _ck_rule, "ck-general": _ck_rule}


def _layout(kind: str, n: int, a: int, t: int) -> ConstructionLayout:
    A = frozenset(range(a))
    B = frozenset(range(a, n))
    h = complete(n, 3)
    ch = ColoredHypergraph.from_rule(h, t, _RULES[kind](A, B))
    return ConstructionLayout(kind, A, B, ch)


def lower_bound_ccc(n: int) -> ConstructionLayout:
    """3-coloring of K_n^3 with no red or blue Berge C_n and no green Berge C_3.

    A = {0, 1}. Green: triples meeting A twice. Red: triples through 0 but
    not 1. Blue: everything else. Red misses vertex 1 and blue misses vertex
    0, so neither can host a spanning Berge cycle.
    """
    if n < 4:
        raise InvalidArguments("lower_bound_ccc needs n >= 4")
    return _layout("ccc", n, 2, 3)


def lower_bound_ck_small(m: int) -> ConstructionLayout:
    """2-coloring of K_m^3: red = triples with at least two vertices in
    B = {2..m-1}, blue = the m-2 triples through both A-vertices."""
    if m < 4:
        raise InvalidArguments("lower_bound_ck_small needs m >= 4")
    return _layout("ck-small", m, 2, 2)


def lower_bound_ck_general(m: int, n: int) -> ConstructionLayout:
    """2-coloring on m + (n-1)//2 - 2 vertices with |A| = (n-1)//2 and
    |B| = m - 2, colored like :func:`lower_bound_ck_small`."""
    if not m >= n >= 6:
        raise InvalidArguments(f"need m >= n >= 6, got m={m} n={n}")
    a = (n - 1) // 2
    return _layout("ck-general", m + a - 2, a, 2)


def ck_red_count(a: int, b: int) -> int:
    return comb(b, 2) * a + comb(b, 3)
