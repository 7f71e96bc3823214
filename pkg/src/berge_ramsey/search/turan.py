"""Exact Turán numbers at desk scale by branch-and-bound."""

from __future__ import annotations

import time
from dataclasses import dataclass

from ..berge import FamilySpec, find_berge
from ..hypergraph import Hypergraph
from .arrowing import SearchStats
from .kernel import Detector, EdgeSpace, Engine


@dataclass
class TuranResult:
    value: int
    witness: Hypergraph
    stats: SearchStats


def turan_max(N: int, spec: FamilySpec, symmetry: bool = True) -> TuranResult:
    """Maximum edge count of a spec-free 3-graph on N vertices, with witness.

    Edges are tried included-first; a branch is cut when even taking every
    remaining edge cannot beat the incumbent.
    """
    space = EdgeSpace(N)
    det = Detector(space, spec)
    table = space.perm_table if symmetry else None
    # choice 0 = include (constrained), choice 1 = exclude
    engine = Engine(space, list(range(space.M)), [det, None], table, 1)
    best = [-1, 0]

    def leaf():
        size = engine.masks[0].bit_count()
        if size > best[0]:
            best[:] = [size, engine.masks[0]]
        return size == space.M

    def bound(depth: int) -> bool:
        return engine.masks[0].bit_count() + (space.M - depth) <= best[0]

    engine.on_leaf = leaf
    engine.bound = bound
    start = time.perf_counter()
    engine.run(0)
    stats = SearchStats(engine.nodes, engine.prunes_mono, engine.prunes_sym)
    stats.ms = (time.perf_counter() - start) * 1000
    value, mask = best
    witness = Hypergraph(N, 3, tuple(e for j, e in enumerate(space.edges) if mask >> j & 1))
    if find_berge(witness, spec) is not None:
        raise AssertionError(f"Turán witness contains {spec}")
    return TuranResult(value, witness, stats)
