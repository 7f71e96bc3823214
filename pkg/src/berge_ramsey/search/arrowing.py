"""Exact arrowing decisions for t-colorings of K_N^3."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import multiprocessing as mp
import numpy as np

from ..berge import FamilySpec, find_in_color
from ..errors import InvalidArguments, NotFoundWithinBound
from ..hypergraph import complete
from ..shadow import ColoredHypergraph
from .kernel import Detector, EdgeSpace, Engine

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArrowingProblem:
    N: int
    specs: tuple[FamilySpec, ...]
    strategy: str = "dfs"
    symmetry: bool = True
    worker_count: int = 1
    sym_every: int | None = None
    split_depth: int | None = None
    debug: bool = False

    def __post_init__(self):
        object.__setattr__(self, "specs", tuple(self.specs))
        if not self.specs:
            raise InvalidArguments("need at least one color")
        if self.N < 3:
            raise InvalidArguments("need N >= 3")
        if self.strategy not in ("dfs", "turan-first"):
            raise InvalidArguments(f"unknown strategy {self.strategy!r}")
        if self.strategy == "turan-first":
            third = self.specs[2] if len(self.specs) == 3 else None
            if third is None or (third.kind, third.order) != ("cycle", 3):
                raise InvalidArguments("turan-first needs three colors with BC:3 last")
        if self.worker_count < 1:
            raise InvalidArguments("worker_count must be positive")

    @property
    def t(self) -> int:
        return len(self.specs)

    def every(self) -> int:
        if self.sym_every is not None:
            return self.sym_every
        return 1 if self.N <= 5 else 3


@dataclass
class SearchStats:
    nodes: int = 0
    prunes_mono: int = 0
    prunes_sym: int = 0
    ms: float = 0.0
    green_classes: int = 0

    def absorb(self, engine: Engine) -> None:
        self.nodes += engine.nodes
        self.prunes_mono += engine.prunes_mono
        self.prunes_sym += engine.prunes_sym

    def merge(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.prunes_mono += other.prunes_mono
        self.prunes_sym += other.prunes_sym
        self.green_classes += other.green_classes

    def line(self) -> str:
        return f"nodes={self.nodes} prunes_mono={self.prunes_mono} prunes_sym={self.prunes_sym} ms={self.ms:.0f}"


@dataclass
class SearchOutcome:
    """``counterexample`` is None exactly when the verdict is ARROWS."""

    problem: ArrowingProblem
    counterexample: ColoredHypergraph | None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def arrows(self) -> bool:
        return self.counterexample is None

    @property
    def verdict(self) -> str:
        return "ARROWS" if self.arrows else "COUNTEREXAMPLE"


def certify_counterexample(ch: ColoredHypergraph, specs: Sequence[FamilySpec]) -> None:
    """Raise if some color class contains its forbidden family."""
    for c, spec in enumerate(specs):
        got = find_in_color(ch, spec, c)
        if got is not None:
            raise AssertionError(f"counterexample has color {c} copy of {spec}: {got}")


def _detectors(space: EdgeSpace, specs: Sequence[FamilySpec]) -> list[Detector]:
    shared: dict[FamilySpec, Detector] = {}
    out = []
    for s in specs:
        if s not in shared:
            shared[s] = Detector(space, s)
        out.append(shared[s])
    return out


# --- plain dfs ---------------------------------------------------------------

def _dfs_engine(p: ArrowingProblem, space: EdgeSpace) -> Engine:
    table = space.perm_table if p.symmetry else None
    return Engine(space, list(range(space.M)), list(_detectors(space, p.specs)), table, p.every(), p.debug)


def _collect_prefixes(engine: Engine, depth: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    positions = engine.positions
    engine.positions = positions[:depth]

    def leaf():
        out.append(tuple(int(x) for x in engine.vec[:depth]))
        return False

    engine.on_leaf = leaf
    engine.run(0)
    engine.positions = positions
    return out


_WORKER: dict = {}


def _subtree(prefix: tuple[int, ...]):
    engine: Engine = _WORKER["engine"]
    engine.clear()
    engine.nodes = engine.prunes_mono = engine.prunes_sym = 0
    engine.set_prefix(prefix)
    found: list[tuple[int, ...]] = []

    def leaf():
        found.append(tuple(int(x) for x in engine.vec))
        return True

    engine.on_leaf = leaf
    engine.run(len(prefix))
    st = SearchStats(engine.nodes, engine.prunes_mono, engine.prunes_sym)
    return (found[0] if found else None), st


def _run_dfs(p: ArrowingProblem, space: EdgeSpace, stats: SearchStats) -> tuple[int, ...] | None:
    engine = _dfs_engine(p, space)
    if p.worker_count == 1:
        found: list[tuple[int, ...]] = []

        def leaf():
            found.append(tuple(int(x) for x in engine.vec))
            return True

        engine.on_leaf = leaf
        engine.run(0)
        stats.absorb(engine)
        return found[0] if found else None

    depth = p.split_depth if p.split_depth is not None else min(space.M, 6)
    prefixes = _collect_prefixes(engine, depth)
    stats.absorb(engine)
    _WORKER["engine"] = _dfs_engine(p, space)
    ctx = mp.get_context("fork")
    with ProcessPoolExecutor(max_workers=p.worker_count, mp_context=ctx) as pool:
        futures = [pool.submit(_subtree, pre) for pre in prefixes]
        # the least prefix with a counterexample wins, so the witness matches
        # the single-worker search
        for fut in futures:
            found, st = fut.result()
            stats.merge(st)
            if found is not None:
                for other in futures:
                    other.cancel()
                return found
    return None


# --- turan-first ---------------------------------------------------------------

def green_classes(space: EdgeSpace, spec: FamilySpec, symmetry: bool = True) -> tuple[list[int], Engine]:
    """Every spec-free edge set of K_N^3 as a mask, one per S_N-orbit when
    ``symmetry`` is on. The engine is returned for its statistics."""
    det = Detector(space, spec)
    table = space.perm_table if symmetry else None
    # choice 0 = outside the class, choice 1 = inside
    engine = Engine(space, list(range(space.M)), [None, det], table, 1)
    out: list[int] = []

    def leaf():
        out.append(engine.masks[1])
        return False

    engine.on_leaf = leaf
    engine.run(0)
    return out, engine


def _run_turan_first(p: ArrowingProblem, space: EdgeSpace, stats: SearchStats) -> tuple[int, ...] | None:
    greens, g_engine = green_classes(space, p.specs[2], p.symmetry)
    stats.absorb(g_engine)
    stats.green_classes = len(greens)
    dets = _detectors(space, p.specs[:2])
    for g in greens:
        positions = [j for j in range(space.M) if not g >> j & 1]
        table = None
        if p.symmetry:
            stab = space.stabilizer(g)
            pos_of = np.full(space.M, -1, dtype=np.int16)
            pos_of[positions] = np.arange(len(positions), dtype=np.int16)
            table = pos_of[stab[:, positions]]
        engine = Engine(space, positions, list(dets), table, p.every(), p.debug)
        found: list[tuple[int, ...]] = []

        def leaf():
            found.append(tuple(int(x) for x in engine.vec))
            return True

        engine.on_leaf = leaf
        engine.run(0)
        stats.absorb(engine)
        if found:
            colors = [2] * space.M
            for j, c in zip(positions, found[0]):
                colors[j] = c
            return tuple(colors)
    return None


def decide_arrowing(p: ArrowingProblem) -> SearchOutcome:
    """Does every coloring of K_N^3 contain, for some i, a color-i member of
    ``specs[i]``? Counterexamples are re-certified by the general detector."""
    space = EdgeSpace(p.N)
    stats = SearchStats()
    start = time.perf_counter()
    if p.strategy == "dfs":
        colors = _run_dfs(p, space, stats)
    else:
        colors = _run_turan_first(p, space, stats)
    stats.ms = (time.perf_counter() - start) * 1000
    log.info("N=%d %s: %s", p.N, ",".join(map(str, p.specs)), stats.line())
    if colors is None:
        return SearchOutcome(p, None, stats)
    ch = ColoredHypergraph(complete(p.N, 3), p.t, tuple(colors))
    certify_counterexample(ch, p.specs)
    return SearchOutcome(p, ch, stats)


@dataclass
class RamseyResult:
    number: int
    counterexample: ColoredHypergraph | None
    outcomes: list[SearchOutcome]


def ramsey_number(specs: Sequence[FamilySpec], n_max: int, **options) -> RamseyResult:
    """Least N <= n_max that arrows, with the counterexample found at N-1."""
    outcomes = []
    previous = None
    for N in range(3, n_max + 1):
        out = decide_arrowing(ArrowingProblem(N, tuple(specs), **options))
        outcomes.append(out)
        if out.arrows:
            return RamseyResult(N, previous, outcomes)
        previous = out.counterexample
    raise NotFoundWithinBound(f"no N <= {n_max} arrows {','.join(map(str, specs))}")
