"""Dense bitmask kernel: edges of K_N^3 are bit positions 0..C(N,3)-1 in
lexicographic order, and a color class is a single int."""

from __future__ import annotations

from functools import cached_property
from itertools import combinations, permutations
from math import comb

import numpy as np

from ..berge import FamilySpec
from ..errors import ScaleExceeded
from ..matching import saturating_assignment

MAX_EDGES = 64


class EdgeSpace:
    """Index of K_N^3: triples, pair containers and vertex permutations."""

    def __init__(self, N: int):
        if N < 3:
            raise ScaleExceeded(f"need at least 3 vertices, got {N}")
        if comb(N, 3) > MAX_EDGES:
            raise ScaleExceeded(
                f"C({N},3) = {comb(N, 3)} edges exceeds the exhaustive kernel's limit of {MAX_EDGES}; "
                "use the lower-bound generators for larger instances"
            )
        self.N = N
        self.edges = list(combinations(range(N), 3))
        self.M = len(self.edges)
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.pair_mask: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.edges):
            for p in combinations(e, 2):
                self.pair_mask[p] = self.pair_mask.get(p, 0) | 1 << i

    def image_row(self, perm) -> list[int]:
        return [self.index[tuple(sorted(perm[v] for v in e))] for e in self.edges]

    @cached_property
    def perm_table(self) -> np.ndarray:
        """Row k maps edge j to its image under the k-th vertex permutation."""
        rows = [self.image_row(p) for p in permutations(range(self.N))]
        return np.asarray(rows, dtype=np.int16)

    def stabilizer(self, mask: int) -> np.ndarray:
        """Rows of :attr:`perm_table` mapping the edge set ``mask`` onto itself."""
        sel = np.array([j for j in range(self.M) if mask >> j & 1], dtype=np.int64)
        table = self.perm_table
        if sel.size == 0:
            return table
        arr = np.zeros(self.M, dtype=bool)
        arr[sel] = True
        keep = arr[table[:, sel]].all(axis=1)
        return table[keep]


class Detector:
    """Decides whether a class mask contains a member of ``spec``.

    Candidate cores are all injective placements of the pattern, deduplicated
    by their set of image pairs. Queries are incremental: ``hit(mask, e)``
    assumes ``mask`` without ``e`` is free, so only cores with a pattern pair
    inside ``e`` are examined.
    """

    def __init__(self, space: EdgeSpace, spec: FamilySpec):
        self.space = space
        self.spec = spec
        k = spec.order
        self.min_edges = len(spec.edges)
        cores = {}
        if k <= space.N:
            for img in permutations(range(space.N), k):
                pairs = tuple(
                    (img[u], img[v]) if img[u] < img[v] else (img[v], img[u]) for u, v in spec.edges
                )
                key = frozenset(pairs)
                if key not in cores:
                    cores[key] = (img, tuple(space.pair_mask[p] for p in pairs))
        self.cores = list(cores.values())
        self.by_edge: list[list[tuple[int, ...]]] = [[] for _ in range(space.M)]
        self.core_by_edge: list[list[int]] = [[] for _ in range(space.M)]
        for ci, (_, masks) in enumerate(self.cores):
            touched = 0
            for pm in masks:
                touched |= pm
            for e in range(space.M):
                if touched >> e & 1:
                    self.by_edge[e].append(masks)
                    self.core_by_edge[e].append(ci)
        self.cache: dict[int, bool] = {}

    def hit(self, mask: int, e: int) -> bool:
        got = self.cache.get(mask)
        if got is None:
            got = self._scan(mask, e)
            self.cache[mask] = got
        return got

    def _scan(self, mask: int, e: int) -> bool:
        if mask.bit_count() < self.min_edges:
            return False
        for masks in self.by_edge[e]:
            cands = [pm & mask for pm in masks]
            if all(cands) and saturating_assignment(cands) is not None:
                return True
        return False

    def witness(self, mask: int, e: int | None = None):
        """(core vertices, assigned edge indices) of a copy inside ``mask``."""
        pool = range(len(self.cores)) if e is None else self.core_by_edge[e]
        for ci in pool:
            img, masks = self.cores[ci]
            cands = [pm & mask for pm in masks]
            if all(cands):
                got = saturating_assignment(cands)
                if got is not None:
                    return img, tuple(got)
        return None

    def contains(self, mask: int) -> bool:
        return self.witness(mask) is not None


def lex_prune(table: np.ndarray, vec: np.ndarray, d: int) -> bool:
    """True when some permutation provably maps every completion of the
    length-``d`` prefix of ``vec`` to a lexicographically smaller vector.

    ``table[k, j]`` is the position whose value lands at position j under
    the k-th permutation; ``vec`` holds -1 at unassigned positions.
    """
    if d == 0:
        return False
    img = vec[table[:, :d]]
    target = vec[:d]
    diff = img != target
    first = diff.argmax(axis=1)
    rows = np.arange(img.shape[0])
    at = img[rows, first]
    return bool(np.any(diff[rows, first] & (at >= 0) & (at < target[first])))


class Engine:
    """Depth-first assignment of one choice per position.

    ``choices[c]`` is either a Detector (the choice adds the edge to a class
    that must stay free of that family) or None (unconstrained). Positions
    are edge indices; the symmetry table is expressed over positions.
    """

    def __init__(self, space: EdgeSpace, positions: list[int], choices: list[Detector | None],
                 table: np.ndarray | None = None, sym_every: int = 1, debug: bool = False):
        self.space = space
        self.positions = positions
        self.choices = choices
        self.table = table
        self.sym_every = max(1, sym_every)
        self.debug = debug
        self.masks = [0] * len(choices)
        self.vec = np.full(len(positions), -1, dtype=np.int8)
        self.nodes = 0
        self.prunes_mono = 0
        self.prunes_sym = 0
        self.bound = None  # callable(depth) -> bool, True means cut
        self.on_leaf = None  # callable() -> bool, True means stop

    def run(self, depth: int = 0) -> bool:
        """Search the subtree below the current prefix; True if stopped."""
        self.nodes += 1
        if depth == len(self.positions):
            return self.on_leaf()
        if self.bound is not None and self.bound(depth):
            return False
        e = self.positions[depth]
        bit = 1 << e
        for c, det in enumerate(self.choices):
            mask = self.masks[c] | bit
            if det is not None and det.hit(mask, e):
                self.prunes_mono += 1
                if self.debug:
                    self._certify_prune(det, mask, e)
                continue
            self.vec[depth] = c
            d = depth + 1
            if self.table is not None and (d % self.sym_every == 0 or d == len(self.positions)) \
                    and lex_prune(self.table, self.vec, d):
                self.prunes_sym += 1
                self.vec[depth] = -1
                continue
            old = self.masks[c]
            self.masks[c] = mask
            stop = self.run(d)
            self.masks[c] = old
            self.vec[depth] = -1
            if stop:
                return True
        return False

    def set_prefix(self, prefix) -> None:
        for depth, c in enumerate(prefix):
            self.vec[depth] = c
            self.masks[c] |= 1 << self.positions[depth]

    def clear(self) -> None:
        self.masks = [0] * len(self.choices)
        self.vec[:] = -1

    def _certify_prune(self, det: Detector, mask: int, e: int) -> None:
        from ..berge import BergeCertificate, check_certificate
        from ..hypergraph import complete

        found = det.witness(mask, e)
        assert found is not None, "prune without a witness"
        core, assign = found
        cert = BergeCertificate(tuple(core), assign, det.spec.kind)
        assert check_certificate(complete(self.space.N, 3), cert, det.spec), "invalid prune witness"
        assert all(mask >> i & 1 for i in assign), "prune witness leaves the class"
