"""Berge cycle / clique / pattern detection with checkable certificates.

A Berge copy of a graph G in a 3-uniform hypergraph is a choice of distinct
core vertices for G's vertices plus distinct hyperedges, one per edge of G,
each containing the two endpoints. Every search below fixes a candidate core
and decides the hyperedge assignment with one bipartite matching, so the
searches are exact.

Intended scale is desk verification: hosts up to ~16 vertices, cliques up to
~12 core vertices, cycles up to length ~8 on dense hosts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import FormatError, InvalidArguments, PreconditionViolated
from .hypergraph import Hypergraph, _content_lines, _ints
from .matching import saturating_assignment
from .shadow import ColoredHypergraph, require_3_uniform

PatternEdge = tuple[int, int]


@dataclass(frozen=True)
class FamilySpec:
    """The family B^3 G for a pattern graph G on vertices 0..order-1.

    ``edges`` fixes the pattern-edge order used by certificates: cycle edges
    run v0v1, v1v2, ..., v(k-1)v0; clique edges are in lex order; a general
    pattern keeps its input order.
    """

    kind: str
    order: int
    edges: tuple[PatternEdge, ...] = field(default=())

    def __post_init__(self):
        if self.kind == "cycle":
            if self.order < 3:
                raise InvalidArguments("Berge cycles need length >= 3")
            edges = tuple((i, (i + 1) % self.order) for i in range(self.order))
        elif self.kind == "clique":
            if self.order < 2:
                raise InvalidArguments("Berge cliques need order >= 2")
            edges = tuple(combinations(range(self.order), 2))
        elif self.kind == "graph":
            edges = self.edges
            seen = set()
            for u, v in edges:
                if u == v or not (0 <= u < self.order and 0 <= v < self.order):
                    raise InvalidArguments(f"bad pattern edge {(u, v)}")
                key = (min(u, v), max(u, v))
                if key in seen:
                    raise InvalidArguments(f"pattern edge {key} repeated")
                seen.add(key)
        else:
            raise InvalidArguments(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "edges", edges)

    def __str__(self) -> str:
        if self.kind == "cycle":
            return f"BC:{self.order}"
        if self.kind == "clique":
            return f"BK:{self.order}"
        return "BG:" + ",".join(f"{u}-{v}" for u, v in self.edges)


def BergeCycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", n)


def BergeClique(m: int) -> FamilySpec:
    return FamilySpec("clique", m)


def BergeOf(edges: Iterable[Sequence[int]], order: int | None = None) -> FamilySpec:
    edges = tuple((int(u), int(v)) for u, v in edges)
    if order is None:
        order = 1 + max((max(e) for e in edges), default=-1)
    return FamilySpec("graph", order, edges)


_FAMILY_RE = re.compile(r"^\s*B([CK])\s*:\s*(\d+)\s*$")


def parse_family(text: str) -> FamilySpec:
    m = _FAMILY_RE.match(text)
    if not m:
        raise InvalidArguments(f"family must look like BC:<n> or BK:<m>, got {text!r}")
    size = int(m.group(2))
    return BergeCycle(size) if m.group(1) == "C" else BergeClique(size)


def parse_families(text: str) -> list[FamilySpec]:
    return [parse_family(part) for part in text.split(",") if part.strip()]


@dataclass(frozen=True)
class BergeCertificate:
    """Core vertices (in pattern-vertex order) and one host edge index per
    pattern edge, in the family's pattern-edge order."""

    core: tuple[int, ...]
    assignment: tuple[int, ...]
    kind: str = "graph"
    color: int | None = None

    def hyperedges(self, h: Hypergraph) -> list[tuple[int, ...]]:
        return [h.edges[i] for i in self.assignment]


# --- searching ---------------------------------------------------------------

class _Index:
    """Pair -> containing-edge bitmask, and shadow adjacency, for one host."""

    def __init__(self, h: Hypergraph, allowed: Iterable[int] | None = None):
        require_3_uniform(h)
        self.h = h
        self.containers: dict[tuple[int, int], int] = {}
        self.edge_count = 0
        idx = range(len(h.edges)) if allowed is None else sorted(set(allowed))
        for i in idx:
            self.edge_count += 1
            a, b, c = h.edges[i]
            bit = 1 << i
            for p in ((a, b), (a, c), (b, c)):
                self.containers[p] = self.containers.get(p, 0) | bit
        self.adj = [0] * h.n
        for u, v in self.containers:
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.degree = [0] * h.n
        for i in idx:
            for v in h.edges[i]:
                self.degree[v] += 1

    def cands(self, u: int, v: int) -> int:
        return self.containers.get((u, v) if u < v else (v, u), 0)

    def assign(self, pairs: Sequence[tuple[int, int]]) -> tuple[int, ...] | None:
        chosen = saturating_assignment([self.cands(u, v) for u, v in pairs])
        return None if chosen is None else tuple(chosen)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _cycle_search(ix: _Index, n: int, only_core: Sequence[int] | None = None):
    h = ix.h
    if ix.edge_count < n or h.n < n:
        return None
    path: list[int] = []

    def close():
        pairs = [(path[i], path[(i + 1) % n]) for i in range(n)]
        got = ix.assign(pairs)
        return None if got is None else BergeCertificate(tuple(path), got, "cycle")

    def extend(start: int, used: int):
        last = path[-1]
        if len(path) == n:
            if ix.adj[last] >> start & 1 and path[1] < last:
                return close()
            return None
        for v in _bits(ix.adj[last] & ~used & ~((1 << (start + 1)) - 1)):
            path.append(v)
            got = extend(start, used | 1 << v)
            path.pop()
            if got:
                return got
        return None

    for s in range(h.n):
        if not ix.adj[s]:
            continue
        path.append(s)
        got = extend(s, 1 << s)
        path.pop()
        if got:
            return got
    return None


def find_berge_cycle(h: Hypergraph, n: int, edges: Iterable[int] | None = None) -> BergeCertificate | None:
    """First Berge C_n (lexicographically least canonical core), or None.

    Cores are enumerated up to rotation (smallest vertex first) and
    reflection (second vertex below the last). ``edges`` optionally restricts
    the host to a subset of edge indices; certificate indices stay global.
    """
    if n < 3:
        raise InvalidArguments("Berge cycles need length >= 3")
    return _cycle_search(_Index(h, edges), n)


def berge_cycle_on_core(h: Hypergraph, core: Sequence[int], edges: Iterable[int] | None = None) -> BergeCertificate | None:
    """Decide whether the cyclic sequence ``core`` carries a Berge cycle."""
    core = tuple(core)
    if len(core) < 3 or len(set(core)) != len(core):
        raise InvalidArguments("core must list at least 3 distinct vertices")
    ix = _Index(h, edges)
    n = len(core)
    got = ix.assign([(core[i], core[(i + 1) % n]) for i in range(n)])
    return None if got is None else BergeCertificate(core, got, "cycle")


def find_berge_clique(h: Hypergraph, m: int, edges: Iterable[int] | None = None) -> BergeCertificate | None:
    """First Berge K_m with the lexicographically least core set, or None."""
    if m < 2:
        raise InvalidArguments("Berge cliques need order >= 2")
    ix = _Index(h, edges)
    if ix.edge_count < m * (m - 1) // 2 or h.n < m:
        return None
    # each hyperedge through v covers at most two core pairs at v
    min_deg = (m - 1 + 1) // 2
    eligible = 0
    for v in range(h.n):
        if ix.degree[v] >= min_deg:
            eligible |= 1 << v
    clique: list[int] = []

    def grow(cands: int):
        if len(clique) == m:
            got = ix.assign(list(combinations(clique, 2)))
            return None if got is None else BergeCertificate(tuple(clique), got, "clique")
        need = m - len(clique)
        while cands and cands.bit_count() >= need:
            low = cands & -cands
            v = low.bit_length() - 1
            cands ^= low
            clique.append(v)
            got = grow(cands & ix.adj[v])
            clique.pop()
            if got:
                return got
        return None

    return grow(eligible)


def find_berge_copy(h: Hypergraph, g: FamilySpec | Iterable[Sequence[int]], edges: Iterable[int] | None = None) -> BergeCertificate | None:
    """Berge copy of an arbitrary small pattern graph.

    Pattern vertices are mapped injectively in order of descending pattern
    degree; every mapped pattern edge must land on a shadow pair.
    """
    spec = g if isinstance(g, FamilySpec) else BergeOf(g)
    ix = _Index(h, edges)
    k = spec.order
    pedges = spec.edges
    if ix.edge_count < len(pedges) or h.n < k:
        return None
    deg = [0] * k
    nbrs: list[list[int]] = [[] for _ in range(k)]
    for u, v in pedges:
        deg[u] += 1
        deg[v] += 1
        nbrs[u].append(v)
        nbrs[v].append(u)
    order = sorted(range(k), key=lambda x: (-deg[x], x))
    image = [-1] * k
    all_v = (1 << h.n) - 1

    def place(pos: int, used: int):
        if pos == k:
            got = ix.assign([(image[u], image[v]) for u, v in pedges])
            return None if got is None else BergeCertificate(tuple(image), got, spec.kind)
        x = order[pos]
        allowed = all_v & ~used
        for y in nbrs[x]:
            if image[y] >= 0:
                allowed &= ix.adj[image[y]]
        for v in _bits(allowed):
            if ix.degree[v] < deg[x]:
                continue
            image[x] = v
            got = place(pos + 1, used | 1 << v)
            image[x] = -1
            if got:
                return got
        return None

    return place(0, 0)


def find_berge(h: Hypergraph, spec: FamilySpec, edges: Iterable[int] | None = None) -> BergeCertificate | None:
    if spec.kind == "cycle":
        return find_berge_cycle(h, spec.order, edges)
    if spec.kind == "clique":
        return find_berge_clique(h, spec.order, edges)
    return find_berge_copy(h, spec, edges)


def find_in_color(ch: ColoredHypergraph, spec: FamilySpec, c: int) -> BergeCertificate | None:
    """Monochromatic copy of color ``c``; indices refer to ``ch.base``."""
    got = find_berge(ch.base, spec, ch.class_indices(c))
    if got is None:
        return None
    return BergeCertificate(got.core, got.assignment, got.kind, c)


# --- independent verification ----------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = "ok"

    def __bool__(self) -> bool:
        return self.ok


def check_certificate(
    h: Hypergraph,
    cert: BergeCertificate,
    spec: FamilySpec,
    color_filter: tuple[ColoredHypergraph, int] | None = None,
) -> CheckResult:
    """Re-verify a certificate from scratch; shares no code with the search."""
    if h.r != 3:
        return CheckResult(False, "uniformity")
    core = list(cert.core)
    if len(core) != spec.order:
        return CheckResult(False, "core-length")
    if any(not (0 <= v < h.n) for v in core):
        return CheckResult(False, "core-range")
    if len(set(core)) != len(core):
        return CheckResult(False, "core-repeat")
    if len(cert.assignment) != len(spec.edges):
        return CheckResult(False, "assign-length")
    if any(not (0 <= i < len(h.edges)) for i in cert.assignment):
        return CheckResult(False, "index-range")
    if len(set(cert.assignment)) != len(cert.assignment):
        return CheckResult(False, "injectivity")
    for (x, y), i in zip(spec.edges, cert.assignment):
        hyper = set(h.edges[i])
        if core[x] not in hyper or core[y] not in hyper:
            return CheckResult(False, "containment")
    if color_filter is not None:
        ch, c = color_filter
        if ch.base != h:
            return CheckResult(False, "color-host")
        if any(ch.coloring[i] != c for i in cert.assignment):
            return CheckResult(False, "color")
    return CheckResult(True)


# --- shadow lifting ----------------------------------------------------------

def _check_core(ch: ColoredHypergraph, core: Sequence[int], minimum: int) -> tuple[int, ...]:
    require_3_uniform(ch.base)
    core = tuple(core)
    if len(core) < minimum or len(set(core)) != len(core):
        raise InvalidArguments(f"core needs at least {minimum} distinct vertices")
    if any(not 0 <= v < ch.base.n for v in core):
        raise InvalidArguments("core vertex out of range")
    return core


@lru_cache(maxsize=32)
def _class_index(ch: ColoredHypergraph, c: int) -> _Index:
    return _Index(ch.base, ch.class_indices(c))


def _lift(ch: ColoredHypergraph, pairs, c: int, threshold: int, core, kind: str) -> BergeCertificate:
    if not 0 <= c < ch.t:
        raise InvalidArguments(f"color {c} outside [0, {ch.t})")
    ix = _class_index(ch, c)
    for u, v in pairs:
        have = ix.cands(u, v).bit_count()
        if have < threshold:
            raise PreconditionViolated(
                f"pair {min(u, v)},{max(u, v)} lies in {have} hyperedges of color {c}, need {threshold}",
                (min(u, v), max(u, v)),
            )
    got = ix.assign(pairs)
    if got is None:
        raise AssertionError("Hall's condition failed although the shadow precondition holds")
    return BergeCertificate(tuple(core), got, kind, c)


def lift_shadow_cycle(ch: ColoredHypergraph, core: Sequence[int], c: int) -> BergeCertificate:
    """Monochromatic Berge cycle on ``core`` when every consecutive pair lies
    in at least two hyperedges of color ``c``.

    Any k core pairs have at least 2k incidences with such hyperedges and a
    hyperedge meets at most two of them unless the core is a triangle, so
    Hall's condition holds; a failed matching would be a defect.
    """
    core = _check_core(ch, core, 3)
    n = len(core)
    pairs = [(core[i], core[(i + 1) % n]) for i in range(n)]
    return _lift(ch, pairs, c, 2, core, "cycle")


def lift_shadow_clique(ch: ColoredHypergraph, core: Iterable[int], c: int) -> BergeCertificate:
    """Monochromatic Berge clique on ``core`` when every core pair lies in at
    least three hyperedges of color ``c`` (each hyperedge covers at most three
    pairs)."""
    core = _check_core(ch, sorted(core), 2)
    return _lift(ch, list(combinations(core, 2)), c, 3, core, "clique")


# --- .cert text format -------------------------------------------------------

def serialize_certificate(cert: BergeCertificate, size: int | None = None) -> str:
    size = len(cert.core) if size is None else size
    head = f"cert {cert.kind} {size}"
    if cert.color is not None:
        head += f" color {cert.color}"
    return "\n".join([
        head,
        "core " + " ".join(map(str, cert.core)),
        "assign " + " ".join(map(str, cert.assignment)),
    ]) + "\n"


def parse_certificate(text: str | bytes) -> tuple[BergeCertificate, int]:
    """Parse .cert text into the certificate and the header's size field."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _content_lines(text)
    if len(lines) != 3:
        raise FormatError("certificate needs exactly three lines: cert, core, assign")
    (ln, head), (ln2, core), (ln3, assign) = lines
    if head[0] != "cert" or len(head) not in (3, 5) or head[1] not in ("cycle", "clique", "graph"):
        raise FormatError(f"line {ln}: header must be 'cert <cycle|clique|graph> <k> [color <c>]'")
    (size,) = _ints([head[2]], ln)
    color = None
    if len(head) == 5:
        if head[3] != "color":
            raise FormatError(f"line {ln}: expected 'color <c>'")
        (color,) = _ints([head[4]], ln)
    if core[0] != "core":
        raise FormatError(f"line {ln2}: expected 'core' line")
    if assign[0] != "assign":
        raise FormatError(f"line {ln3}: expected 'assign' line")
    cert = BergeCertificate(tuple(_ints(core[1:], ln2)), tuple(_ints(assign[1:], ln3)), head[1], color)
    return cert, size


def spec_for_certificate(kind: str, size: int) -> FamilySpec:
    if kind == "cycle":
        return BergeCycle(size)
    if kind == "clique":
        return BergeClique(size)
    raise InvalidArguments("graph certificates need the pattern supplied separately")
