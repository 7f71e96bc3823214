"""Immutable r-uniform hypergraphs on the vertex set 0..n-1."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .errors import FormatError, InvalidArguments

Edge = tuple[int, ...]


def edge_mask(edge: Iterable[int]) -> int:
    """Vertex bitmask of an edge."""
    m = 0
    for v in edge:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph with edges kept in lexicographic order.

    Construct through :meth:`from_edges` unless the edges are already
    canonical; the constructor validates but does not reorder.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise InvalidArguments(f"bad dimensions n={self.n} r={self.r}")
        prev = None
        for e in self.edges:
            if len(e) != self.r:
                raise InvalidArguments(f"edge {e} does not have {self.r} vertices")
            if any(b <= a for a, b in zip(e, e[1:])):
                raise InvalidArguments(f"edge {e} is not strictly increasing")
            if e[0] < 0 or e[-1] >= self.n:
                raise InvalidArguments(f"edge {e} has a vertex outside [0, {self.n})")
            if prev is not None and e <= prev:
                raise InvalidArguments("edges must be distinct and sorted")
            prev = e
        object.__setattr__(self, "masks", tuple(edge_mask(e) for e in self.edges))

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
        canon = []
        for e in edges:
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise InvalidArguments(f"edge {t} repeats a vertex")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise InvalidArguments(f"duplicate edge {a}")
        return cls(n, r, tuple(canon))

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __len__(self) -> int:
        return len(self.edges)

    def index(self, edge: Iterable[int]) -> int:
        """Position of ``edge`` in the canonical edge list."""
        t = tuple(sorted(edge))
        try:
            return self.edges.index(t)
        except ValueError:
            raise KeyError(t) from None

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidArguments(f"vertex {v} outside [0, {self.n})")


def complete(n: int, r: int) -> Hypergraph:
    """K_n^r: every r-subset of [0, n)."""
    if r < 1 or r > n:
        raise InvalidArguments(f"need 1 <= r <= n, got n={n} r={r}")
    return Hypergraph(n, r, tuple(combinations(range(n), r)))


def empty(n: int, r: int = 3) -> Hypergraph:
    return Hypergraph(n, r, ())


def induced(h: Hypergraph, s: Iterable[int]) -> tuple[Hypergraph, dict[int, int]]:
    """Subhypergraph induced on ``s``, relabeled to 0..|s|-1 in vertex order.

    Returns the hypergraph and the map new label -> original vertex.
    """
    keep = sorted(set(s))
    for v in keep:
        h._check_vertex(v)
    relabel = {v: i for i, v in enumerate(keep)}
    smask = edge_mask(keep)
    edges = tuple(
        tuple(relabel[v] for v in e)
        for e, m in zip(h.edges, h.masks)
        if m & smask == m
    )
    return Hypergraph(len(keep), h.r, edges), {i: v for v, i in relabel.items()}


def remove_vertex(h: Hypergraph, v: int) -> tuple[Hypergraph, dict[int, int]]:
    """H - v, relabeled; the map sends new labels back to original vertices."""
    h._check_vertex(v)
    return induced(h, (u for u in h.vertices if u != v))


def degree(h: Hypergraph, v: int) -> int:
    h._check_vertex(v)
    bit = 1 << v
    return sum(1 for m in h.masks if m & bit)


def neighborhood(h: Hypergraph, v: int, s: Iterable[int] | None = None) -> frozenset[int]:
    """Vertices of ``s`` sharing an edge with ``v`` (``v`` itself excluded)."""
    h._check_vertex(v)
    s = h.vertices if s is None else list(s)
    for u in s:
        h._check_vertex(u)
    bit = 1 << v
    covered = 0
    for m in h.masks:
        if m & bit:
            covered |= m
    return frozenset(u for u in s if u != v and covered >> u & 1)


# --- .hg text format -------------------------------------------------------

def serialize(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"hg {h.r} {h.n} {len(h.edges)}")
    lines.extend("e " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse(text: str | bytes) -> Hypergraph:
    """Parse .hg text. Edges must be listed with increasing vertices."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty input: missing 'hg' header")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "hg":
        raise FormatError(f"line {lineno}: header must be 'hg <r> <n> <m>'")
    r, n, m = _ints(head[1:], lineno)
    if r < 1 or n < 0 or m < 0:
        raise FormatError(f"line {lineno}: invalid header values")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header declares {m} edges, found {len(body)}")
    edges = []
    seen = set()
    for lineno, tok in body:
        if tok[0] != "e":
            raise FormatError(f"line {lineno}: expected an 'e' line")
        vs = _ints(tok[1:], lineno)
        if len(vs) != r:
            raise FormatError(f"line {lineno}: edge has {len(vs)} vertices, expected {r}")
        if any(b <= a for a, b in zip(vs, vs[1:])):
            raise FormatError(f"line {lineno}: vertices must be strictly increasing")
        if vs[0] < 0 or vs[-1] >= n:
            raise FormatError(f"line {lineno}: vertex out of range [0, {n})")
        t = tuple(vs)
        if t in seen:
            raise FormatError(f"line {lineno}: duplicate edge {t}")
        seen.add(t)
        edges.append(t)
    return Hypergraph(n, r, tuple(sorted(edges)))
