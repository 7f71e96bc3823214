"""Colored hypergraphs, shadow graphs, and color-listed thresholded shadows.

Colors are integers 0..t-1; the three-color constructions use 0 = red,
1 = blue, 2 = green.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import FormatError, InvalidArguments
from .hypergraph import Hypergraph, _content_lines, _ints

RED, BLUE, GREEN = 0, 1, 2

Pair = tuple[int, int]


def require_3_uniform(h: Hypergraph) -> None:
    if h.r != 3:
        raise InvalidArguments(f"operation requires a 3-uniform hypergraph, got r={h.r}")


@dataclass(frozen=True)
class ColoredHypergraph:
    base: Hypergraph
    t: int
    coloring: tuple[int, ...]

    def __post_init__(self):
        if self.t < 1:
            raise InvalidArguments("need at least one color")
        if len(self.coloring) != len(self.base.edges):
            raise InvalidArguments("coloring must assign every edge exactly one color")
        for c in self.coloring:
            if not 0 <= c < self.t:
                raise InvalidArguments(f"color {c} outside [0, {self.t})")

    @classmethod
    def monochromatic(cls, h: Hypergraph, t: int = 1, color: int = 0) -> ColoredHypergraph:
        return cls(h, t, (color,) * len(h.edges))

    @classmethod
    def from_rule(cls, h: Hypergraph, t: int, rule) -> ColoredHypergraph:
        return cls(h, t, tuple(rule(e) for e in h.edges))

    def color_of(self, edge_index: int) -> int:
        return self.coloring[edge_index]

    def class_indices(self, c: int) -> list[int]:
        return [i for i, x in enumerate(self.coloring) if x == c]


def color_class(ch: ColoredHypergraph, c: int) -> Hypergraph:
    """The hyperedges of color ``c`` on the full vertex set."""
    if not 0 <= c < ch.t:
        raise InvalidArguments(f"color {c} outside [0, {ch.t})")
    return Hypergraph(ch.base.n, ch.base.r, tuple(e for e, x in zip(ch.base.edges, ch.coloring) if x == c))


def shadow(h: Hypergraph) -> frozenset[Pair]:
    require_3_uniform(h)
    return frozenset(p for e in h.edges for p in combinations(e, 2))


@dataclass(frozen=True)
class ShadowGraph:
    """Shadow pairs with per-color multiplicities and threshold lists.

    Pairs whose list is empty are kept: the edge set matches the plain
    shadow regardless of threshold.
    """

    n: int
    threshold: int
    pair_counts: dict[Pair, tuple[int, ...]]
    lists: dict[Pair, frozenset[int]]

    def pairs(self) -> list[Pair]:
        return sorted(self.pair_counts)

    def has_color(self, u: int, v: int, c: int) -> bool:
        return c in self.lists.get((min(u, v), max(u, v)), ())

    def containers(self, u: int, v: int, c: int) -> int:
        counts = self.pair_counts.get((min(u, v), max(u, v)))
        return counts[c] if counts else 0


def shadow_with_threshold(ch: ColoredHypergraph, i: int) -> ShadowGraph:
    require_3_uniform(ch.base)
    if i < 1:
        raise InvalidArguments("threshold must be at least 1")
    counts: dict[Pair, list[int]] = {}
    for e, c in zip(ch.base.edges, ch.coloring):
        for p in combinations(e, 2):
            counts.setdefault(p, [0] * ch.t)[c] += 1
    frozen = {p: tuple(v) for p, v in counts.items()}
    lists = {p: frozenset(c for c, k in enumerate(v) if k >= i) for p, v in frozen.items()}
    return ShadowGraph(ch.base.n, i, frozen, lists)


def format_shadow(sg: ShadowGraph) -> str:
    lines = []
    for u, v in sg.pairs():
        cols = sorted(sg.lists[(u, v)])
        lines.append(f"p {u} {v} : " + (" ".join(map(str, cols)) if cols else "-"))
    return "\n".join(lines) + ("\n" if lines else "")


# --- .col text format ------------------------------------------------------

def serialize_coloring(ch: ColoredHypergraph) -> str:
    lines = [f"col {ch.t}"]
    lines.extend(f"c {i} {c}" for i, c in enumerate(ch.coloring))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str | bytes, h: Hypergraph) -> ColoredHypergraph:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty input: missing 'col' header")
    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "col":
        raise FormatError(f"line {lineno}: header must be 'col <t>'")
    (t,) = _ints(head[1:], lineno)
    if t < 1:
        raise FormatError(f"line {lineno}: color count must be positive")
    colors: list[int | None] = [None] * len(h.edges)
    for lineno, tok in lines[1:]:
        if tok[0] != "c" or len(tok) != 3:
            raise FormatError(f"line {lineno}: expected 'c <edge-index> <color>'")
        idx, c = _ints(tok[1:], lineno)
        if not 0 <= idx < len(h.edges):
            raise FormatError(f"line {lineno}: edge index {idx} out of range")
        if not 0 <= c < t:
            raise FormatError(f"line {lineno}: color {c} outside [0, {t})")
        if colors[idx] is not None:
            raise FormatError(f"line {lineno}: edge {idx} colored twice")
        colors[idx] = c
    missing = [i for i, c in enumerate(colors) if c is None]
    if missing:
        raise FormatError(f"edges without a color: {missing[:10]}")
    return ColoredHypergraph(h, t, tuple(colors))  # type: ignore[arg-type]


