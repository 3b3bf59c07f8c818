"""Strong and Cartesian products with coordinatized vertices.

Product vertex ids are assigned in row-major order of the coordinate tuples
(the last factor varies fastest), which makes the n-ary construction agree
with the left-fold of the binary product and keeps all outputs bit-stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .digraph import Arc, Digraph
from .errors import (
    ArcNotPresentError,
    EmptyFactorListError,
    IndexOutOfRangeError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class CoordGraph:
    """A product digraph whose vertices carry per-factor coordinates."""

    graph: Digraph
    factors: tuple[Digraph, ...]
    coords: tuple[tuple[int, ...], ...]

    def vertex_at(self, coord: Sequence[int]) -> int:
        """Row-major vertex id of a coordinate tuple."""
        vid = 0
        for factor, c in zip(self.factors, coord):
            vid = vid * factor.n + c
        return vid


def _strides(sizes: Sequence[int]) -> list[int]:
    strides = [1] * len(sizes)
    for j in range(len(sizes) - 2, -1, -1):
        strides[j] = strides[j + 1] * sizes[j + 1]
    return strides


def _grid(sizes: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    return tuple(itertools.product(*[range(s) for s in sizes]))


def strong_product(factors: Sequence[Digraph]) -> CoordGraph:
    """Arc xy present iff every coordinate stays equal or moves along a
    factor arc, and x != y."""
    if not factors:
        raise EmptyFactorListError("strong product needs at least one factor")
    factors = tuple(factors)
    sizes = [f.n for f in factors]
    coords = _grid(sizes)
    strides = _strides(sizes)
    closed = [
        [(v,) + f.out_adj[v] for v in range(f.n)]  # closed out-neighborhoods
        for f in factors
    ]
    arcs: list[Arc] = []
    for i, c in enumerate(coords):
        for nb in itertools.product(*[closed[j][c[j]] for j in range(len(factors))]):
            if nb != c:
                arcs.append((i, sum(x * s for x, s in zip(nb, strides))))
    return CoordGraph(Digraph(len(coords), arcs), factors, coords)


def cartesian_product(factors: Sequence[Digraph]) -> CoordGraph:
    """Arc present iff exactly one coordinate moves along a factor arc."""
    if not factors:
        raise EmptyFactorListError("cartesian product needs at least one factor")
    factors = tuple(factors)
    sizes = [f.n for f in factors]
    coords = _grid(sizes)
    strides = _strides(sizes)
    arcs: list[Arc] = []
    for i, c in enumerate(coords):
        for j, factor in enumerate(factors):
            for w in factor.out_adj[c[j]]:
                arcs.append((i, i + (w - c[j]) * strides[j]))
    return CoordGraph(Digraph(len(coords), arcs), factors, coords)


def layer(cg: CoordGraph, j: int, x: int) -> Digraph:
    """The copy of factor j through vertex x, relabeled by coordinate j."""
    if not 0 <= j < len(cg.factors):
        raise IndexOutOfRangeError(f"factor index {j} outside 0..{len(cg.factors) - 1}")
    if not 0 <= x < cg.graph.n:
        raise VertexOutOfRangeError(f"vertex {x} outside 0..{cg.graph.n - 1}")
    base = cg.coords[x]
    stride = _strides([f.n for f in cg.factors])[j]
    origin = cg.vertex_at(base) - base[j] * stride
    members = [origin + v * stride for v in range(cg.factors[j].n)]
    arcs = [
        (u, w)
        for u in range(len(members))
        for w in range(len(members))
        if u != w and cg.graph.has_arc(members[u], members[w])
    ]
    return Digraph(cg.factors[j].n, arcs)


def classify_edge(cg: CoordGraph, arc: Arc) -> int | None:
    """The single differing coordinate of a Cartesian arc, or None when the
    endpoints differ in more than one coordinate (non-Cartesian)."""
    if arc not in cg.graph.arc_set:
        raise ArcNotPresentError(f"arc {arc} not present")
    cu, cv = cg.coords[arc[0]], cg.coords[arc[1]]
    diff = [j for j, (a, b) in enumerate(zip(cu, cv)) if a != b]
    return diff[0] if len(diff) == 1 else None
