"""Factorization records and exact reconstruction checks."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Arc, Digraph
from .errors import VertexOutOfRangeError


@dataclass(frozen=True)
class Factorization:
    """Ordered factor list plus the coordinate tuple of every input vertex.

    The product of the factors under `coords` must reproduce the original
    arc set exactly; every factor is prime for the product kind it was
    produced for and has at least two vertices unless the input was K_1.
    """

    factors: tuple[Digraph, ...]
    coords: tuple[tuple[int, ...], ...]


def _vertex_index(f: Factorization) -> dict[tuple[int, ...], int]:
    index = {c: v for v, c in enumerate(f.coords)}
    if len(index) != len(f.coords):
        raise VertexOutOfRangeError("coordinate map is not a bijection")
    return index


def reconstruct_strong(f: Factorization) -> Digraph:
    """Strong product of the factors, expressed over the original vertex ids."""
    index = _vertex_index(f)
    closed = [[(v,) + g.out_adj[v] for v in range(g.n)] for g in f.factors]
    arcs: list[Arc] = []
    for v, c in enumerate(f.coords):
        stack: list[tuple[int, ...]] = [()]
        for j in range(len(f.factors)):
            stack = [prefix + (w,) for prefix in stack for w in closed[j][c[j]]]
        for nb in stack:
            if nb != c:
                arcs.append((v, index[nb]))
    return Digraph(len(f.coords), arcs)


def reconstruct_cartesian(f: Factorization) -> Digraph:
    """Cartesian product of the factors, expressed over the original ids."""
    index = _vertex_index(f)
    arcs: list[Arc] = []
    for v, c in enumerate(f.coords):
        for j, g in enumerate(f.factors):
            for w in g.out_adj[c[j]]:
                arcs.append((v, index[c[:j] + (w,) + c[j + 1 :]]))
    return Digraph(len(f.coords), arcs)
