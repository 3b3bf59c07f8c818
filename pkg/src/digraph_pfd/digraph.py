"""Core digraph value type.

Vertices are dense integer ids 0..n-1 and every graph is immutable after
construction.  Closed neighborhoods (the vertex itself plus its successors,
respectively predecessors) are the workhorse of the whole package; they are
exposed as frozensets and additionally cached as integer bitmasks so that the
subset and intersection tests of the dispensability checks run in O(n/w) word
operations.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import LoopArcError, VertexOutOfRangeError

Arc = tuple[int, int]


def _check_endpoint(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{n - 1}")


class Digraph:
    """Immutable loop-free digraph over vertices 0..n-1."""

    __slots__ = ("n", "arcs", "arc_set", "out_adj", "in_adj", "out_mask", "in_mask")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise VertexOutOfRangeError("vertex count must be non-negative")
        arc_set = set()
        for u, v in arcs:
            if u == v:
                raise LoopArcError(f"loop arc ({u}, {v}) not allowed")
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            arc_set.add((u, v))
        out_lists: list[list[int]] = [[] for _ in range(n)]
        in_lists: list[list[int]] = [[] for _ in range(n)]
        out_mask = [1 << v for v in range(n)]
        in_mask = list(out_mask)
        for u, v in arc_set:
            out_lists[u].append(v)
            in_lists[v].append(u)
            out_mask[u] |= 1 << v
            in_mask[v] |= 1 << u
        self.n = n
        self.arcs: tuple[Arc, ...] = tuple(sorted(arc_set))
        self.arc_set = frozenset(arc_set)
        self.out_adj = tuple(tuple(sorted(vs)) for vs in out_lists)
        self.in_adj = tuple(tuple(sorted(vs)) for vs in in_lists)
        # Closed neighborhood bitmasks; bit v of out_mask[v] is always set.
        self.out_mask = tuple(out_mask)
        self.in_mask = tuple(in_mask)

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        _check_endpoint(u, self.n)
        _check_endpoint(v, self.n)
        return u != v and (self.out_mask[u] >> v) & 1 == 1

    def out_nbhd(self, v: int) -> frozenset[int]:
        """Closed out-neighborhood: v together with its successors."""
        _check_endpoint(v, self.n)
        return frozenset(self.out_adj[v]) | {v}

    def in_nbhd(self, v: int) -> frozenset[int]:
        """Closed in-neighborhood: v together with its predecessors."""
        _check_endpoint(v, self.n)
        return frozenset(self.in_adj[v]) | {v}

    def degree(self, v: int) -> int:
        """Total degree: out-degree plus in-degree, self excluded."""
        _check_endpoint(v, self.n)
        return len(self.out_adj[v]) + len(self.in_adj[v])

    def max_degree(self) -> int:
        if self.n == 0:
            return 0
        return max(self.degree(v) for v in range(self.n))

    def is_connected(self) -> bool:
        """Weak connectivity: the underlying undirected graph is connected."""
        if self.n <= 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in self.out_adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    queue.append(w)
            for w in self.in_adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    queue.append(w)
        return count == self.n

    def underlying_undirected(self) -> "UndirectedGraph":
        return UndirectedGraph(self.n, {(min(u, v), max(u, v)) for u, v in self.arcs})

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Return the image of this graph under the permutation v -> perm[v]."""
        if len(perm) != self.n or len(set(perm)) != self.n:
            raise VertexOutOfRangeError("relabeling must be a permutation of 0..n-1")
        return Digraph(self.n, [(perm[u], perm[v]) for u, v in self.arcs])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arc_set == other.arc_set

    def __hash__(self) -> int:
        return hash((self.n, self.arc_set))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={list(self.arcs)!r})"


class UndirectedGraph:
    """Immutable loop-free undirected graph; the shadow of a digraph."""

    __slots__ = ("n", "edges", "edge_set", "adj")

    def __init__(self, n: int, edges: Iterable[Arc] = ()):
        if n < 0:
            raise VertexOutOfRangeError("vertex count must be non-negative")
        edge_set = set()
        for u, v in edges:
            if u == v:
                raise LoopArcError(f"loop edge ({u}, {v}) not allowed")
            _check_endpoint(u, n)
            _check_endpoint(v, n)
            edge_set.add((min(u, v), max(u, v)))
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edge_set:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges: tuple[Arc, ...] = tuple(sorted(edge_set))
        self.edge_set = frozenset(edge_set)
        self.adj = tuple(frozenset(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = bytearray(self.n)
        seen[0] = 1
        queue = deque([0])
        count = 1
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    count += 1
                    queue.append(w)
        return count == self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self) -> int:
        return hash((self.n, self.edge_set))

    def __repr__(self) -> str:
        return f"UndirectedGraph(n={self.n}, edges={list(self.edges)!r})"


def complete_digraph(n: int) -> Digraph:
    """K_n: every ordered pair of distinct vertices is an arc."""
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])
