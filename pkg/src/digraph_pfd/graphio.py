"""Edge-list text format and DOT export.

The format is a header line "n m" followed by m lines "u v", one arc per
line; lines starting with "#" are comments.  Serialization sorts arcs
lexicographically so output bytes are stable and parse/serialize round-trip
exactly on normalized text.
"""

from __future__ import annotations

from typing import Iterable

from .digraph import Arc, Digraph
from .errors import ArityMismatchError, LoopArcError, ParseError, VertexOutOfRangeError
from .products import CoordGraph, classify_edge

_DOT_PALETTE = (
    "black",
    "blue",
    "red",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cadetblue",
)


def parse_edge_list(text: str) -> Digraph:
    """Parse the edge-list format; raises with the offending line number."""
    header: tuple[int, int] | None = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", line=lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("header counts must be non-negative", line=lineno)
            header = (a, b)
            continue
        n = header[0]
        if a == b:
            raise LoopArcError(f"line {lineno}: loop arc ({a}, {b}) not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRangeError(
                f"line {lineno}: arc ({a}, {b}) outside 0..{n - 1}"
            )
        arcs.append((a, b))
    if header is None:
        raise ParseError("missing header line")
    if len(arcs) != header[1]:
        raise ArityMismatchError(
            f"header declares {header[1]} arcs but body has {len(arcs)}"
        )
    return Digraph(header[0], arcs)


def serialize_edge_list(g: Digraph) -> str:
    lines = [f"{g.n} {g.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in g.arcs)
    return "\n".join(lines) + "\n"


def export_dot(
    g: Digraph | CoordGraph,
    *,
    dispensable: Iterable[Arc] = (),
    name: str = "G",
) -> str:
    """Deterministic DOT output.

    For a coordinatized product, arcs are colored by the coordinate they move
    along, with non-Cartesian arcs gray; arcs listed in `dispensable` are
    drawn dashed.
    """
    coord_graph = g if isinstance(g, CoordGraph) else None
    graph = coord_graph.graph if coord_graph else g
    dashed = set(dispensable)
    lines = [f"digraph {name} {{"]
    for v in range(graph.n):
        if coord_graph:
            label = ",".join(str(c) for c in coord_graph.coords[v])
            lines.append(f'  {v} [label="{v}:({label})"];')
        else:
            lines.append(f"  {v};")
    for arc in graph.arcs:
        attrs = []
        if coord_graph:
            j = classify_edge(coord_graph, arc)
            color = "gray" if j is None else _DOT_PALETTE[j % len(_DOT_PALETTE)]
            attrs.append(f"color={color}")
        if arc in dashed:
            attrs.append("style=dashed")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {arc[0]} -> {arc[1]}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
