"""Neighborhood equivalence classes, thinness, quotients and blow-ups.

Two vertices are out-equivalent when their closed out-neighborhoods coincide
(in-equivalent analogously); the full relation requires both.  Classes are
always ordered by their smallest member so quotient labelings, and therefore
all downstream output, are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .digraph import Digraph
from .errors import NonThinQuotientError, ZeroMultiplicityError

SKind = Literal["out", "in", "both"]


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty classes covering 0..n-1, ordered by smallest member."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class QuotientWithMultiplicity:
    """Quotient digraph on class indices plus the class sizes."""

    quotient: Digraph
    mult: tuple[int, ...]


def s_partition(g: Digraph, kind: SKind = "both") -> Partition:
    """Group vertices by equality of closed neighborhoods of the given kind."""
    if kind == "out":
        keys = g.out_mask
    elif kind == "in":
        keys = g.in_mask
    elif kind == "both":
        keys = tuple(zip(g.out_mask, g.in_mask))
    else:
        raise ValueError(f"unknown neighborhood kind {kind!r}")
    groups: dict[object, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(keys[v], []).append(v)
    # Ascending first-member order falls out of the id-ordered insertion.
    classes = tuple(tuple(members) for members in groups.values())
    class_of = [0] * g.n
    for idx, members in enumerate(classes):
        for v in members:
            class_of[v] = idx
    return Partition(classes, tuple(class_of))


def is_thin(g: Digraph) -> bool:
    """True iff all vertices are distinguished by their closed neighborhoods."""
    return len(set(zip(g.out_mask, g.in_mask))) == g.n


def quotient(g: Digraph) -> QuotientWithMultiplicity:
    """Collapse every neighborhood class to a single vertex.

    Between distinct classes adjacency is all-or-nothing per direction, so an
    arc between class representatives stands for all member arcs; the result
    is always thin.
    """
    part = s_partition(g, "both")
    arcs = set()
    for u, v in g.arcs:
        cu, cv = part.class_of[u], part.class_of[v]
        if cu != cv:
            arcs.add((cu, cv))
    return QuotientWithMultiplicity(Digraph(len(part.classes), arcs), part.sizes)


def blowup(q: Digraph, mult: Sequence[int]) -> Digraph:
    """Replace vertex a of a thin graph by mult[a] pairwise bidirectionally
    adjacent copies which inherit every inter-class arc in each direction."""
    if len(mult) != q.n:
        raise ZeroMultiplicityError(f"expected {q.n} multiplicities, got {len(mult)}")
    if any(m < 1 for m in mult):
        raise ZeroMultiplicityError("multiplicities must all be >= 1")
    if not is_thin(q):
        raise NonThinQuotientError("blow-up base graph must be thin")
    offsets = [0] * q.n
    total = 0
    for a in range(q.n):
        offsets[a] = total
        total += mult[a]
    arcs = []
    for a in range(q.n):
        block = range(offsets[a], offsets[a] + mult[a])
        arcs.extend((i, j) for i in block for j in block if i != j)
    for a, b in q.arcs:
        arcs.extend(
            (i, j)
            for i in range(offsets[a], offsets[a] + mult[a])
            for j in range(offsets[b], offsets[b] + mult[b])
        )
    return Digraph(total, arcs)


def extract_complete_factor(g: Digraph) -> tuple[Digraph, int]:
    """Split g as gPrime boxtimes K_l with l maximal.

    The class sizes of a product with K_l are all divisible by l, and
    conversely the gcd of the class sizes can always be split off because
    adjacency between classes is all-or-nothing; hence l is exactly that gcd
    and gPrime is the blow-up of the quotient with the divided sizes.
    """
    q = quotient(g)
    l = math.gcd(*q.mult)
    return blowup(q.quotient, [m // l for m in q.mult]), l
