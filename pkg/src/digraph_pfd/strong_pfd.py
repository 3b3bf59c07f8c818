"""Prime factorization of connected digraphs over the strong product.

Thin graphs are factored through their Cartesian skeleton: the skeleton's
Cartesian prime factors are grouped into minimal index subsets whose layers
give exact strong factors.  Arbitrary graphs first shed their maximal
complete factor, are factored at the quotient level, and the quotient factors
are then regrouped by checking that the neighborhood-class sizes split
multiplicatively (the gcd projection gives the only candidate sizes).
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Mapping, Sequence

from .cartesian_pfd import cartesian_pfd
from .digraph import Arc, Digraph, complete_digraph
from .errors import NotConnectedError, NotThinError
from .factorization import Factorization, reconstruct_strong
from .products import strong_product
from .relations import blowup, is_thin, quotient, s_partition
from .skeleton import cartesian_skeleton

Coords = Sequence[tuple[int, ...]]


def _ravel(tup: Sequence[int], sizes: Sequence[int]) -> int:
    vid = 0
    for c, s in zip(tup, sizes):
        vid = vid * s + c
    return vid


def _merge(j_tuple, c_tuple, j_idx, c_idx, k):
    full = [0] * k
    for pos, j in enumerate(j_idx):
        full[j] = j_tuple[pos]
    for pos, j in enumerate(c_idx):
        full[j] = c_tuple[pos]
    return tuple(full)


def verify_strong_grouping(
    g: Digraph, coords: Coords, J: Iterable[int]
) -> tuple[Digraph, Digraph] | None:
    """Test whether the coordinate subset J carries a strong factor of g.

    Candidate A is the induced layer through vertex 0 over the J coordinates,
    B the complement layer; the pair is returned iff g equals A boxtimes B
    arc-for-arc under the projection pair, else None.
    """
    k = len(coords[0])
    j_idx = tuple(sorted(J))
    if not j_idx or any(j < 0 or j >= k for j in j_idx):
        return None
    c_idx = tuple(j for j in range(k) if j not in j_idx)
    sizes = [max(c[j] for c in coords) + 1 for j in range(k)]
    base = coords[0]

    def pj(v: int) -> tuple[int, ...]:
        return tuple(coords[v][j] for j in j_idx)

    def pc(v: int) -> tuple[int, ...]:
        return tuple(coords[v][j] for j in c_idx)

    base_j, base_c = pj(0), pc(0)
    lay_a = {pj(v): v for v in range(g.n) if pc(v) == base_c}
    lay_b = {pc(v): v for v in range(g.n) if pj(v) == base_j}

    a_members = set(lay_a.values())
    a_closed = {t: {t} for t in lay_a}
    for t, v in lay_a.items():
        for w in g.out_adj[v]:
            if w in a_members:
                a_closed[t].add(pj(w))
    b_members = set(lay_b.values())
    b_closed = {t: {t} for t in lay_b}
    for t, v in lay_b.items():
        for w in g.out_adj[v]:
            if w in b_members:
                b_closed[t].add(pc(w))

    index = {tuple(c): v for v, c in enumerate(coords)}
    for v in range(g.n):
        expected = {
            index[_merge(ja, jb, j_idx, c_idx, k)]
            for ja in a_closed[pj(v)]
            for jb in b_closed[pc(v)]
        }
        expected.discard(v)
        if expected != set(g.out_adj[v]):
            return None

    sizes_j = [sizes[j] for j in j_idx]
    sizes_c = [sizes[j] for j in c_idx]
    arcs_a = [
        (_ravel(t, sizes_j), _ravel(s, sizes_j))
        for t, others in a_closed.items()
        for s in others
        if s != t
    ]
    arcs_b = [
        (_ravel(t, sizes_c), _ravel(s, sizes_c))
        for t, others in b_closed.items()
        for s in others
        if s != t
    ]
    return Digraph(len(lay_a), arcs_a), Digraph(len(lay_b), arcs_b)


def _group_layer(g: Digraph, coords: Coords, sizes, J) -> Digraph:
    """Induced layer through vertex 0 over the J coordinates, labeled by the
    row-major rank of the J projection."""
    j_idx = tuple(sorted(J))
    c_idx = tuple(j for j in range(len(sizes)) if j not in j_idx)
    sizes_j = [sizes[j] for j in j_idx]
    base_c = tuple(coords[0][j] for j in c_idx)
    members = {
        v: _ravel(tuple(coords[v][j] for j in j_idx), sizes_j)
        for v in range(g.n)
        if tuple(coords[v][j] for j in c_idx) == base_c
    }
    arcs: list[Arc] = [
        (members[u], members[w])
        for u in members
        for w in g.out_adj[u]
        if w in members
    ]
    n = 1
    for s in sizes_j:
        n *= s
    return Digraph(n, arcs)


def strong_pfd_thin(g: Digraph) -> Factorization:
    """Prime factors of a connected thin digraph over the strong product."""
    if not g.is_connected():
        raise NotConnectedError("strong PFD requires a connected graph")
    if not is_thin(g):
        raise NotThinError("strong_pfd_thin requires a thin graph")
    if g.n == 1:
        return Factorization((g,), ((0,),))

    sk = cartesian_skeleton(g).skeleton
    cf = cartesian_pfd(sk)
    coords = cf.coords
    sizes = [f.n for f in cf.factors]

    remaining = list(range(len(cf.factors)))
    groups: list[tuple[int, ...]] = []
    while remaining:
        found = None
        for size in range(1, len(remaining)):
            for J in itertools.combinations(remaining, size):
                if verify_strong_grouping(g, coords, J) is not None:
                    found = J
                    break
            if found:
                break
        if found is None:
            groups.append(tuple(remaining))
            remaining = []
        else:
            groups.append(found)
            remaining = [i for i in remaining if i not in found]

    factors = tuple(_group_layer(g, coords, sizes, J) for J in groups)
    fcoords = tuple(
        tuple(
            _ravel(tuple(coords[v][j] for j in J), [sizes[j] for j in J])
            for J in groups
        )
        for v in range(g.n)
    )
    result = Factorization(factors, fcoords)
    assert reconstruct_strong(result) == g, "strong reconstruction mismatch"
    return result


def gcd_multiplicity(
    table: Mapping[tuple[int, ...], int], J: Iterable[int]
) -> dict[tuple[int, ...], int]:
    """Project a class-size table onto the J coordinates by gcd."""
    j_idx = tuple(sorted(J))
    out: dict[tuple[int, ...], int] = {}
    for key in sorted(table):
        proj = tuple(key[j] for j in j_idx)
        out[proj] = math.gcd(out.get(proj, 0), table[key])
    return out


def _prime_factors(value: int) -> list[int]:
    out = []
    d = 2
    while d * d <= value:
        while value % d == 0:
            out.append(d)
            value //= d
        d += 1
    if value > 1:
        out.append(value)
    return out


def strong_pfd(g: Digraph) -> Factorization:
    """Prime factors of an arbitrary connected digraph over the strong
    product: peel off the maximal complete factor, factor the thin quotient,
    then accept exactly the index groups whose class sizes multiply back."""
    if not g.is_connected():
        raise NotConnectedError("strong PFD requires a connected graph")
    if g.n == 1:
        return Factorization((g,), ((0,),))

    part = s_partition(g, "both")
    l = math.gcd(*part.sizes)
    mult = [s // l for s in part.sizes]
    h = quotient(g).quotient
    primes = _prime_factors(l)

    group_mults: list[dict[tuple[int, ...], int]] = []
    group_sets: list[tuple[int, ...]] = []
    group_factors: list[Digraph] = []
    group_offsets: list[list[int]] = []
    coords_h: Coords = ((),) * h.n
    if h.n > 1:
        thin_f = strong_pfd_thin(h)
        coords_h = thin_f.coords
        table = {coords_h[v]: mult[v] for v in range(h.n)}
        remaining = tuple(range(len(thin_f.factors)))
        residual = table
        while remaining:
            found = None
            for size in range(1, len(remaining)):
                for J in itertools.combinations(remaining, size):
                    pos_j = tuple(remaining.index(j) for j in J)
                    pos_c = tuple(p for p in range(len(remaining)) if p not in pos_j)
                    d_j = gcd_multiplicity(residual, pos_j)
                    d_c = gcd_multiplicity(residual, pos_c)
                    if all(
                        residual[x]
                        == d_j[tuple(x[p] for p in pos_j)] * d_c[tuple(x[p] for p in pos_c)]
                        for x in residual
                    ):
                        found = (J, pos_c, d_j, d_c)
                        break
                if found:
                    break
            if found is None:
                group_sets.append(remaining)
                group_mults.append(residual)
                remaining = ()
            else:
                J, pos_c, d_j, d_c = found
                group_sets.append(J)
                group_mults.append(d_j)
                remaining = tuple(j for j in remaining if j not in J)
                residual = d_c

        for J, d_j in zip(group_sets, group_mults):
            prod_j = strong_product([thin_f.factors[j] for j in J])
            block_mult = [d_j[c] for c in prod_j.coords]
            offsets = [0] * len(block_mult)
            run = 0
            for i, m in enumerate(block_mult):
                offsets[i] = run
                run += m
            group_factors.append(blowup(prod_j.graph, block_mult))
            group_offsets.append(offsets)

    factors = tuple(group_factors) + tuple(complete_digraph(p) for p in primes)

    sizes_h = [max(c[j] for c in coords_h) + 1 for j in range(len(coords_h[0]))] if h.n > 1 else []
    rank_in_class = {}
    for members in part.classes:
        for r, v in enumerate(members):
            rank_in_class[v] = r
    fcoords = []
    for v in range(g.n):
        x = coords_h[part.class_of[v]]
        r = rank_in_class[v]
        coord = []
        for J, d_j, offsets in zip(group_sets, group_mults, group_offsets):
            proj = tuple(x[j] for j in J)
            block = _ravel(proj, [sizes_h[j] for j in J])
            m = d_j[proj]
            coord.append(offsets[block] + r % m)
            r //= m
        for p in primes:
            coord.append(r % p)
            r //= p
        fcoords.append(tuple(coord))

    result = Factorization(factors, tuple(fcoords))
    assert reconstruct_strong(result) == g, "strong reconstruction mismatch"
    return result
