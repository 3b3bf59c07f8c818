import math

import pytest
from hypothesis import given

from digraph_pfd import Digraph, complete_digraph
from digraph_pfd.errors import LoopArcError, VertexOutOfRangeError

from helpers import c3, k2, p2
from strategies import digraphs


def test_build_single_arc():
    g = p2()
    assert g.n == 2
    assert g.arcs == ((0, 1),)
    assert g.out_adj == ((1,), ())
    assert g.in_adj == ((), (0,))


def test_build_rejects_loops():
    with pytest.raises(LoopArcError):
        Digraph(2, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRangeError):
        Digraph(2, [(0, 2)])


def test_build_complete_k2():
    g = Digraph(2, [(0, 1), (1, 0)])
    assert g == k2()


def test_build_deduplicates():
    g = Digraph(2, [(0, 1), (0, 1)])
    assert g.arc_count == 1


def test_out_nbhd_is_closed():
    g = p2()
    assert g.out_nbhd(0) == {0, 1}
    assert g.out_nbhd(1) == {1}


def test_c3_neighborhoods():
    g = c3()
    assert g.out_nbhd(1) == {1, 2}
    assert g.in_nbhd(1) == {0, 1}


def test_k2_neighborhoods():
    g = k2()
    assert g.out_nbhd(0) == g.in_nbhd(0) == {0, 1}


def test_nbhd_rejects_bad_vertex():
    with pytest.raises(VertexOutOfRangeError):
        p2().out_nbhd(2)


@given(digraphs())
def test_neighborhoods_contain_vertex(g):
    for v in range(g.n):
        assert v in g.out_nbhd(v)
        assert v in g.in_nbhd(v)


def test_is_connected():
    assert p2().is_connected()
    assert not Digraph(2, []).is_connected()
    assert c3().is_connected()


def test_underlying_undirected():
    assert p2().underlying_undirected().edges == ((0, 1),)
    assert k2().underlying_undirected().edges == ((0, 1),)
    assert c3().underlying_undirected().edges == ((0, 1), (0, 2), (1, 2))


@given(digraphs())
def test_shadow_edge_count_bounds(g):
    m = g.underlying_undirected().edge_count
    assert m <= g.arc_count
    assert m >= math.ceil(g.arc_count / 2)


def test_max_degree():
    assert p2().max_degree() == 1
    assert k2().max_degree() == 2
    assert c3().max_degree() == 2


def test_complete_digraph():
    g = complete_digraph(4)
    assert g.arc_count == 12
    assert all(g.has_arc(u, v) for u in range(4) for v in range(4) if u != v)


def test_relabel_swaps():
    g = p2().relabel([1, 0])
    assert g.arcs == ((1, 0),)


def test_relabel_requires_permutation():
    with pytest.raises(VertexOutOfRangeError):
        p2().relabel([0, 0])


@given(digraphs())
def test_masks_match_neighborhoods(g):
    for v in range(g.n):
        members = {w for w in range(g.n) if (g.out_mask[v] >> w) & 1}
        assert members == g.out_nbhd(v)
        members = {w for w in range(g.n) if (g.in_mask[v] >> w) & 1}
        assert members == g.in_nbhd(v)


def test_value_equality_and_hash():
    assert Digraph(2, [(0, 1)]) == p2()
    assert hash(Digraph(2, [(0, 1)])) == hash(p2())
    assert Digraph(2, [(1, 0)]) != p2()
