import pytest
from hypothesis import given, strategies as st

from typedefect.betti import type_defect
from typedefect.complexes import complete_graph, cycle_graph, graph, induced, make_complex, path_graph, simplex
from typedefect.errors import CapacityError, DomainError
from typedefect.graphs import (
    chordality_via_td,
    component_count,
    cycle_space_dim,
    edge_count,
    find_simplicial_vertex,
    is_chordal,
    is_treeish_graph,
    perfect_elimination_order,
    td_witness,
    treeish_by_construction,
    treeish_by_td,
    triangle_count,
)
from typedefect.oracle import all_graphs, random_graph, random_tree


def test_cycle_is_not_chordal():
    c5 = cycle_graph(5)
    assert perfect_elimination_order(c5) is None
    assert find_simplicial_vertex(c5) is None
    W = td_witness(c5)
    assert W is not None and type_defect(induced(c5, W)) < 0


def test_certificates_are_lowest_index():
    fan = graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    assert find_simplicial_vertex(fan) == 1
    assert perfect_elimination_order(fan) == [1, 0, 2, 3]


def test_counts():
    k4 = complete_graph(4)
    assert (edge_count(k4), triangle_count(k4), component_count(k4), cycle_space_dim(k4)) == (6, 4, 1, 3)


def test_treeish_examples():
    edge = complete_graph(2)
    triangle = complete_graph(3)
    assert is_treeish_graph(edge) and is_treeish_graph(triangle)
    assert is_treeish_graph(make_complex(1, [(0,)]))
    assert not is_treeish_graph(complete_graph(4))
    assert not is_treeish_graph(graph(4, [(0, 1), (2, 3)]))
    two_triangles = graph(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)])
    assert is_treeish_graph(two_triangles) and treeish_by_construction(two_triangles) and treeish_by_td(two_triangles)


def test_disconnected_forest_is_not_treeish():
    forest = graph(4, [(0, 1), (2, 3)])
    assert not treeish_by_construction(forest) and not treeish_by_td(forest)


def test_rejects_higher_dimension():
    with pytest.raises(DomainError):
        is_chordal(simplex(3))


def test_sweep_limits():
    with pytest.raises(CapacityError):
        chordality_via_td(path_graph(17))
    with pytest.raises(CapacityError):
        treeish_by_td(path_graph(15))


@pytest.mark.parametrize("n", range(1, 6))
def test_characterizations_agree(n):
    for g in all_graphs(n):
        chordal = is_chordal(g)
        assert chordal == chordality_via_td(g) == chordality_via_td(g, connected_only=True)
        treeish = is_treeish_graph(g)
        assert treeish == treeish_by_construction(g) == treeish_by_td(g)
        assert not treeish or chordal


@given(st.integers(1, 16), st.integers(0, 10**6))
def test_trees(n, seed):
    tree = random_tree(n, seed)
    assert type_defect(tree) == 0 and is_chordal(tree)
    assert is_treeish_graph(tree) and treeish_by_construction(tree)


@given(st.integers(0, 10**6))
def test_random_seven_vertex_graphs(seed):
    g = random_graph(7, 0.5, seed)
    assert is_chordal(g) == chordality_via_td(g)
