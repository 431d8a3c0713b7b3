from math import comb

import pytest
from hypothesis import given, strategies as st

from typedefect.betti import type_defect
from typedefect.complexes import (
    clique_complex,
    cycle_graph,
    graph,
    is_full_simplex,
    join,
    make_complex,
    simplex,
    simplex_boundary,
)
from typedefect.errors import DomainError, PreconditionError, RangeError
from typedefect.graphs import is_chordal
from typedefect.linres import (
    betti_lower_bound,
    classify_equality,
    eagon_reiner_check,
    eagon_reiner_report,
    generating_degree,
    h_vector_prediction,
    has_linear_resolution,
    hilbert_identity,
    linear_resolution_classes,
    linear_resolution_complexes,
    seven_condition_check,
)
from typedefect.oracle import all_graphs, enumerate_complexes


def test_bound_values():
    assert [betti_lower_bound(2, 3, j) for j in (1, 2, 3)] == [6, 8, 3]
    for c in range(1, 7):
        for j in range(1, c + 1):
            assert betti_lower_bound(2, c, j) == j * comb(c + 1, j + 1)
    for bad in ((1, 3, 1), (2, 0, 1), (2, 3, 0), (2, 3, 4)):
        with pytest.raises(RangeError):
            betti_lower_bound(*bad)


def test_generating_degree():
    assert generating_degree(cycle_graph(4)) == 2
    assert generating_degree(make_complex(4, [(0, 1), (1, 2), (0, 2), (3,)])) is None
    assert generating_degree(simplex_boundary(4)) == 4
    with pytest.raises(DomainError):
        generating_degree(simplex(3))


def test_tree_of_triangles_attains_the_bound():
    delta = make_complex(5, [(0, 1, 2), (1, 2, 3), (2, 3, 4)])
    rep = classify_equality(delta)
    assert rep.s == 2 and rep.c == 2
    assert rep.equality_all and rep.cohen_macaulay and rep.facet_count_condition and rep.nonface_count_condition
    assert type_defect(delta) == 0


def test_strict_inequality_case():
    edges = graph(4, [(0, 1), (2, 3)])
    rep = classify_equality(edges)
    assert not any(rep.conditions) and rep.consistent
    assert [r.actual for r in rep.bounds] == [4, 4]


def test_preconditions():
    with pytest.raises(PreconditionError) as err:
        classify_equality(cycle_graph(4))
    assert err.value.hypothesis == "linear-resolution"
    with pytest.raises(PreconditionError) as err:
        classify_equality(make_complex(3, [(0, 1)]))
    assert err.value.hypothesis == "generating-degree"


def test_h_vector_predictions():
    cm = h_vector_prediction(graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert cm.h_s == 0 and cm.holds
    edges = h_vector_prediction(graph(4, [(0, 1), (2, 3)]))
    assert edges.h_s < 0 and edges.holds


def test_eagon_reiner_small_corpus():
    for n in range(1, 5):
        for delta in enumerate_complexes(n):
            if not is_full_simplex(delta):
                rep = eagon_reiner_report(delta)
                assert rep.holds
                assert rep.linear == has_linear_resolution(delta)
    with pytest.raises(DomainError):
        eagon_reiner_check(simplex(3))


def test_labeled_and_class_enumerations_agree():
    for n in range(1, 5):
        labeled = list(linear_resolution_complexes(n))
        classes = list(linear_resolution_classes(n))
        assert sum(orbit for _, orbit in classes) == len(labeled)
        assert all(delta in set(labeled) for delta, _ in classes)
    with pytest.raises(RangeError):
        list(linear_resolution_complexes(6))


@pytest.mark.parametrize("n", range(2, 6))
def test_linear_corpus(n):
    for delta in linear_resolution_complexes(n):
        rep = classify_equality(delta)
        assert rep.consistent and type_defect(delta) >= 0
        assert h_vector_prediction(delta).holds and hilbert_identity(delta)
        if rep.s == 2:
            assert is_chordal(make_complex(n, [f for f in delta.faces if f.bit_count() <= 2]))


def test_codimension_one_spheres_are_not_trees():
    # td vanishes here although the complex is not a tree of simplices
    cone = join(simplex_boundary(3), simplex(2))
    rep = classify_equality(cone)
    assert rep.c == 1 and type_defect(cone) == 0 and rep.cohen_macaulay


def test_seven_conditions_on_chordal_graphs():
    for n in range(1, 6):
        for g in all_graphs(n):
            if is_chordal(g):
                assert seven_condition_check(g).equivalent
    with pytest.raises(PreconditionError):
        seven_condition_check(cycle_graph(4))


def test_seven_condition_examples():
    path = seven_condition_check(graph(4, [(0, 1), (1, 2), (2, 3)]))
    assert all(path.vector) and (path.n, path.d) == (4, 2)
    k4 = seven_condition_check(graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)]))
    assert all(k4.vector)
    mixed = seven_condition_check(graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))
    assert not any(mixed.vector)


@given(st.integers(2, 6), st.integers(1, 6))
def test_bounds_are_positive(s, c):
    assert all(betti_lower_bound(s, c, j) > 0 for j in range(1, c + 1))


def test_clique_complex_of_chordal_graph_is_linear():
    g = graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert has_linear_resolution(clique_complex(g))
