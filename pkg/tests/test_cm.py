import pytest
from hypothesis import given

from conftest import complexes
from typedefect.betti import type_defect
from typedefect.cm import (
    MAX_SEARCH_FACETS,
    is_2cm,
    is_cohen_macaulay,
    is_facet_constructible,
    is_gorenstein,
    is_shellable,
)
from typedefect.complexes import (
    complete_graph,
    cycle_graph,
    graph,
    is_pure,
    join,
    make_complex,
    simplex,
    simplex_boundary,
)
from typedefect.errors import CapacityError, DomainError
from typedefect.homology import FieldSpec

C4 = cycle_graph(4)
EDGES = graph(4, [(0, 1), (2, 3)])


def test_cycle_and_disjoint_edges():
    assert is_cohen_macaulay(C4) and is_2cm(C4) and is_gorenstein(C4)
    assert is_shellable(C4) and not is_facet_constructible(C4)
    assert not is_cohen_macaulay(EDGES) and not is_shellable(EDGES)


def test_k4_refutes_the_converse():
    k4 = complete_graph(4)
    assert is_cohen_macaulay(k4) and is_2cm(k4) and type_defect(k4) == 1
    assert not is_gorenstein(k4)


def test_sphere():
    b = simplex_boundary(4)
    assert is_gorenstein(b) and is_shellable(b) and not is_facet_constructible(b)


def test_tree_of_triangles_is_facet_constructible():
    delta = make_complex(5, [(0, 1, 2), (1, 2, 3), (2, 3, 4)])
    assert is_facet_constructible(delta) and is_shellable(delta)


def test_cone_over_boundary_is_gorenstein_with_zero_defect():
    cone = join(simplex_boundary(3), simplex(1))
    assert is_gorenstein(cone) and type_defect(cone) == 0
    assert cone != simplex_boundary(4)


def test_search_bounds():
    with pytest.raises(DomainError):
        is_shellable(make_complex(3, [(0, 1), (2,)]))
    big = make_complex(8, [f for f in range(1 << 8) if f.bit_count() == 2][: MAX_SEARCH_FACETS + 1])
    with pytest.raises(CapacityError):
        is_shellable(big)
    with pytest.raises(CapacityError):
        is_facet_constructible(big)


def test_field_dependence_is_recorded():
    assert is_cohen_macaulay(C4, FieldSpec(2))


@given(complexes(max_n=5))
def test_implications(delta):
    cm = is_cohen_macaulay(delta)
    if type_defect(delta) <= 0:
        assert cm
    if is_2cm(delta):
        assert cm
    if is_pure(delta) and len(delta.facets) <= MAX_SEARCH_FACETS:
        if is_shellable(delta):
            assert cm
        if is_facet_constructible(delta):
            assert is_shellable(delta)
