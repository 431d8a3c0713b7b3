import pytest
from hypothesis import given, strategies as st

from conftest import complexes
from typedefect.complexes import (
    SimplicialComplex,
    alexander_dual,
    codimension,
    compress,
    dimension,
    expand,
    f_from_h,
    f_vector,
    h_from_f,
    h_vector,
    induced,
    is_flag,
    is_full_simplex,
    is_pure,
    is_strongly_facet_connected,
    join,
    link,
    make_complex,
    maximal_sets,
    members,
    minimal_nonfaces,
    simplex,
    simplex_boundary,
    vset,
)
from typedefect.errors import DomainError, VertexRangeError
from typedefect.homology import GF_DEFAULT, QQ, reduced_homology


def test_absorption_into_full_simplex():
    delta = make_complex(3, [vset((0, 1)), vset((0,)), vset((0, 1, 2))])
    assert delta.facets == (0b111,)
    assert is_full_simplex(delta)


def test_antichain_is_kept():
    assert make_complex(4, [(0, 1), (2, 3)]).facets == (0b0011, 0b1100)


def test_four_facet_example():
    delta = make_complex(6, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (2, 4, 5)])
    assert len(delta.facets) == 4 and dimension(delta) == 2 and codimension(delta) == 3


def test_void_and_empty_face_are_distinct():
    void = make_complex(3, [])
    empty = make_complex(3, [0])
    assert void != empty
    assert dimension(empty) == -1
    with pytest.raises(DomainError):
        dimension(void)
    with pytest.raises(DomainError):
        f_vector(void)


def test_out_of_range_face():
    with pytest.raises(VertexRangeError):
        make_complex(3, [(0, 3)])
    with pytest.raises(VertexRangeError):
        make_complex(65, [])


def test_constructor_rejects_non_antichain():
    with pytest.raises(DomainError):
        SimplicialComplex(3, (0b001, 0b011))
    with pytest.raises(DomainError):
        SimplicialComplex(3, (0b100, 0b011))


def test_simplex_and_boundary():
    assert dimension(simplex(4)) == 3
    b = simplex_boundary(4)
    assert len(b.facets) == 4 and dimension(b) == 2
    assert minimal_nonfaces(b) == (0b1111,)


def test_link_and_join():
    c4 = make_complex(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert link(c4, vset((0,))) == make_complex(3, [(0,), (2,)])
    with pytest.raises(DomainError):
        link(c4, vset((0, 2)))
    j = join(simplex_boundary(2), simplex(1))
    assert j == make_complex(3, [(0, 2), (1, 2)])


def test_flag_and_connectivity():
    assert is_flag(make_complex(3, [(0, 1), (1, 2), (0, 2)])) is False
    assert is_flag(simplex(3))
    assert not is_strongly_facet_connected(make_complex(5, [(0, 1, 2), (2, 3, 4)]))
    assert is_strongly_facet_connected(make_complex(4, [(0, 1, 2), (1, 2, 3)]))


def test_bit_helpers():
    assert members(0b1011) == (0, 1, 3)
    assert compress(0b1010, 0b1110) == 0b101
    assert expand(0b101, 0b1110) == 0b1010
    assert maximal_sets([0b1, 0b11, 0b100]) == (0b11, 0b100)


@given(complexes())
def test_make_complex_is_idempotent(delta):
    again = make_complex(delta.n, delta.facets)
    assert again == delta
    assert all(a == b or a & ~b for a in delta.facets for b in delta.facets)


@given(complexes())
def test_alexander_dual_is_an_involution(delta):
    if is_full_simplex(delta):
        return
    assert alexander_dual(alexander_dual(delta)) == delta


@given(complexes())
def test_faces_and_minimal_nonfaces_cover_all_subsets(delta):
    mins = minimal_nonfaces(delta)
    for W in range(1 << delta.n):
        assert delta.is_face(W) != any(m & ~W == 0 for m in mins)


@given(complexes(), st.sampled_from([QQ, GF_DEFAULT]))
def test_euler_characteristic_matches_homology(delta, field):
    alternating = sum((-1) ** i * f for i, f in enumerate(f_vector(delta), start=-1))
    assert alternating == reduced_homology(delta, field).euler()


@given(complexes(), st.data())
def test_induced_is_transitive(delta, data):
    W = data.draw(st.integers(0, (1 << delta.n) - 1))
    sub = data.draw(st.integers(0, (1 << delta.n) - 1)) & W
    assert induced(induced(delta, W), compress(sub, W)) == induced(delta, sub)


@given(complexes())
def test_h_and_f_are_inverse(delta):
    f = f_vector(delta)
    assert f_from_h(h_vector(delta)) == f
    assert h_from_f(f) == h_vector(delta)


def test_purity():
    assert is_pure(simplex_boundary(3))
    assert not is_pure(make_complex(3, [(0, 1), (2,)]))
