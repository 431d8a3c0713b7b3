from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import complexes
from typedefect.complexes import dimension, join, make_complex, simplex, simplex_boundary
from typedefect.errors import DomainError
from typedefect.homology import GF_DEFAULT, QQ, FieldSpec, boundary_matrix, dense_rank, reduced_homology, sparse_rank
from typedefect.oracle import enumerate_complexes

FIELDS = [QQ, GF_DEFAULT, FieldSpec(2), FieldSpec(1000003)]


def test_field_parsing():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("GF2147483647") == GF_DEFAULT
    assert str(GF_DEFAULT) == "GF(2147483647)" and GF_DEFAULT.name == "gf2147483647"
    for bad in ("gf9", "r", "gf", "gf1"):
        with pytest.raises(DomainError):
            FieldSpec.parse(bad)


def test_known_homology():
    assert reduced_homology(make_complex(2, [0])).dims == (1,)
    assert reduced_homology(simplex_boundary(4))[2] == 1
    assert reduced_homology(simplex(5)).dims == (0,) * 6
    two_edges = make_complex(4, [(0, 1), (2, 3)])
    assert reduced_homology(two_edges)[0] == 1
    with pytest.raises(DomainError):
        reduced_homology(make_complex(2, []))


def test_rank_helpers():
    assert dense_rank([[1, 2], [2, 4]]) == 1
    assert dense_rank([[1, 1], [1, -1]], FieldSpec(2)) == 1
    assert sparse_rank([{0: 1, 1: 1}, {0: 1, 1: -1}], QQ) == 2


@given(complexes(), st.sampled_from(FIELDS))
def test_boundary_squares_to_zero(delta, field):
    p = field.p
    for i in range(1, dimension(delta) + 1):
        upper = boundary_matrix(delta, i, field).entries
        lower = boundary_matrix(delta, i - 1, field).entries
        for r, c in product(range(len(lower)), range(len(upper[0]) if upper else 0)):
            v = sum(lower[r][k] * upper[k][c] for k in range(len(upper)))
            assert (v % p if p else v) == 0


def test_fields_agree_on_small_corpus():
    primes = (GF_DEFAULT, FieldSpec(1000003))
    for n in range(1, 5):
        for delta in enumerate_complexes(n):
            ref = reduced_homology(delta, QQ)
            assert all(reduced_homology(delta, f) == ref for f in primes)


def test_sphere_over_gf2():
    sphere = simplex_boundary(5)
    assert reduced_homology(sphere, FieldSpec(2)) == reduced_homology(sphere, QQ)


@given(complexes(max_n=4), complexes(max_n=3))
def test_join_homology(a, b):
    ha, hb = reduced_homology(a), reduced_homology(b)
    hj = reduced_homology(join(a, b))
    for k in range(-1, dimension(join(a, b)) + 1):
        expected = sum(ha[x] * hb[k - 1 - x] for x in range(-1, k + 1))
        assert hj[k] == expected
