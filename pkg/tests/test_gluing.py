import pytest
from hypothesis import given, strategies as st

from typedefect.betti import modified_type, type_defect
from typedefect.cm import is_cohen_macaulay
from typedefect.complexes import (
    dimension,
    graph,
    induced,
    is_strongly_facet_connected,
    make_complex,
    simplex,
    simplex_boundary,
    vset,
)
from typedefect.errors import DomainError, PreconditionError
from typedefect.gluing import (
    TreeishMove,
    build_treeish_complex,
    glue,
    glue_map,
    is_treeish_complex,
    random_treeish_moves,
    treeish_steps,
    verify_glue_type,
)
from typedefect.sweeps import HEREDITY_EXAMPLE, HEREDITY_WINDOW, cm_pool, extra_vertex_example


def test_glue_two_triangles_along_an_edge():
    glued = glue(simplex(3), vset((1, 2)), simplex(3), vset((0, 1)))
    assert glued == make_complex(4, [(0, 1, 2), (1, 2, 3)])
    assert glue_map(3, vset((1, 2)), 3, vset((0, 1))) == [1, 2, 3]


def test_glue_errors():
    with pytest.raises(DomainError):
        glue(simplex(3), vset((0, 1)), simplex(3), vset((0,)))
    with pytest.raises(DomainError):
        glue(simplex_boundary(3), vset((0, 1, 2)), simplex(3), vset((0, 1, 2)))


def test_identity_for_boundaries():
    rep = verify_glue_type(simplex_boundary(4), vset((0, 1)), simplex_boundary(4), vset((2, 3)))
    assert rep.type_holds and rep.td_holds and rep.ell == 2 and rep.d == 3
    assert rep.additive


def test_preconditions():
    edges = graph(4, [(0, 1), (2, 3)])
    with pytest.raises(PreconditionError) as err:
        verify_glue_type(edges, 1, graph(2, [(0, 1)]), 1)
    assert err.value.hypothesis == "cohen-macaulay"
    with pytest.raises(PreconditionError) as err:
        verify_glue_type(simplex(3), 1, simplex(2), 1)
    assert err.value.hypothesis == "equal-dimension"
    with pytest.raises(PreconditionError) as err:
        verify_glue_type(make_complex(4, [(0, 1, 2)]), 1, simplex(3), 1)
    assert err.value.hypothesis == "no-unused-vertices"
    raw = verify_glue_type(edges, 1, graph(2, [(0, 1)]), 1, require_cm=False)
    assert not raw.type_holds


def test_extra_vertex_changes_last_tor():
    obs = extra_vertex_example()
    assert obs == {"type_4": 4, "tor3_5": 5, "tor3_5_koszul": 5, "codim_5": 3}


@given(st.sampled_from([2, 3, 4]), st.integers(0, 10**6), st.data())
def test_glue_identity_on_pools(d, seed, data):
    pool = cm_pool(d, 6, seed % 5, size=12)
    a = data.draw(st.sampled_from(pool))
    b = data.draw(st.sampled_from(pool))
    ell = data.draw(st.integers(1, d))
    E1 = data.draw(st.sampled_from(a.faces_by_size[ell]))
    E2 = data.draw(st.sampled_from(b.faces_by_size[ell]))
    rep = verify_glue_type(a, E1, b, E2)
    assert rep.type_holds and rep.td_holds
    if ell >= d - 1:
        assert rep.additive


def test_pool_contents():
    pool = cm_pool(3, 6, 0, size=20)
    assert len(pool) == 20 and len(set(pool)) == 20
    assert all(is_cohen_macaulay(p) and dimension(p) == 2 and p.n <= 6 for p in pool)


def test_move_validation():
    with pytest.raises(DomainError, match="move 0"):
        build_treeish_complex(3, [TreeishMove("simplex", (0,))])
    with pytest.raises(DomainError, match="move 1"):
        build_treeish_complex(3, [TreeishMove("simplex"), TreeishMove("simplex", (0,))])
    with pytest.raises(DomainError, match="move 1"):
        build_treeish_complex(3, [TreeishMove("simplex"), TreeishMove("cone", (0, 1))])
    with pytest.raises(DomainError):
        build_treeish_complex(3, [])


def test_construction_steps():
    moves = [TreeishMove("boundary"), TreeishMove("simplex", (0, 1)), TreeishMove("boundary", (1, 2, 3))]
    steps = list(treeish_steps(3, moves))
    assert [s.n for s in steps] == [4, 5, 6]
    assert all(type_defect(s) == 0 for s in steps)
    assert is_treeish_complex(steps[-1])


@given(st.sampled_from([2, 3, 4]), st.integers(0, 10**6))
def test_random_builds(d, seed):
    moves = random_treeish_moves(d, 5, seed, max_vertices=9)
    delta = build_treeish_complex(d, moves)
    assert delta.n <= 9 and type_defect(delta) == 0
    assert is_treeish_complex(delta, 64)


def test_recognizer_rejections():
    assert not is_treeish_complex(make_complex(5, [(0, 1, 2), (2, 3, 4)]))
    assert not is_treeish_complex(make_complex(4, [(0, 1, 2)]))
    with pytest.raises(DomainError):
        is_treeish_complex(make_complex(3, [(0, 1), (2,)]))


def test_heredity_counterexample():
    assert is_treeish_complex(HEREDITY_EXAMPLE) and type_defect(HEREDITY_EXAMPLE) == 0
    sub = induced(HEREDITY_EXAMPLE, HEREDITY_WINDOW)
    assert not is_strongly_facet_connected(sub)
    assert type_defect(sub) == 2 and modified_type(sub) == 4
