"""Graphs as 1-dimensional complexes: chordality, simplicial vertices, treeish graphs.

The vertex set of a graph is its set of used vertices.  Ties are always
broken toward the lowest index so certificates are deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from typedefect.betti import _components, type_defect
from typedefect.complexes import (
    SimplicialComplex,
    VertexSet,
    adjacency,
    dimension,
    induced,
    is_connected,
    members,
    submasks,
)
from typedefect.errors import CapacityError, DomainError
from typedefect.homology import QQ, FieldSpec

MAX_TD_SWEEP_VERTICES = 16
MAX_TREEISH_TD_VERTICES = 14


def _require_graph(g: SimplicialComplex) -> list[VertexSet]:
    if dimension(g) > 1:
        raise DomainError("expected a graph (complex of dimension at most 1)")
    return adjacency(g)


def _is_clique(mask: VertexSet, nbrs: list[VertexSet]) -> bool:
    return all(mask & ~(1 << v) & ~nbrs[v] == 0 for v in members(mask))


def _simplicial_in(alive: VertexSet, nbrs: list[VertexSet]) -> int | None:
    for v in members(alive):
        if _is_clique(nbrs[v] & alive, nbrs):
            return v
    return None


def find_simplicial_vertex(g: SimplicialComplex) -> int | None:
    """Lowest-index vertex whose neighbourhood is a clique, or None."""
    nbrs = _require_graph(g)
    if not g.used_vertices:
        raise DomainError("graph has no vertices")
    return _simplicial_in(g.used_vertices, nbrs)


def perfect_elimination_order(g: SimplicialComplex) -> list[int] | None:
    """Repeatedly delete the lowest simplicial vertex; None if the process stalls."""
    nbrs = _require_graph(g)
    alive = g.used_vertices
    order = []
    while alive:
        v = _simplicial_in(alive, nbrs)
        if v is None:
            return None
        order.append(v)
        alive &= ~(1 << v)
    return order


def is_chordal(g: SimplicialComplex) -> bool:
    return perfect_elimination_order(g) is not None


def _vertex_subsets(g: SimplicialComplex, limit: int) -> list[VertexSet]:
    used = g.used_vertices
    if used.bit_count() > limit:
        raise CapacityError(f"{used.bit_count()} vertices exceeds the sweep bound {limit}")
    return list(submasks(used))


def td_witness(
    g: SimplicialComplex, field: FieldSpec = QQ, connected_only: bool = False
) -> VertexSet | None:
    """Some ``W`` with ``td(G|_W) < 0``, scanning subsets from the largest down."""
    _require_graph(g)
    for W in _vertex_subsets(g, MAX_TD_SWEEP_VERTICES):
        sub = induced(g, W)
        if connected_only and not (W and is_connected(sub)):
            continue
        if type_defect(sub, field) < 0:
            return W
    return None


def chordality_via_td(g: SimplicialComplex, field: FieldSpec = QQ, connected_only: bool = False) -> bool:
    """``td(G|_W) >= 0`` for every vertex subset ``W`` (or every connected one)."""
    return td_witness(g, field, connected_only) is None


def triangle_count(g: SimplicialComplex) -> int:
    nbrs = _require_graph(g)
    count = 0
    for u in members(g.used_vertices):
        for v in members(nbrs[u] & ~((2 << u) - 1)):
            count += (nbrs[u] & nbrs[v] & ~((2 << v) - 1)).bit_count()
    return count


def edge_count(g: SimplicialComplex) -> int:
    return sum(n.bit_count() for n in _require_graph(g)) // 2


def component_count(g: SimplicialComplex) -> int:
    return _components(g.used_vertices, _require_graph(g))


def cycle_space_dim(g: SimplicialComplex) -> int:
    """``e - n + C(G)``, the rank of the first homology of the graph."""
    return edge_count(g) - g.used_vertices.bit_count() + component_count(g)


def is_treeish_graph(g: SimplicialComplex) -> bool:
    """Connected, chordal, and as many triangles as independent cycles."""
    _require_graph(g)
    if not g.used_vertices or not is_connected(g):
        return False
    return is_chordal(g) and triangle_count(g) == cycle_space_dim(g)


def treeish_by_construction(g: SimplicialComplex) -> bool:
    """Undo the building rules: strip a leaf, or a degree-2 vertex whose
    neighbours are adjacent, until one vertex is left.
    """
    nbrs = _require_graph(g)

    @lru_cache(maxsize=None)
    def reducible(alive: VertexSet) -> bool:
        if alive.bit_count() == 1:
            return True
        for v in members(alive):
            around = nbrs[v] & alive
            k = around.bit_count()
            if k == 1 or (k == 2 and _is_clique(around, nbrs)):
                if reducible(alive & ~(1 << v)):
                    return True
        return False

    used = g.used_vertices
    return bool(used) and reducible(used)


def treeish_by_td(g: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Connected, and ``td(G|_W) = 0`` for every ``W`` inducing a connected subgraph."""
    _require_graph(g)
    if not g.used_vertices or not is_connected(g):
        return False
    for W in _vertex_subsets(g, MAX_TREEISH_TD_VERTICES):
        if not W:
            continue
        sub = induced(g, W)
        if is_connected(sub) and type_defect(sub, field) != 0:
            return False
    return True
