"""Graded Betti numbers of ``S/I_Δ`` through Hochster's formula.

``b_{i,j}`` is the sum of ``dim H̃_{j-i-1}(Δ|_W)`` over the ``j``-subsets
``W`` of the ground set.  One homology computation per induced subcomplex is
scattered into every ``(i, j)`` cell it feeds; homology results are cached
per (re-indexed) induced complex, so repeated sweeps over related complexes
share work.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from typedefect.complexes import (
    SimplicialComplex,
    VertexSet,
    adjacency,
    alexander_dual,
    codimension,
    dimension,
    induced,
    is_full_simplex,
    link,
    members,
)
from typedefect.errors import DomainError
from typedefect.homology import QQ, FieldSpec, reduced_homology


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Finitely supported map ``(i, j) -> b_{i,j}(S/I_Δ)``; zero entries omitted."""

    n: int
    c: int
    field: FieldSpec
    entries: dict[tuple[int, int], int] = field(default_factory=dict, hash=False)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def totals(self) -> tuple[int, ...]:
        """``(b_0, ..., b_n)``."""
        return tuple(self.total(i) for i in range(self.n + 1))

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def format(self) -> str:
        """Macaulay2-style table: column ``i``, row ``j - i``, dots for zeros."""
        pd = self.projective_dimension
        reg = max(j - i for i, j in self.entries)
        header = ["", *map(str, range(pd + 1))]
        totals = ["total:", *(str(self.total(i)) for i in range(pd + 1))]
        rows = [header, totals]
        for r in range(reg + 1):
            cells = [f"{r}:"]
            for i in range(pd + 1):
                v = self[i, i + r]
                cells.append(str(v) if v else ".")
            rows.append(cells)
        widths = [max(len(row[k]) for row in rows) for k in range(pd + 2)]
        return "\n".join(
            " ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() for row in rows
        )


def _subsets_of_size_at_least(n: int, low: int) -> Iterator[VertexSet]:
    for size in range(max(low, 0), n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


@lru_cache(maxsize=1 << 16)
def betti_table(delta: SimplicialComplex, field: FieldSpec = QQ) -> BettiTable:
    """All graded Betti numbers of ``S/I_Δ`` over ``field``."""
    c = codimension(delta)
    cells: dict[tuple[int, int], int] = defaultdict(int)
    for W in range(1 << delta.n):
        j = W.bit_count()
        profile = reduced_homology(induced(delta, W), field)
        for idx, dim_h in enumerate(profile.dims):
            if dim_h:
                # idx = q + 1 for H̃_q, and i = j - q - 1
                cells[(j - idx, j)] += dim_h
    return BettiTable(delta.n, c, field, dict(cells))


def total_betti(delta: SimplicialComplex, i: int, field: FieldSpec = QQ) -> int:
    """``b_i(S/I_Δ)``, touching only subsets large enough to contribute."""
    dimension(delta)
    total = 0
    for W in _subsets_of_size_at_least(delta.n, i):
        total += reduced_homology(induced(delta, W), field)[W.bit_count() - i - 1]
    return total


def _betti_in_degree(delta: SimplicialComplex, i: int, j: int, field: FieldSpec) -> int:
    if j < 0 or j > delta.n:
        return 0
    total = 0
    for combo in combinations(range(delta.n), j):
        mask = 0
        for v in combo:
            mask |= 1 << v
        total += reduced_homology(induced(delta, mask), field)[j - i - 1]
    return total


@lru_cache(maxsize=1 << 18)
def modified_type(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """``dim Tor_c - dim (Tor_c)_c`` with ``c`` the codimension."""
    c = codimension(delta)
    return total_betti(delta, c, field) - _betti_in_degree(delta, c, c, field)


def type_defect(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """Modified type minus codimension."""
    return modified_type(delta, field) - codimension(delta)


def induced_type_defects(delta: SimplicialComplex, field: FieldSpec = QQ) -> dict[VertexSet, int]:
    """``td(Δ|_W)`` for every subset ``W`` of the ground set."""
    dimension(delta)
    return {W: type_defect(induced(delta, W), field) for W in range(1 << delta.n)}


def _components(vertices: VertexSet, nbrs: list[VertexSet]) -> int:
    count = 0
    left = vertices
    while left:
        low = left & -left
        reach = low
        frontier = low
        while frontier:
            grow = 0
            for v in members(frontier):
                grow |= nbrs[v]
            grow &= vertices & ~reach
            reach |= grow
            frontier = grow
        left &= ~reach
        count += 1
    return count


def graph_type(g: SimplicialComplex) -> int:
    """Modified type of a graph from components alone, no homology.

    For a graph with at least one edge this is
    ``e - n + C(G) + Σ_v (C(G - v) - 1)``.  An edgeless graph on ``n >= 1``
    points has codimension ``n - 1`` and type ``C(G) - 1 = n - 1``.
    """
    dim = dimension(g)
    if dim > 1:
        raise DomainError("graph_type expects a complex of dimension at most 1")
    vertices = g.used_vertices
    if vertices != g.ground:
        raise DomainError("graph_type expects every ground vertex to be a vertex of the graph")
    nbrs = adjacency(g)
    n = g.n
    comps = _components(vertices, nbrs)
    if dim < 1:
        return comps - 1 if n else 0
    e = sum(1 for f in g.facets if f.bit_count() == 2)
    removal = sum(_components(vertices & ~(1 << v), nbrs) - 1 for v in range(n))
    return e - n + comps + removal


def dual_type(delta: SimplicialComplex, field: FieldSpec = QQ) -> int:
    """Modified type from homology of links in the Alexander dual.

    Sums ``dim H̃_{c-2}(lk_{Δ^∨}(V \\ W))`` over non-faces ``W`` with
    ``|W| > c``.
    """
    if is_full_simplex(delta):
        raise DomainError("dual_type needs a complex other than the full simplex")
    c = codimension(delta)
    dual = alexander_dual(delta)
    ground = delta.ground
    total = 0
    for W in _subsets_of_size_at_least(delta.n, c + 1):
        if delta.is_face(W):
            continue
        total += reduced_homology(link(dual, ground & ~W), field)[c - 2]
    return total


@dataclass
class InvariantReport:
    """Numbers computed together for one complex over one field."""

    field: FieldSpec
    n: int
    dim: int
    codim: int
    modified_type: int
    type_defect: int
    betti: tuple[int, ...]
    is_simplex: bool
    cohen_macaulay: bool | None = None
    gorenstein: bool | None = None
    two_cm: bool | None = None
    generating_degree: int | None = None
    linear_resolution: bool | None = None


def invariant_report(delta: SimplicialComplex, field: FieldSpec = QQ) -> InvariantReport:
    table = betti_table(delta, field)
    c = table.c
    mtype = table.total(c) - table[c, c]
    return InvariantReport(
        field=field,
        n=delta.n,
        dim=dimension(delta),
        codim=c,
        modified_type=mtype,
        type_defect=mtype - c,
        betti=table.totals(),
        is_simplex=is_full_simplex(delta),
    )
