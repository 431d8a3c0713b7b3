"""Ideals with linear resolution: lower bounds on Betti numbers and when they are sharp.

Everything here is exact integer arithmetic.  Each condition of the
equality classification is computed on its own, never inferred from another,
since their agreement is the thing being checked.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb

from typedefect.betti import BettiTable, betti_table
from typedefect.cm import is_cohen_macaulay, is_facet_constructible, is_shellable
from typedefect.complexes import (
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    codimension,
    compress,
    dimension,
    h_vector,
    is_full_simplex,
    is_pure,
    make_complex,
    members,
    minimal_nonfaces,
    vset,
)
from typedefect.errors import DomainError, PreconditionError, RangeError
from typedefect.graphs import edge_count, is_chordal
from typedefect.homology import QQ, FieldSpec

MAX_LINEAR_ENUMERATION_VERTICES = 6
MAX_LABELED_LINEAR_VERTICES = 5


def generating_degree(delta: SimplicialComplex) -> int | None:
    """Common size of the minimal nonfaces, or None when sizes differ."""
    gens = minimal_nonfaces(delta)
    if not gens:
        raise DomainError("the full simplex has zero Stanley-Reisner ideal")
    sizes = {g.bit_count() for g in gens}
    return sizes.pop() if len(sizes) == 1 else None


def _linear_shape(table: BettiTable, s: int) -> bool:
    return all(j == i + s - 1 for (i, j), v in table.entries.items() if i >= 1 and v)


def has_linear_resolution(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """``b_{i,j} != 0`` with ``i >= 1`` forces ``j = i + s - 1``."""
    s = generating_degree(delta)
    return s is not None and _linear_shape(betti_table(delta, field), s)


def _h(h: tuple[int, ...], i: int) -> int:
    return h[i] if 0 <= i < len(h) else 0


@dataclass(frozen=True)
class EagonReinerReport:
    linear: bool
    dual_cohen_macaulay: bool
    # b_j against the coefficient formula, j = 1..n; None unless linear
    coefficients: tuple[tuple[int, int], ...] | None

    @property
    def agree(self) -> bool:
        return self.linear == self.dual_cohen_macaulay

    @property
    def coefficients_match(self) -> bool:
        return self.coefficients is None or all(a == b for a, b in self.coefficients)

    @property
    def holds(self) -> bool:
        return self.agree and self.coefficients_match


def eagon_reiner_report(delta: SimplicialComplex, field: FieldSpec = QQ) -> EagonReinerReport:
    """Compare linearity of ``I_Δ`` with Cohen-Macaulayness of the Alexander dual."""
    if delta.is_void or is_full_simplex(delta):
        raise DomainError("needs a complex other than the void complex and the full simplex")
    table = betti_table(delta, field)
    s = generating_degree(delta)
    linear = s is not None and _linear_shape(table, s)
    dual = alexander_dual(delta)
    dual_cm = is_cohen_macaulay(dual, field)
    coefficients = None
    if linear:
        h = h_vector(dual)
        coefficients = tuple(
            (table.total(j), sum(comb(i, j - 1) * h[i] for i in range(j - 1, len(h))))
            for j in range(1, delta.n + 1)
        )
    return EagonReinerReport(linear, dual_cm, coefficients)


def eagon_reiner_check(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    return eagon_reiner_report(delta, field).holds


def _bound(s: int, c: int, j: int) -> int:
    return comb(s + j - 2, j - 1) * sum(comb(s + i - 1, s + j - 2) for i in range(j - 1, c))


def betti_lower_bound(s: int, c: int, j: int) -> int:
    """``C(s+j-2, j-1) Σ_{i=j-1}^{c-1} C(s+i-1, s+j-2)``."""
    if s < 2 or c < 1 or not 1 <= j <= c:
        raise RangeError(f"need s >= 2, c >= 1 and 1 <= j <= c; got s={s}, c={c}, j={j}")
    return _bound(s, c, j)


@dataclass(frozen=True)
class BoundRow:
    j: int
    bound: int
    actual: int

    @property
    def equal(self) -> bool:
        return self.actual == self.bound

    @property
    def holds(self) -> bool:
        return self.actual >= self.bound


@dataclass(frozen=True)
class LinResReport:
    """Bounds for ``j = 1..c`` and the four equality conditions, each computed separately."""

    has_linear_resolution: bool
    s: int
    c: int
    bounds: tuple[BoundRow, ...]
    cohen_macaulay: bool
    facet_count: int
    facet_count_condition: bool
    nonface_count: int
    nonface_count_condition: bool

    @property
    def bounds_hold(self) -> bool:
        return all(r.holds for r in self.bounds)

    @property
    def equality_some(self) -> bool:
        return any(r.equal for r in self.bounds)

    @property
    def equality_all(self) -> bool:
        return all(r.equal for r in self.bounds)

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool]:
        return (self.equality_some, self.cohen_macaulay, self.facet_count_condition, self.nonface_count_condition)

    @property
    def consistent(self) -> bool:
        """Bounds hold, the four conditions agree, and equality at one ``j`` means equality at all."""
        return self.bounds_hold and len(set(self.conditions)) == 1 and self.equality_some == self.equality_all


def classify_equality(delta: SimplicialComplex, field: FieldSpec = QQ) -> LinResReport:
    s = generating_degree(delta)
    table = betti_table(delta, field)
    if s is None or not _linear_shape(table, s):
        raise PreconditionError("linear-resolution", "I_Δ does not have a linear resolution")
    if s < 2:
        raise PreconditionError("generating-degree", "unused vertices give generators of degree 1")
    c = table.c
    rows = tuple(BoundRow(j, betti_lower_bound(s, c, j), table.total(j)) for j in range(1, c + 1))
    n = delta.n
    facets = delta.facets
    nonfaces = minimal_nonfaces(delta)
    return LinResReport(
        has_linear_resolution=True,
        s=s,
        c=c,
        bounds=rows,
        cohen_macaulay=is_cohen_macaulay(delta, field),
        facet_count=len(facets),
        facet_count_condition=len(facets) == comb(s + c - 1, c) and all(f.bit_count() == n - c for f in facets),
        nonface_count=len(nonfaces),
        nonface_count_condition=len(nonfaces) == comb(s + c - 1, s),
    )


@dataclass(frozen=True)
class HPrediction:
    h: tuple[int, ...]
    s: int
    c: int
    b1: int
    cohen_macaulay: bool

    @property
    def low_terms_match(self) -> bool:
        """``h_i = C(c+i-1, i)`` for ``i < s``."""
        return all(_h(self.h, i) == comb(self.c + i - 1, i) for i in range(self.s))

    @property
    def h_s(self) -> int:
        return _h(self.h, self.s)

    @property
    def h_s_matches(self) -> bool:
        return self.h_s == comb(self.c + self.s - 1, self.s) - self.b1

    @property
    def sign_law(self) -> bool:
        """``h_s <= 0``, with equality exactly for Cohen-Macaulay complexes."""
        return self.h_s <= 0 and (self.h_s == 0) == self.cohen_macaulay

    @property
    def holds(self) -> bool:
        return self.low_terms_match and self.h_s_matches and self.sign_law


def h_vector_prediction(delta: SimplicialComplex, field: FieldSpec = QQ) -> HPrediction:
    s = generating_degree(delta)
    table = betti_table(delta, field)
    if s is None or not _linear_shape(table, s):
        raise PreconditionError("linear-resolution", "I_Δ does not have a linear resolution")
    return HPrediction(h_vector(delta), s, table.c, table.total(1), is_cohen_macaulay(delta, field))


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def hilbert_identity(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """``1 - b_1 t^s + b_2 t^{s+1} - ... = h(t) (1-t)^c`` as polynomials.

    Clearing denominators turns the Hilbert series equation into this exact
    polynomial identity.
    """
    s = generating_degree(delta)
    table = betti_table(delta, field)
    if s is None or not _linear_shape(table, s):
        raise PreconditionError("linear-resolution", "I_Δ does not have a linear resolution")
    c = table.c
    rhs = list(h_vector(delta))
    for _ in range(c):
        rhs = _poly_mul(rhs, [1, -1])
    lhs = [0] * max(len(rhs), s + delta.n)
    lhs[0] = 1
    for i in range(1, delta.n + 1):
        b = table.total(i)
        if b:
            lhs[s + i - 1] += (-1) ** i * b
    width = max(len(lhs), len(rhs))
    return lhs + [0] * (width - len(lhs)) == rhs + [0] * (width - len(rhs))


@dataclass(frozen=True)
class SevenConditions:
    """Conditions (1)-(5) and (7) for the clique complex of a chordal graph."""

    n: int
    d: int
    facets_condition: bool
    edges_condition: bool
    cohen_macaulay: bool
    facet_constructible: bool
    h2_nonnegative: bool
    shellable: bool

    @property
    def vector(self) -> tuple[bool, ...]:
        return (
            self.facets_condition,
            self.edges_condition,
            self.cohen_macaulay,
            self.facet_constructible,
            self.h2_nonnegative,
            self.shellable,
        )

    @property
    def equivalent(self) -> bool:
        return len(set(self.vector)) == 1


def seven_condition_check(g: SimplicialComplex, field: FieldSpec = QQ) -> SevenConditions:
    """Evaluate each condition independently; non-pure complexes are neither
    facet constructible nor shellable.
    """
    if not is_chordal(g):
        raise PreconditionError("chordal", "the graph is not chordal")
    if g.used_vertices != g.ground:
        raise PreconditionError("no-unused-vertices", "every ground vertex must be a graph vertex")
    delta = clique_complex(g)
    n = delta.n
    d = dimension(delta) + 1
    pure = is_pure(delta)
    return SevenConditions(
        n=n,
        d=d,
        facets_condition=pure and len(delta.facets) == n - d + 1,
        edges_condition=2 * edge_count(g) == (d - 1) * (2 * n - d),
        cohen_macaulay=is_cohen_macaulay(delta, field),
        facet_constructible=pure and is_facet_constructible(delta),
        h2_nonnegative=_h(h_vector(delta), 2) >= 0,
        shellable=pure and is_shellable(delta),
    )


def _complex_from_generators(n: int, gens: frozenset[int]) -> SimplicialComplex:
    facets = [W for W in range(1 << n) if not any(g & ~W == 0 for g in gens)]
    return make_complex(n, facets)


@lru_cache(maxsize=None)
def _linear_generator_sets(n: int, s: int, field: FieldSpec) -> frozenset[frozenset[int]]:
    """Labeled nonempty sets of ``s``-subsets of ``0..n-1`` whose ideal has a linear resolution.

    Restricting to the vertices outside one vertex keeps the resolution linear
    (or kills the ideal), so candidates grow from the ``n - 1`` vertex answer:
    new generators must contain the top vertex, and every restriction must
    already be known.
    """
    if n < s:
        return frozenset()
    top = 1 << (n - 1)
    smaller = _linear_generator_sets(n - 1, s, field)
    through_top = [top | vset(combo) for combo in combinations(range(n - 1), s - 1)]
    known = smaller | {frozenset()}
    out = set()
    for old in known:
        for mask in range(1 << len(through_top)):
            new = frozenset(through_top[k] for k in range(len(through_top)) if mask >> k & 1)
            gens = old | new
            if not gens:
                continue
            ok = True
            for u in range(n - 1):
                rest = ((1 << n) - 1) & ~(1 << u)
                restricted = frozenset(compress(g, rest) for g in gens if not g >> u & 1)
                if restricted not in known:
                    ok = False
                    break
            if ok and _linear_shape(betti_table(_complex_from_generators(n, gens), field), s):
                out.add(gens)
    return frozenset(out)


@lru_cache(maxsize=None)
def _relabelings(n: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of the vertices, the induced map on subsets."""
    tables = []
    for perm in permutations(range(n)):
        tables.append(tuple(vset(perm[v] for v in members(m)) for m in range(1 << n)))
    return tuple(tables)


def _images(n: int, gens: frozenset[int]) -> set[int]:
    return {sum(1 << t[g] for g in gens) for t in _relabelings(n)}


def _decode(code: int) -> frozenset[int]:
    return frozenset(g for g in range(code.bit_length()) if code >> g & 1)


@lru_cache(maxsize=None)
def _linear_classes(n: int, s: int, field: FieldSpec) -> tuple[tuple[frozenset[int], int], ...]:
    """One representative per relabeling class, with the size of its orbit.

    Any labeled example restricts on ``0..n-2`` to something isomorphic to a
    smaller representative, and the isomorphism extends by fixing the top
    vertex, so extending representatives by generators through the top
    vertex reaches every class.
    """
    if n < s:
        return ()
    top = 1 << (n - 1)
    through_top = [top | vset(combo) for combo in combinations(range(n - 1), s - 1)]
    seen: set[int] = set()
    out = []
    for old in [frozenset(), *(rep for rep, _ in _linear_classes(n - 1, s, field))]:
        for mask in range(1 << len(through_top)):
            gens = old | frozenset(through_top[k] for k in range(len(through_top)) if mask >> k & 1)
            if not gens:
                continue
            images = _images(n, gens)
            code = min(images)
            if code in seen:
                continue
            seen.add(code)
            rep = _decode(code)
            if _linear_shape(betti_table(_complex_from_generators(n, rep), field), s):
                out.append((rep, len(images)))
    out.sort(key=lambda item: sorted(item[0]))
    return tuple(out)


def linear_resolution_complexes(n: int, field: FieldSpec = QQ) -> Iterator[SimplicialComplex]:
    """Every complex on exactly ``n`` labeled vertices, all of them used,
    whose ideal is nonzero with a linear resolution.
    """
    if not 1 <= n <= MAX_LABELED_LINEAR_VERTICES:
        raise RangeError(f"labeled enumeration supports 1..{MAX_LABELED_LINEAR_VERTICES} vertices, got {n}")
    for s in range(2, n + 1):
        for gens in sorted(_linear_generator_sets(n, s, field), key=sorted):
            yield _complex_from_generators(n, gens)


def linear_resolution_classes(n: int, field: FieldSpec = QQ) -> Iterator[tuple[SimplicialComplex, int]]:
    """Representatives of the relabeling classes counted by
    :func:`linear_resolution_complexes`, each with its number of labeled copies.
    """
    if not 1 <= n <= MAX_LINEAR_ENUMERATION_VERTICES:
        raise RangeError(f"enumeration supports 1..{MAX_LINEAR_ENUMERATION_VERTICES} vertices, got {n}")
    for s in range(2, n + 1):
        for rep, orbit in _linear_classes(n, s, field):
            yield _complex_from_generators(n, rep), orbit
