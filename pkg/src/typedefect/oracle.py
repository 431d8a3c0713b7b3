"""Independent Tor oracle and the complex generators behind the property suites.

The oracle computes ``dim Tor_i^S(S/I_Δ, k)_j`` as homology of the degree-``j``
strand of the Koszul complex ``K(x_1..x_n) ⊗ S/I_Δ``.  Basis elements are
pairs ``(T, m)``: a subset ``T`` of the variables (an exterior monomial) and a
monomial ``m`` outside ``I_Δ`` with ``|T| + deg m = j``.  The differential is

    e_T ⊗ m  ->  Σ_{t ∈ T} (-1)^{pos(t, T)} e_{T - t} ⊗ x_t m.

It preserves the multidegree ``a = m + 1_T``, so each strand splits into
blocks, one per exponent vector ``a``.  The block of ``a`` depends only on
which variables have exponent 0, 1 or at least 2, so identical blocks are
computed once and weighted by how many exponent vectors share the pattern.
Ranks use dense elimination local to this module (``Fraction`` over the
rationals) so no linear algebra is shared with the Hochster route.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from collections.abc import Iterator
from fractions import Fraction
from functools import lru_cache

from typedefect.complexes import SimplicialComplex, graph, make_complex
from typedefect.errors import DomainError, VertexRangeError
from typedefect.homology import QQ, FieldSpec

MAX_ENUMERATION_VERTICES = 5


def _dense_rank(rows: list[list[int]], field: FieldSpec) -> int:
    if not rows or not rows[0]:
        return 0
    p = field.p
    if p is None:
        mat = [[Fraction(v) for v in r] for r in rows]
    else:
        mat = [[v % p for v in r] for r in rows]
    width = len(mat[0])
    rank = 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        prow = mat[rank]
        if p is None:
            inv = 1 / prow[col]
        else:
            inv = pow(prow[col], -1, p)
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                factor = mat[r][col] * inv
                row = mat[r]
                if p is None:
                    mat[r] = [a - factor * b for a, b in zip(row, prow)]
                else:
                    mat[r] = [(a - factor * b) % p for a, b in zip(row, prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _sign(t: int, T: int) -> int:
    # (-1)^(number of elements of T below t)
    return -1 if (T & (t - 1)).bit_count() % 2 else 1


@lru_cache(maxsize=1 << 16)
def _block_homology(basis: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    """Koszul homology of one multidegree block, indexed by ``|T|``."""
    present = set(basis)
    by_size: dict[int, list[int]] = defaultdict(list)
    for T in basis:
        by_size[T.bit_count()].append(T)
    top = max(by_size) if by_size else 0
    ranks = [0] * (top + 2)
    for i in range(1, top + 1):
        src = by_size.get(i, [])
        dst = by_size.get(i - 1, [])
        if not src or not dst:
            continue
        index = {T: r for r, T in enumerate(dst)}
        rows = [[0] * len(src) for _ in dst]
        for col, T in enumerate(src):
            rest = T
            while rest:
                t = rest & -rest
                rest ^= t
                target = T ^ t
                if target in present:
                    rows[index[target]][col] = _sign(t, T)
        ranks[i] = _dense_rank(rows, field)
    return tuple(len(by_size.get(i, ())) - ranks[i] - ranks[i + 1] for i in range(top + 1))


@lru_cache(maxsize=64)
def _multidegree_patterns(n: int, max_degree: int) -> tuple[tuple[int, int, int, int], ...]:
    """``(degree, support, ones, multiplicity)`` over exponent vectors of degree <= max_degree.

    ``support`` marks nonzero exponents and ``ones`` the exponents equal to 1.
    """
    tally: Counter[tuple[int, int, int]] = Counter()

    def walk(v: int, left: int, supp: int, ones: int) -> None:
        if v == n:
            tally[(max_degree - left, supp, ones)] += 1
            return
        bit = 1 << v
        walk(v + 1, left, supp, ones)
        if left >= 1:
            walk(v + 1, left - 1, supp | bit, ones | bit)
        for e in range(2, left + 1):
            walk(v + 1, left - e, supp | bit, ones)

    walk(0, max_degree, 0, 0)
    return tuple((j, s, o, mult) for (j, s, o), mult in sorted(tally.items()))


def _ideal_generators(delta: SimplicialComplex) -> list[int]:
    """Squarefree generators of ``I_Δ``, found by testing every subset."""
    facets = delta.facets

    def is_face(s: int) -> bool:
        return any(s & ~f == 0 for f in facets)

    gens = []
    for s in range(1 << delta.n):
        if is_face(s):
            continue
        rest = s
        minimal = True
        while rest:
            bit = rest & -rest
            rest ^= bit
            if not is_face(s ^ bit):
                minimal = False
                break
        if minimal:
            gens.append(s)
    return gens


def koszul_betti_table(
    delta: SimplicialComplex, field: FieldSpec = QQ, max_degree: int | None = None
) -> dict[tuple[int, int], int]:
    """Nonzero ``dim Tor_i(S/I_Δ, k)_j`` for all ``j <= max_degree`` (default ``n``)."""
    if delta.is_void:
        raise DomainError("Tor of the void complex is undefined")
    n = delta.n
    top = n if max_degree is None else max_degree
    if top < 0:
        raise DomainError("max_degree must be nonnegative")
    gens = _ideal_generators(delta)
    # a monomial lies in I_Δ iff some generator divides it, i.e. its support contains one
    in_ideal = [any(g & ~s == 0 for g in gens) for s in range(1 << n)]
    table: Counter[tuple[int, int]] = Counter()
    for j, supp, ones, mult in _multidegree_patterns(n, top):
        basis = []
        T = supp
        while True:
            if not in_ideal[supp & ~(T & ones)]:
                basis.append(T)
            if T == 0:
                break
            T = (T - 1) & supp
        if not basis:
            continue
        for i, h in enumerate(_block_homology(tuple(sorted(basis)), field)):
            if h:
                table[(i, j)] += h * mult
    return dict(table)


def koszul_tor(delta: SimplicialComplex, field: FieldSpec, i: int, j: int) -> int:
    """``dim Tor_i^S(S/I_Δ, k)_j`` from the Koszul complex."""
    if i < 0 or j < 0:
        raise VertexRangeError("homological index and degree must be nonnegative")
    if delta.is_void:
        raise DomainError("Tor of the void complex is undefined")
    return koszul_betti_table(delta, field, j).get((i, j), 0)


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every non-void simplicial complex on the labeled ground set ``0..n-1``.

    Unused vertices are allowed, so ``{∅}`` is included.  Complexes are
    produced once each, in a fixed order.
    """
    if not 0 <= n <= MAX_ENUMERATION_VERTICES:
        raise VertexRangeError(f"enumeration supports 0..{MAX_ENUMERATION_VERTICES} vertices, got {n}")
    order = sorted(range(1 << n), key=lambda s: (-s.bit_count(), s))
    chosen: list[int] = []

    def walk(idx: int) -> Iterator[SimplicialComplex]:
        if idx == len(order):
            if chosen:
                yield SimplicialComplex._trusted(n, tuple(sorted(chosen)))
            return
        s = order[idx]
        # larger sets come first, so s can only fall inside an earlier choice
        if not any(s & ~c == 0 for c in chosen):
            chosen.append(s)
            yield from walk(idx + 1)
            chosen.pop()
        yield from walk(idx + 1)

    yield from walk(0)


def exhaustive_corpus(max_vertices: int = MAX_ENUMERATION_VERTICES) -> Iterator[SimplicialComplex]:
    for n in range(1, max_vertices + 1):
        yield from enumerate_complexes(n)


def all_graphs(n: int) -> Iterator[SimplicialComplex]:
    """Every simple graph on ``n`` labeled vertices (edge masks in increasing order)."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def random_complex(
    n: int, density: float = 0.5, seed: int = 0, max_facets: int | None = None
) -> SimplicialComplex:
    """Sample between 1 and ``max_facets`` (default ``n``) random faces, keep the maximal ones.

    Each face contains each vertex independently with probability ``density``.
    """
    if not 1 <= n <= 12:
        raise VertexRangeError(f"random_complex supports 1..12 vertices, got {n}")
    rng = random.Random(seed)
    count = rng.randint(1, max_facets or n)
    faces = []
    for _ in range(count):
        faces.append(sum(1 << v for v in range(n) if rng.random() < density))
    return make_complex(n, faces)


def random_graph(n: int, edge_probability: float = 0.5, seed: int = 0) -> SimplicialComplex:
    if not 1 <= n <= 16:
        raise VertexRangeError(f"random_graph supports 1..16 vertices, got {n}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_probability]
    return graph(n, edges)


def random_tree(n: int, seed: int = 0) -> SimplicialComplex:
    """Random labeled tree: each new vertex attaches to a uniformly chosen earlier one."""
    if not 1 <= n <= 64:
        raise VertexRangeError(f"random_tree supports 1..64 vertices, got {n}")
    rng = random.Random(seed)
    labels = list(range(n))
    rng.shuffle(labels)
    edges = [(labels[v], labels[rng.randrange(v)]) for v in range(1, n)]
    return graph(n, edges)
