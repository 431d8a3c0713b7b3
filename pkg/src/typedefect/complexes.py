"""Simplicial complexes on a ground set of at most 64 labeled vertices.

A vertex set is a plain ``int`` used as a bit pattern: bit ``v`` is set when
vertex ``v`` belongs to the set.  A :class:`SimplicialComplex` stores the size
of its ground set together with its facets (an antichain of vertex sets,
sorted by bit pattern).  Vertices of the ground set that lie in no facet are
allowed; they contribute linear generators to the Stanley-Reisner ideal.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property
from math import comb

from typedefect.errors import DomainError, VertexRangeError

MAX_VERTICES = 64

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    """Pack vertex indices into a bit pattern."""
    mask = 0
    for v in vertices:
        if not 0 <= v < MAX_VERTICES:
            raise VertexRangeError(f"vertex {v} outside 0..{MAX_VERTICES - 1}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    """Vertex indices of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: VertexSet) -> int:
    return mask.bit_count()


def submasks(mask: VertexSet) -> Iterator[VertexSet]:
    """Every subset of ``mask``, ``mask`` itself first and ``0`` last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: VertexSet, support: VertexSet) -> VertexSet:
    """Re-index ``mask`` (a subset of ``support``) densely along ``support``.

    The i-th smallest vertex of ``support`` becomes vertex ``i``.
    """
    out = 0
    bit = 1
    while support:
        low = support & -support
        if mask & low:
            out |= bit
        bit <<= 1
        support ^= low
    return out


def expand(mask: VertexSet, support: VertexSet) -> VertexSet:
    """Inverse of :func:`compress`: send vertex ``i`` to the i-th vertex of ``support``."""
    out = 0
    i = 0
    while support:
        low = support & -support
        if mask >> i & 1:
            out |= low
        i += 1
        support ^= low
    return out


def maximal_sets(masks: Iterable[VertexSet]) -> tuple[VertexSet, ...]:
    """Inclusion-maximal members of ``masks``, sorted by bit pattern."""
    kept: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _ground(n: int) -> VertexSet:
    return (1 << n) - 1


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its ground-set size and facets.

    Build instances with :func:`make_complex` unless the facets are already a
    sorted antichain.  ``facets == ()`` is the void complex and
    ``facets == (0,)`` is the complex ``{∅}``; the two are distinct.
    """

    n: int
    facets: tuple[VertexSet, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise VertexRangeError(f"ground-set size {self.n} outside 0..{MAX_VERTICES}")
        ground = _ground(self.n)
        for f in self.facets:
            if f < 0 or f & ~ground:
                raise VertexRangeError(f"facet {members(f)} outside ground set of size {self.n}")
        if list(self.facets) != sorted(set(self.facets)):
            raise DomainError("facets must be distinct and sorted by bit pattern")
        for a in self.facets:
            for b in self.facets:
                if a != b and a & ~b == 0:
                    raise DomainError(f"facet {members(a)} is contained in {members(b)}")

    @classmethod
    def _trusted(cls, n: int, facets: tuple[VertexSet, ...]) -> SimplicialComplex:
        # skips validation; callers guarantee a sorted antichain inside the ground set
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "facets", facets)
        return obj

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, members(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"

    @property
    def ground(self) -> VertexSet:
        return _ground(self.n)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @cached_property
    def used_vertices(self) -> VertexSet:
        out = 0
        for f in self.facets:
            out |= f
        return out

    @cached_property
    def faces(self) -> frozenset[VertexSet]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    @cached_property
    def faces_by_size(self) -> tuple[tuple[VertexSet, ...], ...]:
        """``faces_by_size[k]`` lists the faces with ``k`` vertices, sorted."""
        if not self.facets:
            return ()
        top = max(f.bit_count() for f in self.facets)
        buckets: list[list[int]] = [[] for _ in range(top + 1)]
        for f in self.faces:
            buckets[f.bit_count()].append(f)
        return tuple(tuple(sorted(b)) for b in buckets)

    def is_face(self, face: VertexSet) -> bool:
        return any(face & ~f == 0 for f in self.facets)


def make_complex(n: int, faces: Iterable[VertexSet | Iterable[int]]) -> SimplicialComplex:
    """The complex on ``n`` vertices generated by ``faces``.

    Faces may be bit patterns or iterables of vertex indices and may be
    comparable; only the maximal ones are kept.  An empty face list yields the
    void complex.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise VertexRangeError(f"ground-set size {n} outside 0..{MAX_VERTICES}")
    ground = _ground(n)
    masks = []
    for face in faces:
        mask = face if isinstance(face, int) else vset(face)
        if mask < 0 or mask & ~ground:
            raise VertexRangeError(f"face {members(mask)} outside ground set of size {n}")
        masks.append(mask)
    return SimplicialComplex._trusted(n, maximal_sets(masks))


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on ``n`` vertices (``{∅}`` when ``n == 0``)."""
    return SimplicialComplex._trusted(n, (_ground(n),))


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the (n-1)-simplex: all proper subsets of an n-set."""
    if n < 1:
        raise DomainError("a simplex boundary needs at least one vertex")
    g = _ground(n)
    return SimplicialComplex._trusted(n, tuple(sorted(g & ~(1 << v) for v in range(n))))


def graph(n: int, edges: Iterable[tuple[int, int]]) -> SimplicialComplex:
    """A simple graph as a complex: every vertex is a face, edges are 1-faces."""
    faces: list[int] = [1 << v for v in range(n)]
    for u, v in edges:
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        faces.append(vset((u, v)))
    return make_complex(n, faces)


def cycle_graph(m: int) -> SimplicialComplex:
    return graph(m, [(i, (i + 1) % m) for i in range(m)])


def path_graph(m: int) -> SimplicialComplex:
    return graph(m, [(i, i + 1) for i in range(m - 1)])


def complete_graph(m: int) -> SimplicialComplex:
    return graph(m, [(i, j) for i in range(m) for j in range(i + 1, m)])


def _require_nonvoid(delta: SimplicialComplex) -> None:
    if delta.is_void:
        raise DomainError("operation undefined on the void complex")


def _check_subset(delta: SimplicialComplex, mask: VertexSet) -> None:
    if mask < 0 or mask & ~delta.ground:
        raise VertexRangeError(f"vertex set {members(mask)} outside ground set of size {delta.n}")


def dimension(delta: SimplicialComplex) -> int:
    _require_nonvoid(delta)
    return max(f.bit_count() for f in delta.facets) - 1


def codimension(delta: SimplicialComplex) -> int:
    """``n - d`` where ``d = dimension + 1``."""
    return delta.n - dimension(delta) - 1


def is_full_simplex(delta: SimplicialComplex) -> bool:
    """True when the ground set itself is a face (codimension zero)."""
    return delta.facets == (delta.ground,)


def induced(delta: SimplicialComplex, W: VertexSet) -> SimplicialComplex:
    """The subcomplex induced on ``W``, re-indexed densely.

    Vertex ``i`` of the result is ``members(W)[i]`` in ``delta``.
    """
    _check_subset(delta, W)
    if W == delta.ground:
        return delta
    if not delta.facets:
        return SimplicialComplex._trusted(W.bit_count(), ())
    parts = {f & W for f in delta.facets}
    return SimplicialComplex._trusted(
        W.bit_count(), tuple(sorted(compress(f, W) for f in maximal_sets(parts)))
    )


def delete_vertex(delta: SimplicialComplex, v: int) -> SimplicialComplex:
    """``Δ - v``: the complex induced on every other vertex."""
    if not 0 <= v < delta.n:
        raise VertexRangeError(f"vertex {v} outside ground set of size {delta.n}")
    return induced(delta, delta.ground & ~(1 << v))


def link(delta: SimplicialComplex, face: VertexSet) -> SimplicialComplex:
    """``lk F``, on the ground set with the vertices of ``F`` removed."""
    _check_subset(delta, face)
    if not delta.is_face(face):
        raise DomainError(f"{members(face)} is not a face")
    rest = delta.ground & ~face
    parts = maximal_sets(f & ~face for f in delta.facets if face & ~f == 0)
    return SimplicialComplex._trusted(rest.bit_count(), tuple(sorted(compress(f, rest) for f in parts)))


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """``Δ1 * Δ2`` on the concatenated ground set (second shifted past the first)."""
    n = first.n + second.n
    if n > MAX_VERTICES:
        raise VertexRangeError(f"join would have {n} vertices")
    shift = first.n
    return SimplicialComplex._trusted(
        n, tuple(sorted(a | b << shift for a in first.facets for b in second.facets))
    )


def minimal_nonfaces(delta: SimplicialComplex) -> tuple[VertexSet, ...]:
    """Inclusion-minimal non-faces, i.e. the minimal generators of ``I_Δ``."""
    _require_nonvoid(delta)
    faces = delta.faces
    ground = delta.ground
    found: set[int] = set()
    for f in faces:
        outside = ground & ~f
        while outside:
            low = outside & -outside
            outside ^= low
            cand = f | low
            if cand in faces or cand in found:
                continue
            rest = f
            ok = True
            while rest:
                bit = rest & -rest
                rest ^= bit
                if cand & ~bit not in faces:
                    ok = False
                    break
            if ok:
                found.add(cand)
    return tuple(sorted(found))


def alexander_dual(delta: SimplicialComplex) -> SimplicialComplex:
    """``Δ^∨``: faces are complements of non-faces of ``Δ``.

    The dual of the full simplex is the void complex.
    """
    ground = delta.ground
    return SimplicialComplex._trusted(
        delta.n, tuple(sorted(ground & ~m for m in minimal_nonfaces(delta)))
    )


def f_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """``(f_{-1}, f_0, ..., f_{d-1})``."""
    _require_nonvoid(delta)
    return tuple(len(level) for level in delta.faces_by_size)


def h_vector(delta: SimplicialComplex) -> tuple[int, ...]:
    """``(h_0, ..., h_d)`` from the f-vector by the usual binomial transform."""
    return h_from_f(f_vector(delta))


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1)) for k in range(d + 1)
    )


def f_from_h(h: tuple[int, ...]) -> tuple[int, ...]:
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def is_pure(delta: SimplicialComplex) -> bool:
    _require_nonvoid(delta)
    return len({f.bit_count() for f in delta.facets}) == 1


def is_flag(delta: SimplicialComplex) -> bool:
    return all(m.bit_count() == 2 for m in minimal_nonfaces(delta))


def adjacency(delta: SimplicialComplex) -> list[VertexSet]:
    """Neighbour masks of the 1-skeleton, indexed by vertex."""
    nbrs = [0] * delta.n
    for f in delta.facets:
        for v in members(f):
            nbrs[v] |= f & ~(1 << v)
    return nbrs


def clique_complex(g: SimplicialComplex) -> SimplicialComplex:
    """The flag complex whose faces are the cliques of the graph ``g``."""
    if dimension(g) > 1:
        raise DomainError("clique_complex expects a complex of dimension at most 1")
    nbrs = adjacency(g)
    cliques: list[int] = []

    def expand_clique(r: int, p: int, x: int) -> None:
        if not p and not x:
            cliques.append(r)
            return
        pivot_pool = p | x
        pivot = max(members(pivot_pool), key=lambda u: (p & nbrs[u]).bit_count())
        for v in members(p & ~nbrs[pivot]):
            bit = 1 << v
            expand_clique(r | bit, p & nbrs[v], x & nbrs[v])
            p &= ~bit
            x |= bit

    expand_clique(0, g.used_vertices, 0)
    return SimplicialComplex._trusted(g.n, tuple(sorted(cliques)))


def is_strongly_facet_connected(delta: SimplicialComplex) -> bool:
    """Facets linked by chains meeting consecutively in codimension-one faces."""
    if not is_pure(delta):
        raise DomainError("strong facet-connectivity is defined for pure complexes")
    facets = delta.facets
    size = facets[0].bit_count()
    seen = {0}
    stack = [0]
    while stack:
        a = facets[stack.pop()]
        for j, b in enumerate(facets):
            if j not in seen and (a & b).bit_count() == size - 1:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(facets)


def is_connected(delta: SimplicialComplex) -> bool:
    """Whether the used vertices form one component (false for ``{∅}``)."""
    _require_nonvoid(delta)
    used = delta.used_vertices
    if not used:
        return False
    reach = delta.facets[0]
    while True:
        grown = reach
        for f in delta.facets:
            if f & grown:
                grown |= f
        if grown == reach:
            break
        reach = grown
    return reach == used
