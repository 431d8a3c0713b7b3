"""Gluing complexes along faces, and treeish complexes.

``glue(Δ1, E1, Δ2, E2)`` keeps the labels of Δ1 and appends the vertices of
Δ2 outside ``E2`` in increasing order; ``sorted(E2)[i]`` is identified with
``sorted(E1)[i]``.
"""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from math import comb

from typedefect._peel import peel_search
from typedefect.betti import modified_type
from typedefect.cm import is_cohen_macaulay
from typedefect.complexes import (
    SimplicialComplex,
    VertexSet,
    dimension,
    is_pure,
    make_complex,
    members,
    vset,
)
from typedefect.errors import DomainError, PreconditionError
from typedefect.homology import QQ, FieldSpec

MAX_TREEISH_FACETS = 20


def glue_map(n1: int, E1: VertexSet, n2: int, E2: VertexSet) -> list[int]:
    """Where each vertex of the second complex lands in the glued ground set."""
    target = dict(zip(members(E2), members(E1)))
    out = []
    fresh = n1
    for v in range(n2):
        if v in target:
            out.append(target[v])
        else:
            out.append(fresh)
            fresh += 1
    return out


def glue(d1: SimplicialComplex, E1: VertexSet, d2: SimplicialComplex, E2: VertexSet) -> SimplicialComplex:
    """``Δ1 ⊔_{E1=E2} Δ2`` on ``n1 + n2 - |E1|`` vertices."""
    if d1.is_void or d2.is_void:
        raise DomainError("cannot glue the void complex")
    if not d1.is_face(E1) or not d2.is_face(E2):
        raise DomainError("glued sets must be faces of their complexes")
    if E1.bit_count() != E2.bit_count():
        raise DomainError("glued faces must have the same size")
    where = glue_map(d1.n, E1, d2.n, E2)
    moved = [vset(where[v] for v in members(f)) for f in d2.facets]
    return make_complex(d1.n + d2.n - E1.bit_count(), [*d1.facets, *moved])


@dataclass(frozen=True)
class GlueReport:
    """Both sides of the gluing identities with the quantities they use."""

    n: int
    d: int
    ell: int
    c: int
    type_glued: int
    type_first: int
    type_second: int
    td_glued: int
    td_first: int
    td_second: int
    correction: int
    cohen_macaulay: tuple[bool, bool]

    @property
    def type_rhs(self) -> int:
        return self.type_first + self.type_second + self.correction

    @property
    def td_rhs(self) -> int:
        return self.td_first + self.td_second - self.d + self.ell + self.correction

    @property
    def type_holds(self) -> bool:
        return self.type_glued == self.type_rhs

    @property
    def td_holds(self) -> bool:
        return self.td_glued == self.td_rhs

    @property
    def additive(self) -> bool:
        """``td`` adds exactly, the specialization expected once ``ℓ >= d - 1``."""
        return self.td_glued == self.td_first + self.td_second


def verify_glue_type(
    d1: SimplicialComplex,
    E1: VertexSet,
    d2: SimplicialComplex,
    E2: VertexSet,
    field: FieldSpec = QQ,
    require_cm: bool = True,
) -> GlueReport:
    """Compute ``type`` and ``td`` of the glued complex and of both pieces.

    Hypotheses: equal dimension, every ground vertex used, and (unless
    ``require_cm`` is off) both pieces Cohen-Macaulay.
    """
    if d1.is_void or d2.is_void:
        raise PreconditionError("nonvoid", "cannot glue the void complex")
    d = dimension(d1) + 1
    if dimension(d2) + 1 != d:
        raise PreconditionError("equal-dimension", "the pieces must have the same dimension")
    for piece in (d1, d2):
        if piece.used_vertices != piece.ground:
            raise PreconditionError("no-unused-vertices", "every ground vertex must lie in a face")
    cm = (is_cohen_macaulay(d1, field), is_cohen_macaulay(d2, field))
    if require_cm and not all(cm):
        raise PreconditionError("cohen-macaulay", "both pieces must be Cohen-Macaulay")
    glued = glue(d1, E1, d2, E2)
    ell = E1.bit_count()
    n = glued.n
    c = n - d
    t = modified_type(glued, field)
    t1 = modified_type(d1, field)
    t2 = modified_type(d2, field)
    return GlueReport(
        n=n,
        d=d,
        ell=ell,
        c=c,
        type_glued=t,
        type_first=t1,
        type_second=t2,
        td_glued=t - c,
        td_first=t1 - (d1.n - d),
        td_second=t2 - (d2.n - d),
        correction=comb(n - ell, c + 1),
        cohen_macaulay=cm,
    )


@dataclass(frozen=True)
class TreeishMove:
    """One construction step.

    The first move is a base: ``kind`` is ``"simplex"`` or ``"boundary"`` and
    ``face`` is empty.  Later moves attach a new simplex along a face of size
    ``d - 1`` or a new simplex boundary along a face of size ``d - 1`` or
    ``d``; new vertices get the next free labels.
    """

    kind: str
    face: tuple[int, ...] = ()


def _boundary_facets(U: VertexSet) -> list[VertexSet]:
    return [U & ~(1 << v) for v in members(U)]


def treeish_steps(d: int, moves: Sequence[TreeishMove]) -> Iterator[SimplicialComplex]:
    """Every intermediate complex of a construction, starting with the base."""
    if d < 1:
        raise DomainError("facet size d must be at least 1")
    if not moves:
        raise DomainError("a construction needs a base move")
    base = moves[0]
    if base.face:
        raise DomainError("move 0: the base move takes no face")
    if base.kind == "simplex":
        n, facets = d, [(1 << d) - 1]
    elif base.kind == "boundary":
        n, facets = d + 1, _boundary_facets((1 << (d + 1)) - 1)
    else:
        raise DomainError(f"move 0: unknown kind {base.kind!r}")
    current = make_complex(n, facets)
    yield current
    for idx, move in enumerate(moves[1:], start=1):
        E = vset(move.face)
        if len(set(move.face)) != len(move.face) or any(not 0 <= v < n for v in move.face):
            raise DomainError(f"move {idx}: face {move.face} is not a set of existing vertices")
        if not current.is_face(E):
            raise DomainError(f"move {idx}: {move.face} is not a face")
        size = E.bit_count()
        if move.kind == "simplex":
            if size != d - 1:
                raise DomainError(f"move {idx}: a simplex attaches along a face of size {d - 1}")
            new = [E | 1 << n]
            n += 1
        elif move.kind == "boundary":
            if size not in (d - 1, d):
                raise DomainError(f"move {idx}: a boundary attaches along a face of size {d - 1} or {d}")
            extra = d + 1 - size
            U = E | (((1 << extra) - 1) << n)
            n += extra
            new = _boundary_facets(U)
        else:
            raise DomainError(f"move {idx}: unknown kind {move.kind!r}")
        current = make_complex(n, [*current.facets, *new])
        yield current


def build_treeish_complex(d: int, moves: Sequence[TreeishMove]) -> SimplicialComplex:
    """Replay a move log; the result is pure with facets of size ``d``."""
    last = None
    for last in treeish_steps(d, moves):
        pass
    assert last is not None
    return last


def random_treeish_moves(
    d: int, steps: int, seed: int = 0, max_vertices: int | None = None
) -> list[TreeishMove]:
    """A seeded random legal move log with at most ``steps`` attachments."""
    rng = random.Random(seed)
    moves = [TreeishMove(rng.choice(("simplex", "boundary")))]
    current = build_treeish_complex(d, moves)
    for _ in range(steps):
        options = []
        for kind, size, extra in (("simplex", d - 1, 1), ("boundary", d - 1, 2), ("boundary", d, 1)):
            if max_vertices is not None and current.n + extra > max_vertices:
                continue
            options.append((kind, size))
        if not options:
            break
        kind, size = rng.choice(options)
        faces = current.faces_by_size[size] if size < len(current.faces_by_size) else ()
        if not faces:
            continue
        move = TreeishMove(kind, members(rng.choice(faces)))
        moves.append(move)
        current = build_treeish_complex(d, moves)
    return moves


def is_treeish_complex(delta: SimplicialComplex, max_facets: int = MAX_TREEISH_FACETS) -> bool:
    """Peel attached simplices and simplex boundaries back to a base case."""
    if not is_pure(delta):
        raise DomainError("treeish recognition is defined for pure complexes")
    if delta.used_vertices != delta.ground:
        return False
    return peel_search(delta.facets, allow_boundary=True, max_facets=max_facets)
