"""Cohen-Macaulay, 2-CM, Gorenstein, shellable and facet-constructible tests."""

from __future__ import annotations

from functools import lru_cache

from typedefect._peel import peel_search
from typedefect.betti import total_betti
from typedefect.complexes import (
    SimplicialComplex,
    codimension,
    delete_vertex,
    dimension,
    is_pure,
    link,
)
from typedefect.errors import CapacityError, DomainError
from typedefect.homology import QQ, FieldSpec, reduced_homology

MAX_SEARCH_FACETS = 20


@lru_cache(maxsize=1 << 17)
def is_cohen_macaulay(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Reisner's criterion: every link has homology only in its top dimension."""
    dimension(delta)
    for face in delta.faces:
        lk = link(delta, face)
        top = max(f.bit_count() for f in lk.facets) - 1
        profile = reduced_homology(lk, field)
        if any(profile[q] for q in range(-1, top)):
            return False
    return True


def is_2cm(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """CM, and deleting any vertex leaves a CM complex of the same dimension."""
    if not is_cohen_macaulay(delta, field):
        return False
    top = dimension(delta)
    for v in range(delta.n):
        rest = delete_vertex(delta, v)
        if dimension(rest) != top or not is_cohen_macaulay(rest, field):
            return False
    return True


def is_gorenstein(delta: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """CM of type one: ``b_c(S/I_Δ) = 1``."""
    return is_cohen_macaulay(delta, field) and total_betti(delta, codimension(delta), field) == 1


def _check_search_input(delta: SimplicialComplex) -> None:
    if not is_pure(delta):
        raise DomainError("search is defined for pure complexes")
    if len(delta.facets) > MAX_SEARCH_FACETS:
        raise CapacityError(f"{len(delta.facets)} facets exceeds the search bound {MAX_SEARCH_FACETS}")


def _shelling_step_ok(face: int, placed: list[int]) -> bool:
    size = face.bit_count()
    walls = [face & g for g in placed if (face & g).bit_count() == size - 1]
    if not walls:
        return False
    return all(any((face & g) & ~w == 0 for w in walls) for g in placed)


def is_shellable(delta: SimplicialComplex) -> bool:
    """Search for an order in which each facet meets the earlier ones in a
    pure codimension-one subcomplex of its boundary.

    Whether a facet may be added depends only on the set already placed, so
    reachable sets are memoised.
    """
    _check_search_input(delta)
    facets = delta.facets
    full = (1 << len(facets)) - 1
    seen: set[int] = set()
    stack = [1 << k for k in range(len(facets))]
    while stack:
        state = stack.pop()
        if state == full:
            return True
        if state in seen:
            continue
        seen.add(state)
        placed = [facets[k] for k in range(len(facets)) if state >> k & 1]
        for k in range(len(facets)):
            if not state >> k & 1 and _shelling_step_ok(facets[k], placed):
                stack.append(state | 1 << k)
    return False


def is_facet_constructible(delta: SimplicialComplex) -> bool:
    """Built from one simplex by attaching simplices along codimension-one faces."""
    _check_search_input(delta)
    return peel_search(delta.facets, allow_boundary=False)
