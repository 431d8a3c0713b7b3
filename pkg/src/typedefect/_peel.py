"""Reverse search shared by facet-constructibility and treeish recognition.

A pure complex with facets of size ``d`` is peeled back to a base case by
undoing one gluing at a time:

* simplex attach: a facet ``F`` with a vertex ``w`` in no other facet and
  ``F - w`` inside some other facet;
* boundary attach along a ``(d-1)``-set: one vertex ``w`` whose facets are
  exactly ``U - x`` for ``x ∈ U - w`` (``|U| = d + 1``) while ``U - w`` is a facet;
* boundary attach along a ``(d-2)``-set: two vertices whose facets are all
  ``d + 1`` facets of ``∂U`` and ``U - {w1, w2}`` lies in a remaining facet.

The last two moves are only tried when ``allow_boundary`` is set.  Failed
facet sets are memoised.
"""

from __future__ import annotations

from collections.abc import Iterator

from typedefect.complexes import members
from typedefect.errors import CapacityError, DomainError

Facets = frozenset[int]


def _contained(face: int, facets: Facets) -> bool:
    return any(face & ~f == 0 for f in facets)


def _is_boundary(facets: Facets, d: int) -> bool:
    if len(facets) != d + 1:
        return False
    union = 0
    for f in facets:
        union |= f
    return union.bit_count() == d + 1


def _peels(facets: Facets, d: int, allow_boundary: bool) -> Iterator[Facets]:
    owners: dict[int, list[int]] = {}
    for f in facets:
        for v in members(f):
            owners.setdefault(v, []).append(f)
    for w, own in sorted(owners.items()):
        if len(own) == 1:
            f = own[0]
            rest = facets - {f}
            if rest and _contained(f & ~(1 << w), rest):
                yield rest
        if not allow_boundary or len(own) != d:
            continue
        union = 0
        for f in own:
            union |= f
        if union.bit_count() != d + 1:
            continue
        # w lies in exactly the d facets of ∂U through it
        base = union & ~(1 << w)
        if base in facets:
            yield facets - set(own)
        for partner in members(base):
            if partner < w:
                continue
            pown = owners[partner]
            if len(pown) != d or any(f & ~union for f in pown):
                continue
            both = set(own) | set(pown)
            if len(both) != d + 1:
                continue
            rest = facets - both
            if rest and _contained(base & ~(1 << partner), rest):
                yield rest


def peel_search(facets: tuple[int, ...], allow_boundary: bool, max_facets: int = 20) -> bool:
    """Whether ``facets`` (a pure antichain) peels down to a simplex or simplex boundary."""
    if not facets:
        raise DomainError("peel search needs a non-void complex")
    sizes = {f.bit_count() for f in facets}
    if len(sizes) != 1:
        raise DomainError("peel search is defined for pure complexes")
    if len(facets) > max_facets:
        raise CapacityError(f"{len(facets)} facets exceeds the search bound {max_facets}")
    d = sizes.pop()
    dead: set[Facets] = set()

    def search(state: Facets) -> bool:
        if len(state) == 1:
            return True
        if allow_boundary and _is_boundary(state, d):
            return True
        if state in dead:
            return False
        for nxt in _peels(state, d, allow_boundary):
            if search(nxt):
                return True
        dead.add(state)
        return False

    return search(frozenset(facets))
