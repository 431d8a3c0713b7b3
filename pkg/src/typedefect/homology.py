"""Reduced simplicial homology over the rationals or a prime field.

Ranks come from sparse Gaussian elimination: fraction-free integer row
operations (with content removal) over the rationals, modular arithmetic over
GF(p).  Faces are oriented by increasing vertex index.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from typedefect.complexes import SimplicialComplex, VertexSet, dimension
from typedefect.errors import DomainError, VertexRangeError

DEFAULT_PRIME = 2147483647


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``p is None``) or GF(p) for a prime ``p < 2**31``."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if not 2 <= self.p < 2**31:
                raise DomainError(f"prime {self.p} outside 2..2**31-1")
            if not _is_prime(self.p):
                raise DomainError(f"{self.p} is not prime")

    @property
    def name(self) -> str:
        return "q" if self.p is None else f"gf{self.p}"

    def __str__(self) -> str:
        return "QQ" if self.p is None else f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accept ``q`` for the rationals or ``gf<p>`` for a prime field."""
        t = text.strip().lower()
        if t in ("q", "qq"):
            return cls()
        if t.startswith("gf") and t[2:].isdigit():
            return cls(int(t[2:]))
        raise DomainError(f"unknown field {text!r}; expected 'q' or 'gf<p>'")


QQ = FieldSpec()
GF_DEFAULT = FieldSpec(DEFAULT_PRIME)


def sparse_rank(rows: Iterable[dict[int, int]], field: FieldSpec = QQ) -> int:
    """Rank of a matrix given as sparse rows ``{column: entry}``.

    Each incoming row is reduced against the pivot rows in the order they were
    created; a surviving row becomes a new pivot row, pivoting on its
    sparsest column.
    """
    work = [r for r in rows if r]
    if not work:
        return 0
    counts = Counter(c for r in work for c in r)
    p = field.p
    order: list[int] = []
    pivots: dict[int, dict[int, int]] = {}
    for src in work:
        row = dict(src) if p is None else {c: v % p for c, v in src.items() if v % p}
        for col in order:
            a = row.get(col)
            if a is None:
                continue
            prow = pivots[col]
            if p is None:
                b = prow[col]
                for c in row:
                    row[c] *= b
                for c, v in prow.items():
                    nv = row.get(c, 0) - a * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
                if row:
                    g = 0
                    for v in row.values():
                        g = gcd(g, v)
                        if g == 1:
                            break
                    if g > 1:
                        for c in row:
                            row[c] //= g
            else:
                for c, v in prow.items():
                    nv = (row.get(c, 0) - a * v) % p
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            if not row:
                break
        if not row:
            continue
        col = min(row, key=lambda c: (counts[c], c))
        if p is not None:
            inv = pow(row[col], -1, p)
            row = {c: v * inv % p for c, v in row.items()}
        pivots[col] = row
        order.append(col)
    return len(order)


def dense_rank(matrix: Sequence[Sequence[int]], field: FieldSpec = QQ) -> int:
    return sparse_rank(({j: v for j, v in enumerate(r) if v} for r in matrix), field)


@dataclass(frozen=True)
class HomologyProfile:
    """``dims[q + 1] = dim H̃_q`` for ``q = -1 .. dim Δ``."""

    dims: tuple[int, ...]

    def __getitem__(self, q: int) -> int:
        i = q + 1
        return self.dims[i] if 0 <= i < len(self.dims) else 0

    def euler(self) -> int:
        """Reduced Euler characteristic ``Σ (-1)^q dim H̃_q``."""
        return sum((-1) ** (i - 1) * v for i, v in enumerate(self.dims))


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of ``∂_i``: columns are i-faces, rows are (i-1)-faces."""

    dim: int
    domain: tuple[VertexSet, ...]
    codomain: tuple[VertexSet, ...]
    entries: tuple[tuple[int, ...], ...]

    def rank(self, field: FieldSpec = QQ) -> int:
        return dense_rank(self.entries, field)


def _boundary_columns(
    upper: Sequence[VertexSet], lower: Sequence[VertexSet]
) -> list[dict[int, int]]:
    index = {f: k for k, f in enumerate(lower)}
    cols = []
    for face in upper:
        col = {}
        rest = face
        sign = 1
        while rest:
            low = rest & -rest
            rest ^= low
            col[index[face ^ low]] = sign
            sign = -sign
        cols.append(col)
    return cols


def boundary_matrix(delta: SimplicialComplex, i: int, field: FieldSpec = QQ) -> BoundaryMatrix:
    """``∂_i`` from i-dimensional to (i-1)-dimensional faces.

    ``∂_0`` is the augmentation onto the single (-1)-face ``∅``; ``∂_{-1}``
    maps onto the zero space.
    """
    top = dimension(delta)
    if not -1 <= i <= top:
        raise VertexRangeError(f"boundary index {i} outside -1..{top}")
    levels = delta.faces_by_size
    upper = levels[i + 1]
    lower = levels[i] if i >= 0 else ()
    cols = _boundary_columns(upper, lower) if i >= 0 else [{} for _ in upper]
    p = field.p
    entries = []
    for r in range(len(lower)):
        row = []
        for col in cols:
            v = col.get(r, 0)
            row.append(v % p if p is not None else v)
        entries.append(tuple(row))
    return BoundaryMatrix(i, tuple(upper), tuple(lower), tuple(entries))


@lru_cache(maxsize=1 << 19)
def reduced_homology(delta: SimplicialComplex, field: FieldSpec = QQ) -> HomologyProfile:
    """Dimensions of ``H̃_q(Δ; k)`` for ``q = -1 .. dim Δ``."""
    if delta.is_void:
        raise DomainError("reduced homology of the void complex is undefined")
    levels = delta.faces_by_size
    d = len(levels) - 1
    # ranks[q] = rank ∂_q for q = 0..d-1; ∂_{-1} and ∂_d vanish
    ranks = [0] * (d + 1)
    if d >= 1:
        ranks[0] = 1
    for q in range(1, d):
        ranks[q] = sparse_rank(_boundary_columns(levels[q + 1], levels[q]), field)
    dims = []
    for q in range(-1, d):
        below = ranks[q] if q >= 0 else 0
        dims.append(len(levels[q + 1]) - below - ranks[q + 1])
    return HomologyProfile(tuple(dims))
