"""Line-oriented text format for complexes.

::

    # comments run to the end of the line
    name: heredity-example
    vertices: 1 2 3 4 5 6
    facet: 1 2 3
    facet: 2 3 4

``vertices:`` is optional; without it the ground set is the union of the
facet labels in natural order (numeric labels by value, then the rest).
A bare ``facet:`` line is the empty face.  LF and CRLF are both accepted.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from typedefect.complexes import SimplicialComplex, make_complex, maximal_sets, members, vset
from typedefect.errors import TypeDefectError


class ParseError(TypeDefectError, ValueError):
    """Malformed document; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


def natural_key(label: str) -> tuple[int, int, str]:
    return (0, int(label), label) if label.isdigit() else (1, 0, label)


@dataclass(frozen=True)
class ComplexDocument:
    name: str
    labels: tuple[str, ...]
    facets: tuple[tuple[str, ...], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def to_complex(self) -> SimplicialComplex:
        index = {lab: i for i, lab in enumerate(self.labels)}
        return make_complex(self.n, [vset(index[x] for x in f) for f in self.facets])

    def canonical(self) -> ComplexDocument:
        """Maximal facets only, sorted by bit pattern, labels in vertex order."""
        return from_complex(self.to_complex(), self.name, self.labels)


def from_complex(
    delta: SimplicialComplex, name: str = "complex", labels: Sequence[str] | None = None
) -> ComplexDocument:
    if labels is None:
        labels = [str(v) for v in range(delta.n)]
    labels = tuple(labels)
    if len(labels) != delta.n:
        raise ValueError(f"{len(labels)} labels for {delta.n} vertices")
    facets = tuple(tuple(labels[v] for v in members(f)) for f in maximal_sets(delta.facets))
    return ComplexDocument(name, labels, facets)


def _tokens(body: str, offset: int) -> list[tuple[str, int]]:
    out = []
    col = 0
    for part in body.split(" "):
        if part:
            out.append((part, offset + col + 1))
        col += len(part) + 1
    return out


def parse_complex(text: str) -> ComplexDocument:
    name = None
    declared: list[str] | None = None
    declared_at = 0
    raw_facets: list[tuple[int, list[tuple[str, int]]]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").replace("\t", " ")
        hash_at = line.find("#")
        if hash_at >= 0:
            line = line[:hash_at]
        if not line.strip():
            continue
        colon = line.find(":")
        if colon < 0:
            start = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'key: value'", lineno, start)
        key = line[:colon].strip()
        body = line[colon + 1 :]
        tokens = _tokens(body, colon + 1)
        if key == "name":
            if name is not None:
                raise ParseError("second 'name:' line", lineno, 1)
            name = body.strip()
        elif key == "vertices":
            if declared is not None:
                raise ParseError("second 'vertices:' line", lineno, 1)
            seen: set[str] = set()
            for lab, col in tokens:
                if lab in seen:
                    raise ParseError(f"duplicate label {lab!r}", lineno, col)
                seen.add(lab)
            declared = [lab for lab, _ in tokens]
            declared_at = lineno
        elif key == "facet":
            raw_facets.append((lineno, tokens))
        else:
            start = len(line) - len(line.lstrip()) + 1
            raise ParseError(f"unknown key {key!r}", lineno, start)
    if declared is None:
        pool = {lab for _, toks in raw_facets for lab, _ in toks}
        labels = sorted(pool, key=natural_key)
    else:
        labels = declared
    known = set(labels)
    facets = []
    for lineno, toks in raw_facets:
        seen = set()
        for lab, col in toks:
            if lab not in known:
                raise ParseError(f"unknown label {lab!r} (vertices declared on line {declared_at})", lineno, col)
            if lab in seen:
                raise ParseError(f"label {lab!r} repeated in a facet", lineno, col)
            seen.add(lab)
        facets.append(tuple(lab for lab, _ in toks))
    if len(labels) > 64:
        raise ParseError(f"{len(labels)} vertices exceeds 64", declared_at or 1, 1)
    return ComplexDocument(name or "complex", tuple(labels), tuple(facets))


def emit_complex(doc: ComplexDocument) -> str:
    """Canonical text: ``name``, ``vertices`` and one ``facet`` line per maximal face."""
    canon = doc.canonical()
    lines = [f"name: {canon.name}", "vertices: " + " ".join(canon.labels)]
    for f in canon.facets:
        lines.append(("facet: " + " ".join(f)).rstrip())
    return "\n".join(lines) + "\n"
