"""Command-line front end.

Every command reads complexes in the line-oriented document format (``-``
means stdin), calls one library routine and prints its result, either as
text or, with ``--format structured``, as one JSON object with sorted keys.
Each object carries ``command`` and ``field``.

Exit status: 0 when the command ran and any checked property holds, 1 when a
checked property fails (a counterexample is printed or written), 2 for usage,
parse and precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from dataclasses import asdict, replace
from pathlib import Path
from typing import Any

from typedefect.betti import betti_table, invariant_report, modified_type, type_defect
from typedefect.cm import (
    MAX_SEARCH_FACETS,
    is_2cm,
    is_cohen_macaulay,
    is_facet_constructible,
    is_gorenstein,
    is_shellable,
)
from typedefect.complexes import SimplicialComplex, alexander_dual, dimension, is_pure, members
from typedefect.document import ComplexDocument, emit_complex, from_complex, parse_complex
from typedefect.errors import TypeDefectError
from typedefect.gluing import glue, glue_map, is_treeish_complex, verify_glue_type
from typedefect.graphs import (
    is_chordal,
    is_treeish_graph,
    perfect_elimination_order,
    td_witness,
    treeish_by_construction,
    treeish_by_td,
)
from typedefect.homology import QQ, FieldSpec
from typedefect.linres import (
    betti_lower_bound,
    classify_equality,
    eagon_reiner_report,
    generating_degree,
    h_vector_prediction,
    has_linear_resolution,
)
from typedefect.sweeps import SUITES, SuiteResult, run_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits with 2 as well; keep the message format
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


def _read(path: str) -> ComplexDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_complex(text)


def _labels(doc: ComplexDocument, mask: int) -> list[str]:
    return [doc.labels[v] for v in members(mask)]


def _face(doc: ComplexDocument, text: str) -> int:
    index = {lab: i for i, lab in enumerate(doc.labels)}
    mask = 0
    for lab in text.replace(",", " ").split():
        if lab not in index:
            raise _Usage(f"unknown label {lab!r} in face {text!r}")
        mask |= 1 << index[lab]
    return mask


class _Out:
    """Collects one report and renders it in the chosen format."""

    def __init__(self, args: argparse.Namespace) -> None:
        self.structured = args.format == "structured"
        self.data: dict[str, Any] = {"command": args.command, "field": args.field.name}
        self.lines: list[str] = []

    def put(self, key: str, value: Any, text: str | None = None) -> None:
        self.data[key] = value
        if text is not None:
            self.lines.append(text)
        elif not isinstance(value, (dict, list)):
            self.lines.append(f"{key} = {_text(value)}")

    def say(self, line: str) -> None:
        self.lines.append(line)

    def emit(self) -> None:
        if self.structured:
            print(json.dumps(self.data, sort_keys=True))
        else:
            print(f"field = {self.data['field']}")
            for line in self.lines:
                print(line)


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "n/a"
    return str(value)


def _search(fn, delta: SimplicialComplex) -> bool | None:
    # shelling and peeling searches are capped; report n/a past the cap or on non-pure input
    if not is_pure(delta) or len(delta.facets) > MAX_SEARCH_FACETS:
        return None
    return fn(delta)


# commands -------------------------------------------------------------------


def cmd_info(args: argparse.Namespace, out: _Out) -> int:
    doc = _read(args.file)
    delta = doc.to_complex()
    rep = invariant_report(delta, args.field)
    s = generating_degree(delta)
    rep = replace(
        rep,
        cohen_macaulay=is_cohen_macaulay(delta, args.field),
        gorenstein=is_gorenstein(delta, args.field),
        two_cm=is_2cm(delta, args.field),
        generating_degree=s,
        linear_resolution=None if s is None else has_linear_resolution(delta, args.field),
    )
    out.put("name", doc.name)
    for key, value in asdict(rep).items():
        if key == "field":
            continue
        if key == "betti":
            out.put(key, list(value), "betti = " + " ".join(map(str, value)))
        else:
            out.put(key, value)
    return EXIT_OK


def cmd_betti(args: argparse.Namespace, out: _Out) -> int:
    table = betti_table(_read(args.file).to_complex(), args.field)
    out.put("entries", [[i, j, v] for (i, j), v in sorted(table.entries.items())], table.format())
    out.put("totals", list(table.totals()))
    return EXIT_OK


def cmd_type(args: argparse.Namespace, out: _Out) -> int:
    out.put("type", modified_type(_read(args.file).to_complex(), args.field))
    return EXIT_OK


def cmd_td(args: argparse.Namespace, out: _Out) -> int:
    out.put("td", type_defect(_read(args.file).to_complex(), args.field))
    return EXIT_OK


def cmd_cm(args: argparse.Namespace, out: _Out) -> int:
    delta = _read(args.file).to_complex()
    out.put("cohen_macaulay", is_cohen_macaulay(delta, args.field))
    out.put("two_cm", is_2cm(delta, args.field))
    out.put("shellable", _search(is_shellable, delta))
    out.put("facet_constructible", _search(is_facet_constructible, delta))
    return EXIT_OK


def cmd_gorenstein(args: argparse.Namespace, out: _Out) -> int:
    out.put("gorenstein", is_gorenstein(_read(args.file).to_complex(), args.field))
    return EXIT_OK


def cmd_chordal(args: argparse.Namespace, out: _Out) -> int:
    doc = _read(args.file)
    g = doc.to_complex()
    order = perfect_elimination_order(g)
    out.put("chordal", order is not None)
    if order is not None:
        out.put("elimination_order", [doc.labels[v] for v in order],
                "elimination order = " + " ".join(doc.labels[v] for v in order))
    else:
        W = td_witness(g, args.field)
        out.put("td_witness", None if W is None else _labels(doc, W),
                "td < 0 on W = " + " ".join(_labels(doc, W or 0)))
    return EXIT_OK


def cmd_treeish(args: argparse.Namespace, out: _Out) -> int:
    delta = _read(args.file).to_complex()
    if dimension(delta) <= 1:
        out.put("kind", "graph")
        out.put("treeish", is_treeish_graph(delta))
        out.put("by_construction", treeish_by_construction(delta))
        out.put("by_td", treeish_by_td(delta, args.field))
        out.put("chordal", is_chordal(delta))
    else:
        out.put("kind", "complex")
        out.put("treeish", is_treeish_complex(delta, args.max_facets))
        out.put("td", type_defect(delta, args.field))
    return EXIT_OK


def cmd_dual(args: argparse.Namespace, out: _Out) -> int:
    doc = _read(args.file)
    dual = from_complex(alexander_dual(doc.to_complex()), f"{doc.name}-dual", doc.labels)
    if out.structured:
        out.put("name", dual.name)
        out.put("vertices", list(dual.labels))
        out.put("facets", [list(f) for f in dual.facets])
    else:
        out.say(emit_complex(dual).rstrip("\n"))
    return EXIT_OK


def cmd_glue(args: argparse.Namespace, out: _Out) -> int:
    first, second = _read(args.first), _read(args.second)
    E1, E2 = _face(first, args.face1), _face(second, args.face2)
    d1, d2 = first.to_complex(), second.to_complex()
    rep = verify_glue_type(d1, E1, d2, E2, args.field, require_cm=not args.raw)
    for key, value in asdict(rep).items():
        out.put(key, list(value) if isinstance(value, tuple) else value)
    for key in ("type_rhs", "td_rhs", "type_holds", "td_holds", "additive"):
        out.put(key, getattr(rep, key))
    if args.output:
        where = glue_map(d1.n, E1, d2.n, E2)
        labels = list(first.labels) + [None] * (d1.n + d2.n - E1.bit_count() - d1.n)
        for v, w in enumerate(where):
            if labels[w] is None:
                labels[w] = f"{second.labels[v]}'"
        glued = from_complex(glue(d1, E1, d2, E2), f"{first.name}+{second.name}", labels)
        Path(args.output).write_text(emit_complex(glued), encoding="utf-8")
        out.put("output", args.output)
    return EXIT_OK if rep.type_holds and rep.td_holds else EXIT_VIOLATION


def cmd_linres(args: argparse.Namespace, out: _Out) -> int:
    delta = _read(args.file).to_complex()
    linear = generating_degree(delta) is not None and has_linear_resolution(delta, args.field)
    out.put("linear_resolution", linear)
    if not linear:
        return EXIT_OK
    rep = classify_equality(delta, args.field)
    out.put("s", rep.s)
    out.put("c", rep.c)
    out.put("bounds", [asdict(r) for r in rep.bounds],
            "bounds (j: actual >= bound) = " + ", ".join(f"{r.j}: {r.actual} >= {r.bound}" for r in rep.bounds))
    out.put("equality", rep.equality_all)
    out.put("cohen_macaulay", rep.cohen_macaulay)
    out.put("facet_count_condition", rep.facet_count_condition)
    out.put("nonface_count_condition", rep.nonface_count_condition)
    er = eagon_reiner_report(delta, args.field)
    out.put("dual_cohen_macaulay", er.dual_cohen_macaulay)
    hp = h_vector_prediction(delta, args.field)
    out.put("h", list(hp.h), "h = " + " ".join(map(str, hp.h)))
    out.put("h_s", hp.h_s)
    holds = rep.consistent and er.holds and hp.holds
    out.put("consistent", holds)
    return EXIT_OK if holds else EXIT_VIOLATION


def cmd_bounds(args: argparse.Namespace, out: _Out) -> int:
    rows = [betti_lower_bound(args.s, args.c, j) for j in range(1, args.c + 1)]
    out.put("s", args.s)
    out.put("c", args.c)
    out.put("bounds", rows, "bounds = " + " ".join(map(str, rows)))
    return EXIT_OK


def _write_reproducers(result: SuiteResult, directory: Path, limit: int) -> list[str]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for k, v in enumerate(result.violations[:limit]):
        for role, delta in v.complexes:
            path = directory / f"{result.name}-{k:03d}-{role}.txt"
            header = [f"# suite {result.name} v{result.version}, field {result.field.name}, params {result.params}",
                      f"# {v.message}"]
            body = emit_complex(from_complex(delta, f"{result.name}-{k}-{role}"))
            path.write_text("\n".join(header) + "\n" + body, encoding="utf-8")
            paths.append(str(path))
    return paths


def cmd_sweep(args: argparse.Namespace, out: _Out) -> int:
    result = run_suite(args.suite, args.field, args.max_vertices, args.seed, args.jobs)
    out.put("suite", result.name)
    out.put("version", result.version)
    out.put("seed", args.seed)
    out.put("params", {k: list(v) if isinstance(v, tuple) else v for k, v in result.params.items()})
    out.put("checked", result.checked)
    out.put("violations", len(result.violations))
    out.put("stats", result.stats)
    for key, value in result.stats.items():
        out.say(f"  {key} = {value}")
    if result.passed:
        out.say("PASS")
        return EXIT_OK
    out.put("messages", [v.message for v in result.violations[: args.limit]])
    for v in result.violations[: args.limit]:
        out.say(f"violation: {v.message}")
    paths = _write_reproducers(result, Path(args.reproducer_dir), args.limit)
    out.put("reproducers", paths)
    for p in paths:
        out.say(f"reproducer: {p}")
    out.say("FAIL")
    return EXIT_VIOLATION


# parser ---------------------------------------------------------------------


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except TypeDefectError as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field, default=QQ, help="q (rationals, default) or gf<p>")
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = _Parser(prog="typedefect", description="Type defect of Stanley-Reisner ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help_text: str, *files: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        for f in files:
            p.add_argument(f, help="complex document, or - for stdin")
        p.set_defaults(handler=fn)
        return p

    add("info", cmd_info, "all invariants of a complex", "file")
    add("betti", cmd_betti, "graded Betti table of S/I", "file")
    add("type", cmd_type, "modified type", "file")
    add("td", cmd_td, "type defect", "file")
    add("cm", cmd_cm, "Cohen-Macaulay, 2-CM, shellable, facet constructible", "file")
    add("gorenstein", cmd_gorenstein, "Gorenstein test", "file")
    add("chordal", cmd_chordal, "chordality with a certificate (graphs only)", "file")
    p = add("treeish", cmd_treeish, "treeish test for a graph or a pure complex", "file")
    p.add_argument("--max-facets", type=int, default=MAX_SEARCH_FACETS)
    add("dual", cmd_dual, "Alexander dual, as a document", "file")
    p = add("glue", cmd_glue, "glue two complexes along faces and check the type identities", "first", "second")
    p.add_argument("--face1", required=True, help="labels of the face in the first complex")
    p.add_argument("--face2", required=True, help="labels of the face in the second complex")
    p.add_argument("--raw", action="store_true", help="skip the Cohen-Macaulay requirement")
    p.add_argument("--output", help="write the glued complex here")
    add("linres", cmd_linres, "lower bounds and equality conditions for a linear resolution", "file")
    p = add("bounds", cmd_bounds, "Betti lower bounds for given s and c")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p = add("sweep", cmd_sweep, "run a named verification suite")
    p.add_argument("--suite", required=True, choices=(*SUITES, "fields"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--reproducer-dir", default=".")
    p.add_argument("--limit", type=int, default=20, help="violations to report and write")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = _Out(args)
        code = args.handler(args, out)
    except _Usage as err:
        print(err, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as err:  # --help
        return int(err.code or 0)
    except (TypeDefectError, OSError) as err:
        print(f"typedefect: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    out.emit()
    return code


if __name__ == "__main__":
    sys.exit(main())
