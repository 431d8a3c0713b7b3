"""Acceptance run: nine criteria, each at its stated size and tolerance.

Each criterion prints one ``PASS`` or ``FAIL`` line.  Run under pytest, or
directly with ``python3 tests/test_acceptance.py`` for just the summary.
Set ``TYPEDEFECT_JOBS`` to use several processes.
"""

from __future__ import annotations

import os
import sys
import time
from collections.abc import Callable
from dataclasses import dataclass

import pytest

from typedefect.homology import GF_DEFAULT, QQ
from typedefect.sweeps import SuiteResult, run_suite

JOBS = int(os.environ.get("TYPEDEFECT_JOBS", "1"))

# labeled complexes on 1..5 vertices, void excluded
EXHAUSTIVE_5 = 2 + 5 + 19 + 167 + 7580
GRAPHS_UP_TO_6 = sum(2 ** (n * (n - 1) // 2) for n in range(1, 7))


@dataclass
class Outcome:
    ok: bool
    detail: str
    problems: list[str]


def _outcome(result: SuiteResult, checks: list[tuple[bool, str]], detail: str) -> Outcome:
    problems = [v.message for v in result.violations[:5]]
    problems += [msg for ok, msg in checks if not ok]
    return Outcome(not problems, detail, problems)


def criterion_1() -> Outcome:
    start = time.perf_counter()
    r = run_suite("oracle", QQ, 5, seed=0, jobs=JOBS, random_count=1000)
    took = time.perf_counter() - start
    return _outcome(
        r,
        [(r.checked == EXHAUSTIVE_5 + 1000, f"expected {EXHAUSTIVE_5 + 1000} complexes, checked {r.checked}"),
         (took < 600, f"took {took:.0f} s, budget 600 s")],
        f"{r.checked} complexes, Hochster = Koszul, {took:.1f} s",
    )


def criterion_2() -> Outcome:
    r = run_suite("fixtures", QQ, seed=0, tree_count=200)
    return _outcome(r, [(r.checked == 1 + 6 + 200 + 7 + 10, f"checked {r.checked}")], f"{r.checked} exact values")


def criterion_3() -> Outcome:
    start = time.perf_counter()
    r = run_suite("chordal-td", QQ, 6, seed=0, jobs=JOBS, random_count=500)
    took = time.perf_counter() - start
    return _outcome(
        r,
        [(r.checked == GRAPHS_UP_TO_6 + 500, f"checked {r.checked} graphs"), (took < 1800, f"took {took:.0f} s")],
        f"{r.checked} graphs (all {2 ** 15} on 6 vertices), {took:.1f} s",
    )


def criterion_4() -> Outcome:
    r = run_suite("treeish-graph", QQ, 6, jobs=JOBS)
    return _outcome(r, [(r.checked == GRAPHS_UP_TO_6, f"checked {r.checked}")],
                    f"{r.checked} graphs, {r.stats.get('treeish', 0)} treeish")


def criterion_5() -> Outcome:
    r = run_suite("glue", QQ, 6, seed=0, count=600, dims=(2, 3, 4))
    pairs = r.checked - 1
    return _outcome(
        r,
        [(pairs >= 500, f"only {pairs} pairs"),
         (r.stats.get("additive_cases", 0) > 0, "no pair with ell >= d - 1"),
         (r.stats.get("extra_vertex_tor3") == 5, f"Tor_3 = {r.stats.get('extra_vertex_tor3')}")],
        f"{pairs} CM pairs, {r.stats.get('additive_cases')} additive, Tor_3 = {r.stats.get('extra_vertex_tor3')}",
    )


def criterion_6() -> Outcome:
    r = run_suite("td-cm", QQ, 5, seed=0, jobs=JOBS, random_count=500)
    return _outcome(r, [(r.checked == EXHAUSTIVE_5 + 500 + 1, f"checked {r.checked}")],
                    f"{r.checked} complexes incl. K_4 witness (CM, td = 1)")


def criterion_7() -> Outcome:
    r = run_suite("linres", QQ, 6, jobs=JOBS)
    labeled = r.stats.get("labeled", 0)
    return _outcome(r, [(labeled > 0 and r.stats.get("s6") == 1, f"linear corpus incomplete: {r.stats}")],
                    f"{labeled} labeled linear-resolution complexes, plus Eagon-Reiner on the 5-vertex corpus")


def criterion_8() -> Outcome:
    r = run_suite("treeish-complex", QQ, 10, seed=0, jobs=JOBS, count=200)
    return _outcome(
        r,
        [(r.checked == 201, f"checked {r.checked}"), (r.stats.get("counterexample_td", 0) != 0, "window has td 0")],
        f"200 builds, {r.stats.get('steps')} steps, {r.stats.get('heredity_subcomplexes')} induced subcomplexes, "
        f"window td = {r.stats.get('counterexample_td')}",
    )


def criterion_9() -> Outcome:
    r = run_suite("fields", max_vertices=5, seed=0, jobs=JOBS)
    return _outcome(r, [(r.field == GF_DEFAULT, "wrong prime")], f"{r.checked} checks over QQ and {GF_DEFAULT}")


CRITERIA: dict[int, tuple[str, Callable[[], Outcome]]] = {
    1: ("oracle equivalence", criterion_1),
    2: ("exact fixtures", criterion_2),
    3: ("chordality via type defect", criterion_3),
    4: ("treeish graph predicates", criterion_4),
    5: ("gluing identities", criterion_5),
    6: ("td <= 0 implies CM", criterion_6),
    7: ("linear resolution bounds", criterion_7),
    8: ("treeish complexes and heredity", criterion_8),
    9: ("field cross-check", criterion_9),
}


def report(number: int, outcome: Outcome) -> str:
    title = CRITERIA[number][0]
    line = f"{'PASS' if outcome.ok else 'FAIL'} criterion {number}: {title} ({outcome.detail})"
    return "\n".join([line, *(f"    {p}" for p in outcome.problems)])


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    outcome = CRITERIA[number][1]()
    with capsys.disabled():
        print("\n" + report(number, outcome))
    assert outcome.ok, outcome.problems


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        outcome = CRITERIA[number][1]()
        failed += not outcome.ok
        print(report(number, outcome), flush=True)
    sys.exit(1 if failed else 0)
