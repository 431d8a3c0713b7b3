"""Named, versioned verification suites.

Each suite walks a deterministic corpus (exhaustive where feasible, seeded
random otherwise), checks a family of identities, and returns every
violation together with the complexes that reproduce it.  Work is split
into independent chunks so ``jobs > 1`` can farm chunks out to processes;
chunk results are merged in a fixed order, so output does not depend on
``jobs``.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from typedefect.betti import (
    betti_table,
    dual_type,
    graph_type,
    modified_type,
    total_betti,
    type_defect,
)
from typedefect.cm import (
    MAX_SEARCH_FACETS,
    is_2cm,
    is_cohen_macaulay,
    is_facet_constructible,
    is_gorenstein,
    is_shellable,
)
from typedefect.complexes import (
    SimplicialComplex,
    clique_complex,
    codimension,
    complete_graph,
    cycle_graph,
    dimension,
    graph,
    induced,
    is_full_simplex,
    is_pure,
    is_strongly_facet_connected,
    make_complex,
    members,
    simplex,
    simplex_boundary,
    vset,
)
from typedefect.errors import PreconditionError
from typedefect.gluing import (
    build_treeish_complex,
    glue,
    is_treeish_complex,
    random_treeish_moves,
    treeish_steps,
    verify_glue_type,
)
from typedefect.graphs import (
    chordality_via_td,
    is_chordal,
    is_treeish_graph,
    treeish_by_construction,
    treeish_by_td,
)
from typedefect.homology import GF_DEFAULT, QQ, FieldSpec, reduced_homology
from typedefect.linres import (
    classify_equality,
    eagon_reiner_report,
    h_vector_prediction,
    hilbert_identity,
    linear_resolution_classes,
    seven_condition_check,
)
from typedefect.oracle import (
    MAX_ENUMERATION_VERTICES,
    all_graphs,
    enumerate_complexes,
    koszul_betti_table,
    koszul_tor,
    random_complex,
    random_graph,
    random_tree,
)


@dataclass(frozen=True)
class Violation:
    suite: str
    message: str
    complexes: tuple[tuple[str, SimplicialComplex], ...] = ()


@dataclass
class SuiteResult:
    name: str
    version: int
    field: FieldSpec
    params: dict[str, object]
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    stats: dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class _Chunk:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    stats: Counter[str] = field(default_factory=Counter)

    def fail(self, suite: str, message: str, *complexes: tuple[str, SimplicialComplex]) -> None:
        self.violations.append(Violation(suite, message, tuple(complexes)))

    def expect(self, ok: bool, suite: str, message: str, *complexes: tuple[str, SimplicialComplex]) -> None:
        if not ok:
            self.fail(suite, message, *complexes)


def _run_chunks(worker: Callable[..., _Chunk], tasks: list[tuple], jobs: int) -> list[_Chunk]:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, *zip(*tasks)))
    return [worker(*t) for t in tasks]


def _merge(result: SuiteResult, chunks: Iterable[_Chunk]) -> SuiteResult:
    stats: Counter[str] = Counter()
    for ch in chunks:
        result.checked += ch.checked
        result.violations.extend(ch.violations)
        stats.update(ch.stats)
    result.stats.update(sorted(stats.items()))
    return result


def _random_complex_stream(count: int, seed: int, sizes: tuple[int, ...]) -> Iterable[SimplicialComplex]:
    rng = random.Random(seed)
    for k in range(count):
        n = sizes[k % len(sizes)]
        yield random_complex(
            n,
            density=rng.choice((0.3, 0.4, 0.5, 0.6, 0.7)),
            seed=rng.randrange(2**32),
            max_facets=rng.randint(1, 2 * n),
        )


# oracle ---------------------------------------------------------------------


def _oracle_chunk(field: FieldSpec, source: tuple) -> _Chunk:
    out = _Chunk()
    if source[0] == "exhaustive":
        stream: Iterable[SimplicialComplex] = enumerate_complexes(source[1])
    else:
        _, count, seed = source
        stream = _random_complex_stream(count, seed, (6, 7))
    for delta in stream:
        out.checked += 1
        hochster = betti_table(delta, field).entries
        koszul = koszul_betti_table(delta, field)
        out.expect(hochster == koszul, "oracle", f"Hochster {hochster} != Koszul {koszul}", ("delta", delta))
    return out


def suite_oracle(field: FieldSpec, max_vertices: int, seed: int, jobs: int, random_count: int = 1000) -> list[_Chunk]:
    tasks: list[tuple] = [(field, ("exhaustive", n)) for n in range(1, min(max_vertices, 5) + 1)]
    step = 100
    for start in range(0, random_count, step):
        tasks.append((field, ("random", min(step, random_count - start), seed * 1_000_003 + start)))
    return _run_chunks(_oracle_chunk, tasks, jobs)


# fixtures -------------------------------------------------------------------


def suite_fixtures(field: FieldSpec, max_vertices: int, seed: int, jobs: int, tree_count: int = 200) -> list[_Chunk]:
    out = _Chunk()
    name = "fixtures"

    def check(ok: bool, message: str, delta: SimplicialComplex) -> None:
        out.checked += 1
        out.expect(ok, name, message, ("delta", delta))

    edges = graph(4, [(0, 1), (2, 3)])
    check(modified_type(edges, field) == 4, "type of two disjoint edges should be 4", edges)
    for n in range(3, 9):
        kn = complete_graph(n)
        check(type_defect(kn, field) == comb(n, 2) - 2 * n + 3, f"td(K_{n}) should be C({n},2) - {2 * n} + 3", kn)
    rng = random.Random(seed)
    for _ in range(tree_count):
        tree = random_tree(rng.randint(1, 16), rng.randrange(2**32))
        check(type_defect(tree, field) == 0, "td of a tree should be 0", tree)
    for m in range(4, 11):
        cyc = cycle_graph(m)
        check(type_defect(cyc, field) == 3 - m, f"td(C_{m}) should be {3 - m}", cyc)
    for d in range(2, 7):
        s = simplex(d)
        check(modified_type(s, field) == 0 and type_defect(s, field) == 0, "a simplex has type = td = 0", s)
        b = simplex_boundary(d + 1)
        check(modified_type(b, field) == 1 and type_defect(b, field) == 0, "a simplex boundary has type 1, td 0", b)
    return [out]


# chordality -----------------------------------------------------------------


def _chordal_chunk(field: FieldSpec, source: tuple) -> _Chunk:
    out = _Chunk()
    if source[0] == "exhaustive":
        stream: Iterable[SimplicialComplex] = all_graphs(source[1])
    else:
        _, count, seed = source
        rng = random.Random(seed)
        stream = (random_graph(rng.choice((7, 8)), rng.choice((0.3, 0.5, 0.7)), rng.randrange(2**32)) for _ in range(count))
    for g in stream:
        out.checked += 1
        a = is_chordal(g)
        b = chordality_via_td(g, field)
        c = chordality_via_td(g, field, connected_only=True)
        out.stats["chordal"] += a
        out.expect(a == b == c, "chordal-td", f"is_chordal={a}, td>=0 on all W={b}, on connected W={c}", ("graph", g))
        closed = graph_type(g)
        out.expect(closed == modified_type(g, field), "chordal-td", f"closed-form graph type {closed} differs", ("graph", g))
    return out


def suite_chordal_td(field: FieldSpec, max_vertices: int, seed: int, jobs: int, random_count: int = 500) -> list[_Chunk]:
    tasks: list[tuple] = [(field, ("exhaustive", n)) for n in range(1, max_vertices + 1)]
    step = 100
    for start in range(0, random_count, step):
        tasks.append((field, ("random", min(step, random_count - start), seed * 1_000_003 + start)))
    return _run_chunks(_chordal_chunk, tasks, jobs)


def _treeish_graph_chunk(field: FieldSpec, n: int) -> _Chunk:
    out = _Chunk()
    for g in all_graphs(n):
        out.checked += 1
        a = is_treeish_graph(g)
        b = treeish_by_construction(g)
        c = treeish_by_td(g, field)
        out.stats["treeish"] += a
        out.expect(a == b == c, "treeish-graph", f"criterion(3)={a}, construction={b}, td={c}", ("graph", g))
        out.expect(not a or is_chordal(g), "treeish-graph", "treeish graph is not chordal", ("graph", g))
    return out


def suite_treeish_graph(field: FieldSpec, max_vertices: int, seed: int, jobs: int) -> list[_Chunk]:
    return _run_chunks(_treeish_graph_chunk, [(field, n) for n in range(1, max_vertices + 1)], jobs)


def _flag_chunk(field: FieldSpec, n: int) -> _Chunk:
    out = _Chunk()
    for g in all_graphs(n):
        out.checked += 1
        sigma = clique_complex(g)
        ok = all(type_defect(induced(sigma, W), field) >= 0 for W in range(1 << n))
        out.expect(ok == is_chordal(g), "flag-td", f"chordal={is_chordal(g)} but induced td>=0 is {ok}", ("graph", g))
    return out


def suite_flag_td(field: FieldSpec, max_vertices: int, seed: int, jobs: int) -> list[_Chunk]:
    return _run_chunks(_flag_chunk, [(field, n) for n in range(1, max_vertices + 1)], jobs)


# gluing ---------------------------------------------------------------------


def cm_pool(d: int, max_vertices: int, seed: int, size: int = 40, field: FieldSpec = QQ) -> list[SimplicialComplex]:
    """Distinct Cohen-Macaulay complexes with facets of size ``d``, no unused
    vertices, at most ``max_vertices`` vertices; deterministic in ``seed``.
    """
    pool: list[SimplicialComplex] = []
    seen: set[SimplicialComplex] = set()

    def offer(delta: SimplicialComplex) -> None:
        if delta in seen or delta.n > max_vertices or len(pool) >= size:
            return
        if delta.used_vertices == delta.ground and dimension(delta) + 1 == d and is_cohen_macaulay(delta, field):
            seen.add(delta)
            pool.append(delta)

    offer(simplex(d))
    offer(simplex_boundary(d + 1))
    if d == 1:
        for n in range(2, max_vertices + 1):
            offer(make_complex(n, [1 << v for v in range(n)]))
    rng = random.Random(seed)
    for k in range(200):
        moves = random_treeish_moves(d, rng.randint(1, 3), rng.randrange(2**32), max_vertices)
        offer(build_treeish_complex(d, moves))
    for _ in range(20000):
        if len(pool) >= size:
            break
        n = rng.randint(d, max_vertices)
        offer(random_complex(n, rng.choice((0.5, 0.6, 0.7, 0.8)), rng.randrange(2**32), max_facets=rng.randint(1, 3 * n)))
    return pool


def extra_vertex_example(field: FieldSpec = QQ) -> dict[str, int]:
    """Two disjoint edges with and without a fifth, unused vertex."""
    edges = graph(4, [(0, 1), (2, 3)])
    padded = make_complex(5, edges.facets)
    return {
        "type_4": modified_type(edges, field),
        "tor3_5": total_betti(padded, 3, field),
        "tor3_5_koszul": sum(koszul_tor(padded, field, 3, j) for j in range(6)),
        "codim_5": codimension(padded),
    }


def suite_glue(
    field: FieldSpec, max_vertices: int, seed: int, jobs: int, count: int = 600, dims: tuple[int, ...] = (2, 3, 4)
) -> list[_Chunk]:
    out = _Chunk()
    pools = {d: cm_pool(d, max_vertices, seed + d, field=field) for d in dims}
    rng = random.Random(seed)
    coverage: Counter[tuple[int, int]] = Counter()
    for t in range(count):
        d = dims[t % len(dims)]
        ell = 1 + (t // len(dims)) % d
        a = rng.choice(pools[d])
        b = rng.choice(pools[d])
        E1 = rng.choice(a.faces_by_size[ell])
        E2 = rng.choice(b.faces_by_size[ell])
        report = verify_glue_type(a, E1, b, E2, field)
        out.checked += 1
        coverage[(d, ell)] += 1
        pieces = (("first", a), ("second", b))
        out.expect(report.type_holds, "glue", f"type identity fails: {report}", *pieces)
        out.expect(report.td_holds, "glue", f"td identity fails: {report}", *pieces)
        if ell >= d - 1:
            out.stats["additive_cases"] += 1
            out.expect(report.additive, "glue", f"td not additive with ell >= d-1: {report}", *pieces)
    for d in dims:
        out.stats[f"pool_d{d}"] = len(pools[d])
        for ell in range(1, d + 1):
            out.expect(coverage[(d, ell)] > 0, "glue", f"no pair with d={d}, ell={ell}")
    obs = extra_vertex_example(field)
    out.checked += 1
    out.stats["extra_vertex_tor3"] = obs["tor3_5"]
    out.expect(obs["type_4"] == 4 and obs["tor3_5"] == 5 == obs["tor3_5_koszul"] and obs["codim_5"] == 3,
               "glue", f"extra-vertex example gives {obs}")
    # the raw identity breaks without Cohen-Macaulayness
    edges = graph(4, [(0, 1), (2, 3)])
    try:
        verify_glue_type(edges, 1, graph(2, [(0, 1)]), 1, field)
        out.fail("glue", "non-CM input was not rejected")
    except PreconditionError as err:
        out.expect(err.hypothesis == "cohen-macaulay", "glue", f"wrong hypothesis reported: {err.hypothesis}")
    raw = verify_glue_type(edges, 1, graph(2, [(0, 1)]), 1, field, require_cm=False)
    out.stats["raw_noncm_type"] = raw.type_glued
    out.stats["raw_noncm_rhs"] = raw.type_rhs
    out.expect(not raw.type_holds, "glue", f"raw identity unexpectedly holds without CM: {raw}")
    return [out]


# td <= 0 implies CM ---------------------------------------------------------


def _td_cm_chunk(field: FieldSpec, source: tuple) -> _Chunk:
    out = _Chunk()
    name = "td-cm"
    if source[0] == "exhaustive":
        stream: Iterable[SimplicialComplex] = enumerate_complexes(source[1])
    else:
        _, count, seed = source
        stream = _random_complex_stream(count, seed, (6, 7))
    for delta in stream:
        out.checked += 1
        pair = ("delta", delta)
        td = type_defect(delta, field)
        cm = is_cohen_macaulay(delta, field)
        out.stats["td_nonpositive"] += td <= 0
        out.stats["cm"] += cm
        out.expect(td > 0 or cm, name, f"td = {td} <= 0 but not Cohen-Macaulay", pair)
        out.expect(modified_type(delta, field) >= 0, name, "negative modified type", pair)
        c = codimension(delta)
        # "simplex" here includes a simplex sitting on part of the ground set
        lone = len(delta.facets) == 1
        out.expect((betti_table(delta, field)[c, c] != 0) == lone, name, "b_{c,c} vs simplex", pair)
        full = delta.used_vertices == delta.ground
        if not is_full_simplex(delta):
            out.expect(modified_type(delta, field) == dual_type(delta, field), name, "dual-side type differs", pair)
        two = is_2cm(delta, field)
        out.expect(not two or cm, name, "2-CM but not CM", pair)
        if two and full:
            d = dimension(delta) + 1
            top = reduced_homology(delta, field)[d - 1]
            out.expect(modified_type(delta, field) == top, name, "2-CM type differs from top homology", pair)
            if top == 1 and td == 0:
                out.expect(delta == simplex_boundary(delta.n), name, "2-CM sphere with td 0 is not a simplex boundary", pair)
        if full and is_gorenstein(delta, field):
            out.expect((td == 0) == (c <= 1), name, "Gorenstein: td = 0 should mean codimension at most 1", pair)
            if td == 0 and c == 1 and delta != simplex_boundary(delta.n):
                out.stats["gorenstein_td0_cones"] += 1
        if is_pure(delta) and len(delta.facets) <= MAX_SEARCH_FACETS:
            sh = is_shellable(delta)
            fc = is_facet_constructible(delta)
            out.expect(not sh or cm, name, "shellable but not CM", pair)
            out.expect(not fc or sh, name, "facet constructible but not shellable", pair)
    return out


def suite_td_cm(field: FieldSpec, max_vertices: int, seed: int, jobs: int, random_count: int = 500) -> list[_Chunk]:
    tasks: list[tuple] = [(field, ("exhaustive", n)) for n in range(1, min(max_vertices, 5) + 1)]
    step = 100
    for start in range(0, random_count, step):
        tasks.append((field, ("random", min(step, random_count - start), seed * 1_000_003 + start)))
    chunks = _run_chunks(_td_cm_chunk, tasks, jobs)
    witness = _Chunk(checked=1)
    k4 = complete_graph(4)
    witness.expect(is_cohen_macaulay(k4, field) and type_defect(k4, field) == 1, "td-cm",
                   "K_4 should be CM with td 1", ("K4", k4))
    return [*chunks, witness]


# linear resolutions ---------------------------------------------------------


def _linres_chunk(field: FieldSpec, n: int) -> _Chunk:
    out = _Chunk()
    name = "linres"
    for delta, orbit in linear_resolution_classes(n, field):
        out.checked += 1
        out.stats["labeled"] += orbit
        pair = ("delta", delta)
        rep = classify_equality(delta, field)
        out.stats[f"s{rep.s}"] += orbit
        out.stats["cm"] += orbit * rep.cohen_macaulay
        out.expect(rep.bounds_hold, name, f"bound violated: {rep.bounds}", pair)
        out.expect(len(set(rep.conditions)) == 1, name, f"equality conditions disagree: {rep}", pair)
        out.expect(rep.equality_some == rep.equality_all, name, "equality at some j but not all", pair)
        # the quadratic-generator bound applies for every s
        table = betti_table(delta, field)
        flat = [(table.total(j), j * comb(rep.c + 1, j + 1)) for j in range(1, rep.c + 1)]
        out.expect(all(a >= b for a, b in flat), name, f"b_j below j*C(c+1, j+1): {flat}", pair)
        skeleton = make_complex(delta.n, [f for f in delta.faces if f.bit_count() <= 2])
        if rep.s == 2:
            out.expect(all(r.bound == r.j * comb(rep.c + 1, r.j + 1) for r in rep.bounds), name, "s=2 bound form", pair)
            out.expect(clique_complex(skeleton) == delta and is_chordal(skeleton), name,
                       "s=2 but not a chordal clique complex", pair)
        chordal_tree = (
            rep.s == 2
            and len(delta.facets) == rep.c + 1
            and all(f.bit_count() == delta.n - rep.c for f in delta.facets)
            and clique_complex(skeleton) == delta
            and is_chordal(skeleton)
        )
        flat_equal = any(a == b for a, b in flat)
        out.expect(flat_equal == (chordal_tree or (rep.c == 1 and rep.cohen_macaulay)), name,
                   "equality in j*C(c+1, j+1) vs chordal clique complex or codimension-one CM", pair)
        if flat_equal and not chordal_tree:
            out.stats["flat_equal_not_chordal"] += orbit
        td = type_defect(delta, field)
        out.expect(td >= 0, name, f"td = {td} < 0 with linear resolution", pair)
        er = eagon_reiner_report(delta, field)
        out.expect(er.holds, name, f"Eagon-Reiner fails: {er}", pair)
        hp = h_vector_prediction(delta, field)
        out.expect(hp.holds, name, f"h-vector prediction fails: {hp}", pair)
        out.expect(hilbert_identity(delta, field), name, "Hilbert series identity fails", pair)
        tree = is_pure(delta) and len(delta.facets) <= MAX_SEARCH_FACETS and is_facet_constructible(delta)
        # codimension-one CM complexes (a simplex boundary joined with a simplex) are the only extra case
        out.expect((td == 0) == (tree or (rep.c == 1 and rep.cohen_macaulay)), name,
                   "td = 0 vs tree of simplices or codimension-one CM", pair)
        if td == 0 and not tree:
            out.stats["td0_not_tree"] += orbit
    return out


def _eagon_reiner_chunk(field: FieldSpec, n: int) -> _Chunk:
    out = _Chunk()
    for delta in enumerate_complexes(n):
        if is_full_simplex(delta):
            continue
        out.checked += 1
        er = eagon_reiner_report(delta, field)
        out.stats["linear"] += er.linear
        out.expect(er.holds, "linres", f"Eagon-Reiner fails: {er}", ("delta", delta))
    return out


def _seven_chunk(field: FieldSpec, n: int) -> _Chunk:
    out = _Chunk()
    for g in all_graphs(n):
        if not is_chordal(g):
            continue
        out.checked += 1
        rep = seven_condition_check(g, field)
        core = (rep.facets_condition, rep.edges_condition, rep.cohen_macaulay, rep.facet_constructible, rep.shellable)
        out.stats["chordal_graphs"] += 1
        out.stats["h2_as_printed_agrees"] += rep.h2_nonnegative == rep.cohen_macaulay
        out.expect(len(set(core)) == 1, "linres", f"chordal clique complex conditions disagree: {rep}", ("graph", g))
        out.expect(rep.h2_nonnegative == rep.cohen_macaulay, "linres", f"h_2 >= 0 disagrees with CM: {rep}", ("graph", g))
    return out


def suite_linres(field: FieldSpec, max_vertices: int, seed: int, jobs: int) -> list[_Chunk]:
    tasks = [(field, n) for n in range(1, max_vertices + 1)]
    er_tasks = [(field, n) for n in range(1, min(max_vertices, MAX_ENUMERATION_VERTICES) + 1)]
    return (
        _run_chunks(_linres_chunk, tasks, jobs)
        + _run_chunks(_eagon_reiner_chunk, er_tasks, jobs)
        + _run_chunks(_seven_chunk, tasks, jobs)
    )


# treeish complexes ----------------------------------------------------------

HEREDITY_EXAMPLE = make_complex(6, [vset((0, 1, 2)), vset((1, 2, 3)), vset((2, 3, 4)), vset((2, 4, 5))])
HEREDITY_WINDOW = vset((0, 1, 2, 4, 5))


def _treeish_complex_chunk(field: FieldSpec, seeds: tuple[int, ...], max_vertices: int) -> _Chunk:
    out = _Chunk()
    name = "treeish-complex"
    for seed in seeds:
        rng = random.Random(seed)
        d = 2 + seed % 3
        moves = random_treeish_moves(d, rng.randint(1, 8), rng.randrange(2**32), max_vertices)
        steps = list(treeish_steps(d, moves))
        final = steps[-1]
        out.checked += 1
        out.stats["steps"] += len(steps)
        for k, step in enumerate(steps):
            out.expect(type_defect(step, field) == 0, name, f"td != 0 after move {k} of {moves}", ("step", step))
        out.expect(is_treeish_complex(final, 64), name, f"recognizer rejects a build {moves}", ("built", final))
        for W in range(1, 1 << final.n):
            sub = induced(final, W)
            if not (is_pure(sub) and is_strongly_facet_connected(sub)):
                continue
            out.stats["heredity_subcomplexes"] += 1
            ok = is_treeish_complex(sub, 64) and type_defect(sub, field) == 0
            out.expect(ok, name, f"heredity fails on W={members(W)} of {moves}", ("built", final), ("induced", sub))
    return out


def suite_treeish_complex(
    field: FieldSpec, max_vertices: int, seed: int, jobs: int, count: int = 200
) -> list[_Chunk]:
    base = seed * 1_000_003
    tasks = [(field, tuple(range(base + s, base + min(s + 25, count))), max_vertices) for s in range(0, count, 25)]
    chunks = _run_chunks(_treeish_complex_chunk, tasks, jobs)
    ex = _Chunk(checked=1)
    sub = induced(HEREDITY_EXAMPLE, HEREDITY_WINDOW)
    ex.stats["counterexample_td"] = type_defect(sub, field)
    ex.expect(is_treeish_complex(HEREDITY_EXAMPLE) and type_defect(HEREDITY_EXAMPLE, field) == 0,
              "treeish-complex", "the 4-facet example should be treeish", ("example", HEREDITY_EXAMPLE))
    ex.expect(not is_strongly_facet_connected(sub) and type_defect(sub, field) != 0 and sub.facets and
              dimension(sub) == 2, "treeish-complex", "the induced window should be pure-looking, not strongly "
              "facet-connected, and have td != 0", ("induced", sub))
    return [*chunks, ex]


# registry -------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    version: int
    runner: Callable[..., list[_Chunk]]
    default_max_vertices: int
    description: str


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("oracle", 1, suite_oracle, 5, "Hochster table equals Koszul Tor: exhaustive corpus plus random 6-7 vertex complexes"),
        Suite("fixtures", 1, suite_fixtures, 16, "exact values for edges, K_n, trees, cycles, simplices and their boundaries"),
        Suite("chordal-td", 1, suite_chordal_td, 6, "chordal iff td >= 0 on all (connected) induced subgraphs"),
        Suite("treeish-graph", 1, suite_treeish_graph, 6, "three treeish-graph predicates agree"),
        Suite("flag-td", 1, suite_flag_td, 6, "chordal iff every induced subcomplex of the clique complex has td >= 0"),
        Suite("glue", 1, suite_glue, 6, "gluing identities on Cohen-Macaulay pairs and the extra-vertex example"),
        Suite("td-cm", 1, suite_td_cm, 5, "td <= 0 implies CM, with the classifier implications"),
        Suite("linres", 1, suite_linres, 6, "bounds, equality classification, Eagon-Reiner and h-vectors for linear resolutions"),
        Suite("treeish-complex", 1, suite_treeish_complex, 10, "random treeish builds keep td = 0; heredity; the 4-facet example"),
    )
}

ACCEPTANCE_ORDER = ("oracle", "fixtures", "chordal-td", "treeish-graph", "glue", "td-cm", "linres", "treeish-complex")


def run_suite(
    name: str,
    field: FieldSpec = QQ,
    max_vertices: int | None = None,
    seed: int = 0,
    jobs: int = 1,
    **options: object,
) -> SuiteResult:
    if name == "fields":
        return run_field_cross_check(max_vertices=max_vertices or 5, seed=seed, jobs=jobs)
    suite = SUITES[name]
    mv = suite.default_max_vertices if max_vertices is None else max_vertices
    params = {"max_vertices": mv, "seed": seed, **options}
    result = SuiteResult(suite.name, suite.version, field, params)
    return _merge(result, suite.runner(field, mv, seed, jobs, **options))


# options that shrink each suite to the small exhaustive corpus
SMALL_CORPUS_OPTIONS: dict[str, dict[str, object]] = {
    "oracle": {"random_count": 0},
    "fixtures": {},
    "chordal-td": {"random_count": 0},
    "treeish-graph": {},
    "glue": {"count": 300},
    "td-cm": {"random_count": 0},
    "linres": {},
    "treeish-complex": {"count": 60},
}


def run_field_cross_check(max_vertices: int = 5, seed: int = 0, jobs: int = 1, prime_field: FieldSpec = GF_DEFAULT) -> SuiteResult:
    """Every complex on at most ``max_vertices`` vertices gets the same Betti
    table and CM verdict over both fields, and each acceptance suite, cut
    down to that corpus, passes over both fields with identical statistics.
    """
    result = SuiteResult("fields", 1, prime_field, {"max_vertices": max_vertices, "seed": seed})
    direct = _Chunk()
    for n in range(1, max_vertices + 1):
        for delta in enumerate_complexes(n):
            direct.checked += 1
            same = betti_table(delta, QQ).entries == betti_table(delta, prime_field).entries
            same = same and is_cohen_macaulay(delta, QQ) == is_cohen_macaulay(delta, prime_field)
            direct.expect(same, "fields", "rational and prime-field invariants differ", ("delta", delta))
    _merge(result, [direct])
    for name in ACCEPTANCE_ORDER:
        opts = SMALL_CORPUS_OPTIONS[name]
        mv = SUITES[name].default_max_vertices if name == "fixtures" else max_vertices
        a = run_suite(name, QQ, mv, seed, jobs, **opts)
        b = run_suite(name, prime_field, mv, seed, jobs, **opts)
        result.checked += a.checked + b.checked
        result.stats[f"{name}.checked"] = a.checked
        for r in (a, b):
            for v in r.violations:
                result.violations.append(Violation("fields", f"[{name} over {r.field}] {v.message}", v.complexes))
        if a.checked != b.checked or a.stats != b.stats:
            result.violations.append(Violation("fields", f"[{name}] statistics differ: {a.stats} vs {b.stats}"))
    return result
