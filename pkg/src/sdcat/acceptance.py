"""The acceptance checks, shared by the test-suite and ``sdcat selftest``.

Each check returns a CheckResult; a check passes only if its condition
holds and it finishes inside its time budget.
"""
from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from . import graphs, probe
from .fincat import dihedral_group, cyclic_group, is_isomorphism, klein_four, pair_groupoid, poset_interval, zigzag
from .oracle import IsoSearchConfig, automorphism_group, brute_triangle_census, corpus, find_isomorphisms
from .reconstruct import assemble, conservativity_check
from .subdivision import alpha, build_sd, sd_of_functor


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.title}: {self.detail} ({self.seconds:.2f}s / {self.budget:g}s)"


CHECKS: dict[int, tuple[str, float, Callable[[], tuple[bool, str]]]] = {}


def check(number: int, title: str, budget: float):
    def wrap(fn):
        CHECKS[number] = (title, budget, fn)
        return fn
    return wrap


def run(number: int) -> CheckResult:
    title, budget, fn = CHECKS[number]
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    if dt > budget:
        ok, detail = False, detail + f"; over time budget"
    return CheckResult(number, title, ok, detail, dt, budget)


def run_all() -> list[CheckResult]:
    return [run(n) for n in sorted(CHECKS)]


def _edge_labels(G, sd):
    return {f: sd.edge(f) for f in range(G.n_objects, G.n_morphisms)}


def _endo_classes(G):
    for a in G.objects:
        yield a, [f for f in range(G.n_objects, G.n_morphisms) if G.dom[f] == a == G.cod[f]]


@check(1, "incoming counts 2^(m+1)-1 on Sd<=2 D3", 1.0)
def _c1():
    sd = build_sd(dihedral_group(3), 2)
    C = sd.category
    counts = Counter((sd.dim(y), len(C.incoming(y))) for y in C.objects)
    by_dim_ok = all(n == 2 ** (d + 1) - 1 for d, n in counts)
    ok = by_dim_ok and C.n_objects == 31 and C.n_morphisms == 191
    return ok, f"{C.n_objects} objects, {C.n_morphisms} morphisms, (dim, |mt|) histogram {dict(sorted(counts.items()))}"


@check(2, "Aut(Sd[n]) has order (n+1)!", 10.0)
def _c2():
    orders = []
    for n in (1, 2, 3):
        aut = automorphism_group(build_sd(poset_interval(n), "full").category)
        orders.append((aut.order, aut.complete))
    ok = [o for o, _ in orders] == [2, 6, 24] and all(c for _, c in orders)
    return ok, f"orders {[o for o, _ in orders]}"


@check(3, "zigzag: Sd B ≅ Sd B^op but B ≇ B^op", 1.0)
def _c3():
    B, Bop = zigzag(2), zigzag(2, start_forward=False)
    sd_side = find_isomorphisms(build_sd(B, "full").category, build_sd(Bop, "full").category)
    plain = find_isomorphisms(B, Bop)
    ok = len(sd_side) >= 1 and len(plain) == 0 and plain.complete
    return ok, f"{len(sd_side)} isomorphisms of subdivisions, {len(plain)} of the categories (exhaustive={plain.complete})"


@check(4, "equation table: 6 valid assignments, 28 disjoint edges", 1.0)
def _c4():
    table = graphs.equation_subgraph_table(extended=True)
    edges = [e for es in table.values() for e in es]
    disjoint = len(edges) == len(set(edges))
    valid = {graphs.assignment_label(b) for b in graphs.enumerate_valid_assignments()}
    expected = {"FFFF", "TFFF", "FTFF", "FFTF", "FFFT", "FFTT"}
    ok = valid == expected and len(table) == 9 and len(edges) == 28 and disjoint
    return ok, f"{len(valid)} of 16 valid {sorted(valid)}, {len(table)} equations, {len(edges)} edges, disjoint={disjoint}"


@check(5, "count_form equals the Cayley-table census", 60.0)
def _c5():
    triples = mismatches = 0
    for G in corpus().values():
        sd = build_sd(G, 2)
        P = probe.ProbedCategory(sd.category)
        E = _edge_labels(G, sd)
        for _, endos in _endo_classes(G):
            for f, g, h in itertools.product(endos, repeat=3):
                triples += 1
                if probe.count_form(P, E[f], E[g], E[h]) != brute_triangle_census(G, f, g, h):
                    mismatches += 1
    return mismatches == 0, f"{triples} triples, {mismatches} mismatches"


def _hypotheses_hold(G, f, g) -> bool:
    inv, m = G.inverse, G.compose
    return f != g and f != inv(g) and m(f, f) != g and f != m(g, g)


@check(6, "commutativity criterion and even fibers", 30.0)
def _c6():
    pairs = bad = 0
    for G in corpus().values():
        sd = build_sd(G, 2)
        P = probe.ProbedCategory(sd.category)
        E = _edge_labels(G, sd)
        for _, endos in _endo_classes(G):
            for f, g in itertools.product(endos, repeat=2):
                if not _hypotheses_hold(G, f, g):
                    continue
                pairs += 1
                truth = G.compose(f, g) == G.compose(g, f)
                ev = graphs.build_ev_graph(G, f, g)
                sizes = ev.fiber_sizes()
                counts_ok = all(probe.count_form(P, E[f], E[g], E[h]) == sizes.get(h, 0) for h in endos)
                even = all(n % 2 == 0 for n in sizes.values())
                if probe.commutes(P, E[f], E[g]) != truth or even != truth or not counts_ok:
                    bad += 1
    return bad == 0 and pairs > 0, f"{pairs} hypothesis-satisfying pairs, {bad} disagreements"


def composite_case(G, f, g) -> str:
    """Which case of the composite criterion an endomorphism pair falls in."""
    m, inv = G.compose, G.inverse
    f2, g2 = m(f, f), m(g, g)
    if not (f != g and f != inv(g) and f2 != g and f != g2 and f2 != inv(g) and inv(f) != g2):
        return "elementary"
    comm = m(f, g) == m(g, f)
    if f2 == g2:
        return "case1" if G.is_identity(f2) else "case2"
    if G.is_identity(f2) or G.is_identity(g2):
        return "case3"
    if comm:
        return "case4-commuting"
    return "case4-f2=g-2" if f2 == inv(g2) else "case4-other"


@check(7, "composite_pair_set = {fg, gf}", 60.0)
def _c7():
    pairs = bad = 0
    cases = Counter()
    for G in corpus().values():
        sd = build_sd(G, 2)
        P = probe.ProbedCategory(sd.category)
        E = _edge_labels(G, sd)

        def lab(x):
            return probe.IDENTITY if G.is_identity(x) else E[x]

        for f, g in itertools.product(E, repeat=2):
            want = {lab(int(G.comp[a, b])) for a, b in ((f, g), (g, f)) if G.comp[a, b] >= 0}
            if not want:
                continue
            pairs += 1
            if G.dom[f] == G.cod[f] == G.dom[g] == G.cod[g]:
                cases[composite_case(G, f, g)] += 1
            else:
                cases["non-endo"] += 1
            try:
                got = probe.composite_pair_set(P, E[f], E[g])
            except Exception:  # counted as a failure, not swallowed
                got = None
            if got != want:
                bad += 1
    needed = {"case1", "case2", "case3", "case4-commuting", "case4-f2=g-2", "case4-other"}
    ok = bad == 0 and needed <= set(cases)
    return ok, f"{pairs} pairs, {bad} wrong; coverage {dict(sorted(cases.items()))}"


@check(8, "every oracle Psi assembles to an isomorphism", 600.0)
def _c8():
    groups = corpus()
    sds = {name: build_sd(G, 2) for name, G in groups.items()}
    cfg = IsoSearchConfig(result_limit=50)
    total = failures = iso_pairs = 0
    for a, b in itertools.product(groups, repeat=2):
        found = find_isomorphisms(sds[a].category, sds[b].category, cfg)
        iso_pairs += bool(found.functors)
        for Psi in found.functors:
            total += 1
            try:
                ok = is_isomorphism(assemble(Psi, sds[a], sds[b]))
            except Exception:
                ok = False
            failures += not ok
    return failures == 0 and total > 0, f"{len(groups) ** 2} ordered pairs, {iso_pairs} with isomorphisms, {total} Psi, {failures} failures"


@check(9, "conservativity on Aut(D3) and Aut(pair_groupoid(3))", 30.0)
def _c9():
    results = []
    for G in (dihedral_group(3), pair_groupoid(3)):
        aut = automorphism_group(G)
        results.append((aut.order, sum(conservativity_check(F) for F in aut.elements)))
    ok = all(n == good for n, good in results) and [n for n, _ in results] == [6, 6]
    return ok, "; ".join(f"{good}/{n} recovered" for n, good in results)


@check(10, "Sd<=2 Z/4 and Sd<=2 V4 are not isomorphic", 60.0)
def _c10():
    res = find_isomorphisms(build_sd(cyclic_group(4), 2).category, build_sd(klein_four(), 2).category)
    return len(res) == 0 and res.complete, f"{len(res)} isomorphisms, complete={res.complete}"


@check(11, "|Aut Sd<=2 D3| >= 12 and alpha is not Sd of an automorphism", 60.0)
def _c11():
    G = dihedral_group(3)
    sd = build_sd(G, 2)
    aut = automorphism_group(sd.category)
    a = alpha(sd)
    induced = [sd_of_functor(F, sd, sd) for F in automorphism_group(G).elements]
    ok = aut.order >= 12 and not any(a.same_maps(S) for S in induced)
    return ok, f"|Aut| = {aut.order} (complete={aut.complete}), alpha differs from all {len(induced)} induced maps"


@check(12, "Sd² of loop-free examples is a poset", 10.0)
def _c12():
    out = []
    for name, C in (("zigzag", zigzag(2)), ("[2]", poset_interval(2))):
        sd2 = build_sd(build_sd(C, "full").category, "full").category
        out.append((name, sd2.n_objects, int(sd2.hom_counts().max())))
    ok = all(mx <= 1 for _, _, mx in out)
    return ok, ", ".join(f"{n}: {k} objects, max |hom| {mx}" for n, k, mx in out)
