"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
complete.  The exhaustive corpus runs use every labelled graph on up to 6
vertices; parallelism adapts to the machine (capped at 8 jobs).
"""

import os
import time


from edgeideals.betti import betti_table, invariants
from edgeideals.bounds import bootstrap_functions, bootstrap_verify, pd_bound
from edgeideals.graphs import (SplitMix64, all_labeled, complement,
                               complete_bipartite, cycle, disjoint_edges,
                               gnp, is_claw_free, is_gap_free, path)
from edgeideals.ideals import edge_ideal
from edgeideals.verify import (corpus_from_graphs, graph_invariants,
                               reg_of_graph, run_corpus)

JOBS = min(8, os.cpu_count() or 1)


def report(criterion: int, ok: bool, text: str) -> None:
    print(f"\nACCEPTANCE {criterion} [{'PASS' if ok else 'FAIL'}] {text}", flush=True)


def corpus_n_up_to_6():
    for n in range(7):
        yield from all_labeled(n)


def test_criterion_1_complete_bipartite_sharpness():
    start = time.monotonic()
    bad = []
    for total in range(2, 10):
        for i in range(1, total // 2 + 1):
            d = total - i
            rec = graph_invariants(complete_bipartite(i, d))
            if rec.pd_quotient != total - 1:
                bad.append((i, d, rec.pd_quotient))
            bound = pd_bound("edge_degree", n=total, D=total).value
            if abs(bound - (total - 1)) > 1e-9:
                bad.append((i, d, bound))
    elapsed = time.monotonic() - start
    ok = not bad and elapsed < 120
    report(1, ok, f"complete bipartite sharpness through 9 vertices in {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 120


def test_criterion_2_disjoint_edges():
    start = time.monotonic()
    bad = []
    for l in range(1, 6):
        rec = graph_invariants(disjoint_edges(l))
        if rec.reg_ideal != l + 1 or rec.pd_quotient != l:
            bad.append((l, rec.reg_ideal, rec.pd_quotient))
    elapsed = time.monotonic() - start
    ok = not bad and elapsed < 120
    report(2, ok, f"reg(lK2)=l+1 and pd=l for l=1..5 in {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 120


# one shared exhaustive run covers criteria 3, 4 (exhaustive part) and 5
_EXHAUSTIVE: dict = {}


def _exhaustive_run():
    if not _EXHAUSTIVE:
        checks = ("recursion", "terai", "linearity", "froberg", "distance2",
                  "bounds", "pd-splitting", "nevo")
        start = time.monotonic()
        items = corpus_from_graphs(corpus_n_up_to_6())
        result = run_corpus(items, checks, jobs=JOBS)
        _EXHAUSTIVE["result"] = result
        _EXHAUSTIVE["elapsed"] = time.monotonic() - start
    return _EXHAUSTIVE["result"], _EXHAUSTIVE["elapsed"]


def test_criterion_3_exhaustive_lemma_suite():
    result, elapsed = _exhaustive_run()
    core = ("recursion", "terai", "linearity", "froberg", "distance2", "bounds")
    failures = [v for v in result.violations if v["check"] in core]
    ok = not failures and elapsed < 900
    report(3, ok, f"{result.graphs} graphs, checks {'+'.join(core)}: "
                  f"{len(failures)} failures in {elapsed:.1f}s at jobs={JOBS}")
    assert result.graphs == 1 + 1 + 2 + 8 + 64 + 1024 + 32768
    assert not failures, failures[:3]
    assert elapsed < 900


def test_criterion_4_nevo_bound():
    result, _ = _exhaustive_run()
    exhaustive_failures = [v for v in result.violations if v["check"] == "nevo"]
    start = time.monotonic()
    rng = SplitMix64(20260808)
    random_failures = []
    checked = 0
    for _ in range(10_000):
        n = 2 + rng.next_u64() % 9
        p = 0.1 + 0.8 * rng.next_float()
        g = gnp(n, p, rng.next_u64())
        if g.n_edges == 0:
            continue
        if not (is_claw_free(g)[0] and is_gap_free(g)[0]):
            continue
        checked += 1
        if reg_of_graph(g) > 3:
            random_failures.append(g)
    elapsed = time.monotonic() - start
    ok = not exhaustive_failures and not random_failures and elapsed < 600
    report(4, ok, f"claw-free gap-free reg<=3: exhaustive n<=6 plus "
                  f"{checked} random hypothesis hits out of 10000 draws in {elapsed:.1f}s")
    assert not exhaustive_failures, exhaustive_failures[:3]
    assert not random_failures
    assert elapsed < 600


def test_criterion_5_pd_splitting_on_neighbourhoods():
    result, elapsed = _exhaustive_run()
    failures = [v for v in result.violations if v["check"] == "pd-splitting"]
    ok = not failures
    report(5, ok, f"pd splitting with neighbourhood variable sets over n<=6: "
                  f"{len(failures)} failures (within run 3's {elapsed:.1f}s)")
    assert not failures, failures[:3]


def test_criterion_6_cubic_thickening():
    start = time.monotonic()
    graphs = [g for n in range(3, 7) for g in all_labeled(n) if g.n_edges >= 1]
    items = corpus_from_graphs(graphs)
    result = run_corpus(items, ("cubic",), jobs=JOBS)
    elapsed = time.monotonic() - start
    failures = result.violations
    ok = not failures and elapsed < 600
    detail = ""
    if failures:
        # census: every observed failure so far is a regularity-2 graph whose
        # cubic thickening has regularity exactly 3
        reg2 = sum(1 for v in failures
                   if v["details"]["reg_edge"] == 2 and v["details"]["reg_cubic"] == 3)
        detail = (f" ({len(failures)} equality failures, {reg2} of them with "
                  f"reg(edge)=2 vs reg(cubic)=3; first witness "
                  f"{failures[0]['graph6']!r})")
    report(6, ok, f"cubic thickening reg equality and 1-step linearity over "
                  f"3<=n<=6 in {elapsed:.1f}s{detail}")
    assert elapsed < 600
    assert not failures, (f"{len(failures)} graphs violate the stated reg "
                          f"equality, e.g. {failures[0]}")


def test_criterion_7_bootstrap_conditions():
    start = time.monotonic()
    grid = range(1, 10 ** 6 + 1)
    bad = []
    for k in range(1, 6):
        rep = bootstrap_verify(k, grid, 1e-9)
        if not rep.passed:
            bad.append(rep)
        _, f, _ = bootstrap_functions(k)
        if abs(f(1.0) - 2.0) > 1e-12:
            bad.append(("f(1)", k, f(1.0)))
    elapsed = time.monotonic() - start
    ok = not bad and elapsed < 60
    report(7, ok, f"bootstrap conditions for k=1..5 on 1..10^6 in {elapsed:.1f}s")
    assert not bad, bad
    assert elapsed < 60


def test_criterion_8_regression_fixtures():
    recs = {
        "C4": graph_invariants(cycle(4)),
        "C5": graph_invariants(cycle(5)),
        "P3": graph_invariants(path(3)),
        "C6c": graph_invariants(complement(cycle(6))),
    }
    checks = [
        recs["C4"].reg_ideal == 2, recs["C4"].pd_quotient == 3,
        recs["C5"].reg_ideal == 3, recs["C5"].pd_quotient == 3,
        recs["C5"].lin_steps == 1,
        recs["P3"].reg_ideal == 2, recs["P3"].pd_quotient == 2,
        recs["C6c"].lin_steps == 2,
    ]
    ok = all(checks)
    report(8, ok, "regression fixtures C4, C5, P3, C6 complement")
    assert ok, recs


def test_criterion_9_performance():
    g12 = gnp(12, 0.4, 20260808)
    start = time.monotonic()
    t12 = betti_table(edge_ideal(g12))
    t12_time = time.monotonic() - start
    g14 = gnp(14, 0.4, 20260808)
    start = time.monotonic()
    t14 = betti_table(edge_ideal(g14), jobs=JOBS)
    t14_time = time.monotonic() - start
    ok = t12_time < 60 and t14_time < 900
    report(9, ok, f"full tables: n=12 in {t12_time:.2f}s, n=14 in {t14_time:.2f}s "
                  f"at jobs={JOBS} ({len(t12.entries)} and {len(t14.entries)} entries)")
    assert t12_time < 60
    assert t14_time < 900
    assert invariants(edge_ideal(g12)).pd_quotient <= 12
