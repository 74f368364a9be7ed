"""Executable checks of the structural lemmas and bounds, per graph and corpus.

Each check returns a ``CheckResult`` with status pass/fail/skip; skipped
means a hypothesis was not met, and is counted separately from passes so
vacuous cases cannot inflate confidence.  ``run_corpus`` applies a selection
of checks over a graph stream, optionally across processes, and aggregates
a deterministic summary keyed by input sequence number.
"""

from __future__ import annotations

import math
import multiprocessing
from dataclasses import dataclass, field

from . import bounds as _bounds
from . import graphs as _graphs
from .betti import (DEFAULT_MAX_VARS, GF2, InvariantRecord, invariants,
                    linearity_cross_check)
from .graphs import Graph, bit_indices, decode_graph6, encode_graph6
from .ideals import (SquarefreeIdeal, active_vertices, add_variable, alexander_dual,
                     big_height, colon_variable, cubic_thickening, edge_ideal)

SLACK = 1e-9

CHECK_NAMES = ("recursion", "terai", "linearity", "froberg", "distance2",
               "nevo", "bounds", "pd-splitting", "cubic")


@dataclass(frozen=True)
class CheckResult:
    check: str
    status: str  # "pass" | "fail" | "skip"
    details: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {"check": self.check, "status": self.status, "details": self.details}


_INV_CACHE: dict[tuple[int, frozenset, str], InvariantRecord] = {}


def clear_caches() -> None:
    _INV_CACHE.clear()


def ideal_invariants(ideal: SquarefreeIdeal, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> InvariantRecord:
    """Memoized invariants; the cache key is the exact labelled generator set."""
    key = (ideal.n_vars, ideal.gens, fld)
    rec = _INV_CACHE.get(key)
    if rec is None:
        rec = invariants(ideal, fld, max_n=max_n)
        _INV_CACHE[key] = rec
    return rec


def seed_graph_invariants(graph6: str, fld: str, rec: InvariantRecord) -> None:
    """Prime the in-process memo from a persisted record (e.g. a result cache)."""
    ideal = edge_ideal(decode_graph6(graph6))
    _INV_CACHE[(ideal.n_vars, ideal.gens, fld)] = rec


def graph_invariants(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> InvariantRecord:
    return ideal_invariants(edge_ideal(g), fld, max_n)


def reg_of_graph(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> int:
    """Regularity of the edge ideal; 2 for edgeless graphs by convention."""
    return graph_invariants(g, fld, max_n).reg_ideal


def pd_of_ideal(ideal: SquarefreeIdeal, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> int:
    return ideal_invariants(ideal, fld, max_n).pd_quotient


# ---------------------------------------------------------------------------
# individual checks


def verify_reg_recursion(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """At every vertex x, reg lies in {reg(G - star x) + 1, reg(G - x)} and is
    bounded by their maximum (edgeless subgraphs count as regularity 2)."""
    if g.n_edges == 0:
        return CheckResult("recursion", "skip", {"reason": "edgeless"})
    reg_g = reg_of_graph(g, fld, max_n)
    for x in range(g.n):
        r_star = reg_of_graph(_graphs.remove(g, x, "star"), fld, max_n)
        r_del = reg_of_graph(_graphs.remove(g, x, "vertex"), fld, max_n)
        if reg_g > max(r_star + 1, r_del) or reg_g not in (r_star + 1, r_del):
            return CheckResult("recursion", "fail", {
                "vertex": x, "reg": reg_g, "reg_minus_star": r_star, "reg_minus_vertex": r_del})
    return CheckResult("recursion", "pass", {"reg": reg_g})


def verify_terai(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """reg of the Alexander dual equals pd of the quotient, both computed fresh."""
    ideal = edge_ideal(g)
    if ideal.is_zero:
        return CheckResult("terai", "skip", {"reason": "edgeless"})
    reg_dual = ideal_invariants(alexander_dual(ideal), fld, max_n).reg_ideal
    pd_q = ideal_invariants(ideal, fld, max_n).pd_quotient
    status = "pass" if reg_dual == pd_q else "fail"
    return CheckResult("terai", status, {"reg_dual": reg_dual, "pd_quotient": pd_q})


def verify_linearity(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """Betti-table linearity steps agree with the complement's cycle spectrum."""
    if g.n_edges == 0:
        return CheckResult("linearity", "skip", {"reason": "edgeless"})
    rep = linearity_cross_check(g, fld, max_n=max_n)
    comb = "unbounded" if rep.steps_combinatorial == math.inf else rep.steps_combinatorial
    return CheckResult("linearity", "pass" if rep.consistent else "fail", {
        "steps_betti": rep.steps_betti, "fully_linear": rep.fully_linear,
        "steps_combinatorial": comb, "reg": rep.reg_ideal})


def verify_froberg(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """Regularity 2 exactly when the complement has no induced cycle above 3."""
    reg = reg_of_graph(g, fld, max_n)
    spectrum = _graphs.induced_cycle_spectrum(_graphs.complement(g))
    no_long_cycle = not any(c >= 4 for c in spectrum)
    ok = (reg == 2) == no_long_cycle
    return CheckResult("froberg", "pass" if ok else "fail", {
        "reg": reg, "complement_spectrum": sorted(spectrum)})


def verify_distance2(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """In a gap-free graph every vertex is within distance 2 of any maximum
    degree vertex (isolated vertices stripped first)."""
    h = _graphs.induced_subgraph(g, g.full_mask & ~g.isolated_mask)
    if h.n == 0:
        return CheckResult("distance2", "skip", {"reason": "edgeless"})
    gap_free, _ = _graphs.is_gap_free(h)
    if not gap_free:
        return CheckResult("distance2", "skip", {"reason": "not gap-free"})
    d_max = max(h.degree(v) for v in range(h.n))
    for x in range(h.n):
        if h.degree(x) != d_max:
            continue
        for y in range(h.n):
            if _graphs.distance(h, x, y) > 2:
                return CheckResult("distance2", "fail", {
                    "center": h.label_of(x), "far_vertex": h.label_of(y)})
    return CheckResult("distance2", "pass", {})


def verify_nevo(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """Claw-free and gap-free graphs have regularity at most 3."""
    if g.n_edges == 0:
        return CheckResult("nevo", "skip", {"reason": "edgeless"})
    claw_free, _ = _graphs.is_claw_free(g)
    gap_free, _ = _graphs.is_gap_free(g)
    if not (claw_free and gap_free):
        return CheckResult("nevo", "skip", {"reason": "not claw-free and gap-free"})
    reg = reg_of_graph(g, fld, max_n)
    return CheckResult("nevo", "pass" if reg <= 3 else "fail", {"reg": reg})


def verify_pd_splitting(ideal: SquarefreeIdeal, lam: list[int], fld: str = GF2,
                        max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """Some branch of the variable-splitting recursion attains pd(S/I).

    For the ordered variables x_1..x_i, either pd(S/I) equals
    pd(S/((I, x_1..x_{j-1}) : x_j)) for some j, or it equals
    pd(S/(I, x_1..x_i)).
    """
    if not lam:
        return CheckResult("pd-splitting", "skip", {"reason": "empty variable list"})
    if ideal.is_zero or ideal.is_unit:
        return CheckResult("pd-splitting", "skip", {"reason": "degenerate ideal"})
    pd0 = pd_of_ideal(ideal, fld, max_n)
    current = ideal
    branch_pds = []
    for j, v in enumerate(lam, start=1):
        colon = colon_variable(current, v)
        if colon.is_unit:
            branch_pds.append(None)
        else:
            pd_colon = pd_of_ideal(colon, fld, max_n)
            branch_pds.append(pd_colon)
            if pd_colon == pd0:
                return CheckResult("pd-splitting", "pass", {"pd": pd0, "branch": j})
        current = add_variable(current, v)
    pd_final = pd_of_ideal(current, fld, max_n)
    if pd_final == pd0:
        return CheckResult("pd-splitting", "pass", {"pd": pd0, "branch": "sum"})
    return CheckResult("pd-splitting", "fail", {
        "pd": pd0, "colon_pds": branch_pds, "sum_pd": pd_final, "lambda": list(lam)})


def verify_lyu_neighborhoods(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """Run the pd splitting check with the variables set to each vertex's
    neighbourhood."""
    ideal = edge_ideal(g)
    if ideal.is_zero:
        return CheckResult("pd-splitting", "skip", {"reason": "edgeless"})
    active = active_vertices(g)
    index = {v: i for i, v in enumerate(active)}
    for x in active:
        lam = [index[w] for w in bit_indices(g.adj[x])]
        res = verify_pd_splitting(ideal, lam, fld, max_n)
        if res.status == "fail":
            return CheckResult("pd-splitting", "fail", {"vertex": x, **res.details})
    return CheckResult("pd-splitting", "pass", {})


def verify_cubic_reg(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    """The squarefree cubic thickening has the same regularity as the edge
    ideal and a linear first resolution step."""
    ideal = edge_ideal(g)
    if ideal.is_zero:
        return CheckResult("cubic", "skip", {"reason": "edgeless"})
    if ideal.n_vars < 3:
        return CheckResult("cubic", "skip", {"reason": "fewer than 3 non-isolated vertices"})
    cubic = cubic_thickening(g)
    rec_cubic = ideal_invariants(cubic, fld, max_n)
    rec_edge = ideal_invariants(ideal, fld, max_n)
    one_step = rec_cubic.fully_linear or (rec_cubic.lin_steps is not None and rec_cubic.lin_steps >= 1)
    ok = rec_cubic.reg_ideal == rec_edge.reg_ideal and one_step
    return CheckResult("cubic", "pass" if ok else "fail", {
        "reg_cubic": rec_cubic.reg_ideal, "reg_edge": rec_edge.reg_ideal,
        "cubic_one_step_linear": one_step})


# ---------------------------------------------------------------------------
# the bound report


@dataclass(frozen=True)
class BoundCheck:
    """One bound compared against the invariant it constrains."""

    bound: _bounds.BoundValue
    invariant: float
    direction: str  # "upper" | "lower"
    status: str  # "pass" | "fail" | "skip"

    @property
    def gap(self) -> float | None:
        if self.status == "skip":
            return None
        if self.direction == "upper":
            return self.bound.value - self.invariant
        return self.invariant - self.bound.value

    def to_json_obj(self) -> dict:
        return {"name": self.bound.name, "value": self.bound.value,
                "params": self.bound.params, "applicable": self.bound.applicable,
                "note": self.bound.note, "invariant": self.invariant,
                "direction": self.direction, "status": self.status, "gap": self.gap}


@dataclass(frozen=True)
class BoundReport:
    """Per-graph record of invariants, statistics, flags and bound outcomes."""

    graph6: str
    invariants: InvariantRecord
    stats: _graphs.EdgeStats
    flags: dict
    bound_checks: tuple[BoundCheck, ...]

    @property
    def failed(self) -> list[BoundCheck]:
        return [c for c in self.bound_checks if c.status == "fail"]

    def to_json_obj(self) -> dict:
        return {
            "graph6": self.graph6,
            "invariants": self.invariants.to_json_obj(),
            "stats": {"n": self.stats.n, "d_max": self.stats.d_max,
                      "d_edge_max": self.stats.d_edge_max,
                      "c_clawfree": self.stats.c_clawfree,
                      "big_height": self.stats.big_height},
            "flags": self.flags,
            "bounds": [c.to_json_obj() for c in self.bound_checks],
        }


def _upper(bound: _bounds.BoundValue, invariant: float, floor: float | None = None) -> BoundCheck:
    limit = bound.value if floor is None else max(bound.value, floor)
    ok = invariant <= limit + SLACK
    return BoundCheck(bound, invariant, "upper", "pass" if ok else "fail")


def verify_all_bounds(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> BoundReport:
    """Evaluate every applicable bound against the computed invariants.

    Regularity bounds apply when the resolution is at least 1-step linear;
    with a fully linear resolution the level k=1 instantiation is used.  The
    max-degree regularity bound is floored at the trivial value 3 when the
    degree drops under k+1 (flagged in the bound's note).  The claw-free
    bound applies to claw-free graphs only.  Isolated vertices are stripped
    throughout, which only strengthens the vertex-count bounds.
    """
    if g.n_edges == 0:
        raise ValueError("bound report needs a graph with an edge")
    h = _graphs.induced_subgraph(g, g.full_mask & ~g.isolated_mask)
    ideal = edge_ideal(h)
    rec = ideal_invariants(ideal, fld, max_n)
    b = big_height(ideal)
    stats = _graphs.degree_stats(h)
    stats = _graphs.EdgeStats(stats.n, stats.d_max, stats.d_edge_max, stats.c_clawfree, b)
    claw_free, _ = _graphs.is_claw_free(h)
    gap_free, _ = _graphs.is_gap_free(h)
    comb = _graphs.linearity_steps_combinatorial(h)
    n = h.n
    reg = rec.reg_ideal
    pd = rec.pd_quotient
    checks: list[BoundCheck] = []

    k = 1 if comb == math.inf else int(comb)
    if k >= 1:
        bv = _bounds.reg_bound("maxdeg", k, stats.d_max)
        checks.append(_upper(bv, reg, floor=3.0 if stats.d_max < k + 1 else None))
        checks.append(_upper(_bounds.reg_bound("nvertices", k, n), reg))
        checks.append(_upper(_bounds.pd_bound("s2", k=k + 1, n=n), reg))

    checks.append(_upper(_bounds.pd_bound("edge_degree", n=n, D=stats.d_edge_max), pd))
    checks.append(_upper(_bounds.pd_bound("maxdeg", n=n, d=stats.d_max), pd))
    checks.append(_upper(_bounds.pd_bound("faltings", n=n, b=b), pd))
    if claw_free:
        checks.append(_upper(_bounds.pd_bound("clawfree", n=n, C=stats.c_clawfree), pd))
    else:
        bv = _bounds.pd_bound("clawfree", n=n, C=stats.c_clawfree)
        checks.append(BoundCheck(
            _bounds.BoundValue(bv.name, bv.value, bv.params, False, "graph has a claw"),
            pd, "upper", "skip"))

    if k >= 1:
        for i, sigma in rec.witnesses:
            sub = _graphs.induced_subgraph(h, sigma)
            sub_stats = _graphs.degree_stats(sub)
            k_sub_comb = _graphs.linearity_steps_combinatorial(sub)
            k_sub = 1 if k_sub_comb == math.inf else int(k_sub_comb)
            value = _bounds.edge_degree_lower_bound(sub.n, sub_stats.d_max, k_sub)
            bv = _bounds.BoundValue("witness_edge_degree", value,
                                    {"m": sub.n, "d": sub_stats.d_max, "k": k_sub,
                                     "sigma": bit_indices(sigma), "i": i})
            ok = sub_stats.d_edge_max is not None and sub_stats.d_edge_max >= value - SLACK
            checks.append(BoundCheck(bv, sub_stats.d_edge_max or 0, "lower",
                                     "pass" if ok else "fail"))

    flags = {"gap_free": gap_free, "claw_free": claw_free,
             "lin_steps_combinatorial": None if comb == math.inf else int(comb),
             "fully_linear_combinatorial": comb == math.inf}
    return BoundReport(encode_graph6(g), rec, stats, flags, tuple(checks))


def verify_bounds_check(g: Graph, fld: str = GF2, max_n: int = DEFAULT_MAX_VARS) -> CheckResult:
    if g.n_edges == 0:
        return CheckResult("bounds", "skip", {"reason": "edgeless"})
    report = verify_all_bounds(g, fld, max_n)
    failed = report.failed
    if failed:
        return CheckResult("bounds", "fail", {"failed": [c.to_json_obj() for c in failed]})
    return CheckResult("bounds", "pass", {"bounds": len(report.bound_checks)})


_CHECK_FUNCS = {
    "recursion": verify_reg_recursion,
    "terai": verify_terai,
    "linearity": verify_linearity,
    "froberg": verify_froberg,
    "distance2": verify_distance2,
    "nevo": verify_nevo,
    "bounds": verify_bounds_check,
    "pd-splitting": verify_lyu_neighborhoods,
    "cubic": verify_cubic_reg,
}


def run_checks(g: Graph, checks: tuple[str, ...], fld: str = GF2,
               max_n: int = DEFAULT_MAX_VARS) -> list[CheckResult]:
    out = []
    for name in checks:
        func = _CHECK_FUNCS.get(name)
        if func is None:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}")
        out.append(func(g, fld, max_n))
    return out


# ---------------------------------------------------------------------------
# corpus runner


@dataclass
class CorpusResult:
    """Deterministic aggregate of a corpus run (no timing inside)."""

    graphs: int
    counts: dict
    violations: list
    input_errors: list

    @property
    def exit_code(self) -> int:
        if self.input_errors:
            return 2
        return 1 if self.counts.get("fail", 0) else 0

    def to_json_obj(self) -> dict:
        return {"graphs": self.graphs, "counts": self.counts,
                "violations": self.violations,
                "input_errors": [{"line": no, "error": msg} for no, msg in self.input_errors]}


def corpus_from_lines(lines) -> tuple[list[tuple[int, str]], list[tuple[int, str]]]:
    """Split a graph6 stream into (sequence, graph6) items and input errors."""
    items: list[tuple[int, str]] = []
    errors: list[tuple[int, str]] = []
    for no, g, err in _graphs.iter_graph6(lines):
        if err is not None:
            errors.append((no, err))
        else:
            items.append((no, encode_graph6(g)))
    return items, errors


def corpus_from_graphs(gs) -> list[tuple[int, str]]:
    return [(seq, encode_graph6(g)) for seq, g in enumerate(gs, start=1)]


def _corpus_worker(args) -> tuple[int, list[dict]]:
    seq, g6, checks, fld, max_n = args
    g = decode_graph6(g6)
    results = run_checks(g, checks, fld, max_n)
    return seq, [r.to_json_obj() for r in results]


def run_corpus(items: list[tuple[int, str]], checks, fld: str = GF2, *,
               jobs: int = 1, max_n: int = DEFAULT_MAX_VARS,
               input_errors: list[tuple[int, str]] | None = None) -> CorpusResult:
    """Run the selected checks over (sequence, graph6) items.

    The summary is independent of ``jobs``: results are reduced in input
    order and every check is a pure function of its graph.  Oversized graphs
    are skipped with a logged reason rather than failing the run.
    """
    checks = tuple(checks)
    for name in checks:
        if name not in _CHECK_FUNCS:
            raise ValueError(f"unknown check {name!r}; choose from {', '.join(CHECK_NAMES)}")
    args = [(seq, g6, checks, fld, max_n) for seq, g6 in items]
    results: dict[int, list[dict]] = {}
    if jobs <= 1 or len(args) < 64:
        for arg in args:
            seq, res = _run_one_guarded(arg)
            results[seq] = res
    else:
        ctx = multiprocessing.get_context(
            "fork" if "fork" in multiprocessing.get_all_start_methods() else None)
        chunk = max(16, len(args) // (jobs * 16))
        with ctx.Pool(jobs) as pool:
            for seq, res in pool.imap_unordered(_run_one_guarded, args, chunksize=chunk):
                results[seq] = res

    counts = {"pass": 0, "fail": 0, "skip": 0}
    by_seq = dict(items)
    violations = []
    for seq, _ in items:
        for res in results[seq]:
            counts[res["status"]] += 1
            if res["status"] == "fail":
                violations.append({"check": res["check"], "graph6": by_seq[seq],
                                   "details": res["details"]})
    return CorpusResult(len(items), counts, violations, list(input_errors or []))


def _run_one_guarded(arg):
    """Run one graph's checks, downgrading oversize graphs to logged skips."""
    seq, g6, checks, fld, max_n = arg
    g = decode_graph6(g6)
    active = sum(1 for row in g.adj if row)
    if active > max_n:
        return seq, [{"check": name, "status": "skip",
                      "details": {"reason": f"{active} active vertices exceeds guard {max_n}"}}
                     for name in checks]
    return _corpus_worker(arg)
