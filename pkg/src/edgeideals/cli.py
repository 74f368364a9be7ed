"""Command-line front end: analyze, verify, dual, bootstrap-check, gen.

Exit codes: 0 all checks passed, 1 some check failed, 2 input/config error.
"""

from __future__ import annotations

import json
import sys
import time
from pathlib import Path

import click

from . import bounds as _bounds
from . import graphs as _graphs
from . import verify as _verify
from .betti import betti_table, invariants_from_table, terai_check
from .cache import ResultCache, table_digest
from .homology import GF2, RATIONAL
from .ideals import alexander_dual, edge_ideal, parse_ideal

HARD_MAX_N = 22


def _flatten(obj, prefix="") -> list[tuple[str, str]]:
    rows = []
    if isinstance(obj, dict):
        for key in obj:
            rows.extend(_flatten(obj[key], f"{prefix}{key}."))
    elif isinstance(obj, (list, tuple)):
        for idx, item in enumerate(obj):
            rows.extend(_flatten(item, f"{prefix}{idx}."))
    else:
        rows.append((prefix[:-1], json.dumps(obj)))
    return rows


def emit(report: dict, fmt: str, human_lines=None) -> None:
    if fmt == "json":
        click.echo(json.dumps(report, sort_keys=True))
    elif fmt == "csv":
        click.echo("key,value")
        for key, value in _flatten(report):
            quoted = value.replace('"', '""')
            click.echo(f'"{key}","{quoted}"')
    else:
        if human_lines:
            for line in human_lines:
                click.echo(line)
        else:
            click.echo(json.dumps(report, indent=2, sort_keys=True))


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    p = Path(source)
    if p.exists():
        return p.read_text()
    return source


def _load_graph(source: str, edges: bool) -> _graphs.Graph:
    text = _read_text(source)
    if edges:
        return _graphs.parse_edge_list(text)
    line = next((ln for ln in text.splitlines() if ln.strip()), "")
    if line.strip().startswith(">>graph6<<"):
        line = line.strip()[len(">>graph6<<"):]
    return _graphs.decode_graph6(line)


def parse_gen_spec(spec: str, seed: int = 0):
    """Generator specs: all_labeled:N, cycle:K, path:K, disjoint_edges:L,
    knm:M,N, gnp:N,P[,SEED] (seed falls back to --seed)."""
    try:
        name, _, arg = spec.partition(":")
        if name == "all_labeled":
            return list(_graphs.all_labeled(int(arg)))
        if name == "cycle":
            return [_graphs.cycle(int(arg))]
        if name == "path":
            return [_graphs.path(int(arg))]
        if name == "disjoint_edges":
            return [_graphs.disjoint_edges(int(arg))]
        if name == "knm":
            m, n = (int(tok) for tok in arg.split(","))
            return [_graphs.complete_bipartite(m, n)]
        if name == "gnp":
            parts = arg.split(",")
            n, p = int(parts[0]), float(parts[1])
            chosen = int(parts[2]) if len(parts) > 2 else seed
            return [_graphs.gnp(n, p, chosen)]
    except click.ClickException:
        raise
    except Exception as exc:
        raise click.UsageError(f"bad generator spec {spec!r}: {exc}")
    raise click.UsageError(f"unknown generator {spec!r}")


def _resolve_max_n(max_n: int, force: bool) -> int:
    if max_n > HARD_MAX_N and not force:
        raise click.UsageError(f"--max-n {max_n} beyond {HARD_MAX_N} needs --force")
    return max_n


field_option = click.option("--field", "fld", type=click.Choice([GF2, RATIONAL]),
                            default=GF2, show_default=True)
format_option = click.option("--format", "fmt", type=click.Choice(["json", "csv", "human"]),
                             default="human", show_default=True)
jobs_option = click.option("--jobs", type=int, default=1, show_default=True)
maxn_option = click.option("--max-n", type=int, default=HARD_MAX_N, show_default=True,
                           help="largest active vertex count sent to the Betti oracle")
force_option = click.option("--force", is_flag=True, help="allow --max-n beyond 22")


@click.group()
def main():
    """Exact regularity / projective dimension toolkit for edge ideals."""


@main.command()
@click.argument("source")
@click.option("--edges", is_flag=True, help="input is edge-list format (first line 'n m')")
@field_option
@format_option
@jobs_option
@maxn_option
@force_option
@click.option("--cache", "cache_path", type=click.Path(), default=None)
def analyze(source, edges, fld, fmt, jobs, max_n, force, cache_path):
    """Full report for one graph: invariants, statistics, Betti table, bounds."""
    max_n = _resolve_max_n(max_n, force)
    try:
        g = _load_graph(source, edges)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    g6 = _graphs.encode_graph6(g)
    ideal = edge_ideal(g)
    report = {"graph6": g6, "n": g.n}
    human = [f"graph6: {g6}", f"vertices: {g.n}  edges: {g.n_edges}"]
    if ideal.is_zero:
        rec = _verify.ideal_invariants(ideal, fld, max_n)
        report["invariants"] = rec.to_json_obj()
        report["zero_ideal_convention"] = "edgeless graph: regularity 2 by convention, pd 0"
        human.append("edgeless graph: reg(I) = 2 (convention), pd(S/I) = 0")
        report["bounds"] = []
        report["betti"] = None
    else:
        table = betti_table(ideal, fld, max_n=max_n, jobs=jobs)
        rec = invariants_from_table(ideal, table)
        _verify.seed_graph_invariants(g6, fld, rec)  # bound report reuses it
        report["invariants"] = rec.to_json_obj()
        bound_report = _verify.verify_all_bounds(g, fld, max_n)
        report["betti"] = table.to_json_obj()
        report["stats"] = bound_report.to_json_obj()["stats"]
        report["flags"] = bound_report.flags
        report["bounds"] = [c.to_json_obj() for c in bound_report.bound_checks]
        human.append(f"reg(I) = {rec.reg_ideal}   pd(S/I) = {rec.pd_quotient}   "
                     f"depth(S/I) = {rec.depth_quotient}")
        lin = "fully linear" if rec.fully_linear else f"{rec.lin_steps} steps linear"
        human.append(f"resolution: {lin}")
        stats = bound_report.stats
        human.append(f"stats: d_max={stats.d_max} edge_degree_max={stats.d_edge_max} "
                     f"clawfree_C={stats.c_clawfree} big_height={stats.big_height}")
        human.append(f"flags: gap_free={bound_report.flags['gap_free']} "
                     f"claw_free={bound_report.flags['claw_free']}")
        human.append("betti table (rows: degree slope, columns: homological index):")
        human.extend("  " + ln for ln in table.macaulay_lines())
        human.append("bounds (value vs invariant, gap):")
        for c in bound_report.bound_checks:
            gap = "n/a" if c.gap is None else f"{c.gap:.6g}"
            human.append(f"  {c.bound.name}: {c.bound.value:.6g} vs {c.invariant} "
                         f"[{c.status}] gap={gap}")
        if cache_path:
            cache = ResultCache(cache_path)
            cache.put(g6, fld, rec.to_json_obj(), table_digest(table.to_json_obj()))
    emit(report, fmt, human)


@main.command()
@click.argument("source", required=False)
@click.option("--gen", "gen_spec", default=None, help="generate the corpus instead of reading one")
@click.option("--checks", default="all", show_default=True,
              help="comma list of: " + ",".join(_verify.CHECK_NAMES))
@click.option("--violations", "violations_path", type=click.Path(), default=None,
              help="write violation records to a file instead of stderr")
@click.option("--edges", is_flag=True, help="input is one edge-list graph, not a graph6 stream")
@click.option("--seed", type=int, default=0, show_default=True,
              help="seed for gnp generator specs without an explicit one")
@field_option
@format_option
@jobs_option
@maxn_option
@force_option
@click.option("--cache", "cache_path", type=click.Path(), default=None)
def verify(source, gen_spec, checks, violations_path, edges, seed, fld, fmt,
           jobs, max_n, force, cache_path):
    """Run lemma/bound checks over a graph6 stream or a generated corpus."""
    max_n = _resolve_max_n(max_n, force)
    if checks.strip() == "all":
        selected = _verify.CHECK_NAMES
    else:
        selected = tuple(tok.strip() for tok in checks.split(",") if tok.strip())
        bad = [c for c in selected if c not in _verify.CHECK_NAMES]
        if bad:
            raise click.UsageError(f"unknown checks: {', '.join(bad)}")
    input_errors: list[tuple[int, str]] = []
    if gen_spec:
        items = _verify.corpus_from_graphs(parse_gen_spec(gen_spec, seed))
    elif source and edges:
        try:
            items = _verify.corpus_from_graphs([_graphs.parse_edge_list(_read_text(source))])
        except ValueError as exc:
            raise click.UsageError(str(exc))
    elif source:
        text = _read_text(source)
        items, input_errors = _verify.corpus_from_lines(text.splitlines())
    else:
        raise click.UsageError("provide a graph6 source or --gen SPEC")

    cache = ResultCache(cache_path) if cache_path else None
    if cache is not None:
        from .betti import InvariantRecord

        for rec in cache.records.values():
            g6, _, rec_field = rec["key"].rpartition("|")
            if rec_field == fld and rec.get("invariants"):
                try:
                    _verify.seed_graph_invariants(g6, fld, InvariantRecord.from_json_obj(rec["invariants"]))
                except (ValueError, KeyError):
                    pass  # stale or foreign record: recompute instead
    start = time.monotonic()
    result = _verify.run_corpus(items, selected, fld, jobs=jobs, max_n=max_n,
                                input_errors=input_errors)
    wall = time.monotonic() - start
    if cache is not None:
        for seq, g6 in items:
            if cache.get(g6, fld) is None:
                g = _graphs.decode_graph6(g6)
                rec = _verify.ideal_invariants(edge_ideal(g), fld, max_n)
                cache.put(g6, fld, rec.to_json_obj(), "")
    summary = result.to_json_obj()
    report = {"corpus": gen_spec or source, "graphs": summary["graphs"],
              "counts": summary["counts"],
              "input_errors": summary["input_errors"], "wall_time": round(wall, 3)}
    human = [f"corpus: {report['corpus']}", f"graphs: {report['graphs']}",
             "counts: " + " ".join(f"{k}={v}" for k, v in sorted(summary["counts"].items())),
             f"input errors: {len(input_errors)}", f"wall time: {report['wall_time']}s"]
    emit(report, fmt, human)
    violation_lines = [json.dumps(v, sort_keys=True) for v in result.violations]
    if violations_path:
        Path(violations_path).write_text("\n".join(violation_lines) + ("\n" if violation_lines else ""))
    else:
        for line in violation_lines:
            click.echo(line, err=True)
    sys.exit(result.exit_code)


@main.command()
@click.argument("source")
@click.option("--ideal", "is_ideal", is_flag=True, help="input is the ideal text format")
@click.option("--edges", is_flag=True, help="input is edge-list format")
@field_option
@format_option
@maxn_option
@force_option
def dual(source, is_ideal, edges, fld, fmt, max_n, force):
    """Alexander dual generators plus both sides of the duality check."""
    max_n = _resolve_max_n(max_n, force)
    try:
        if is_ideal:
            ideal = parse_ideal(_read_text(source))
        else:
            ideal = edge_ideal(_load_graph(source, edges))
        if ideal.is_zero or ideal.is_unit:
            raise click.UsageError("dual needs a nonzero proper ideal")
        dual_ideal = alexander_dual(ideal)
        rep = terai_check(ideal, fld, max_n=max_n)
    except click.ClickException:
        raise
    except ValueError as exc:
        raise click.UsageError(str(exc))
    gens = [sorted(_graphs.bit_indices(gsup)) for gsup in dual_ideal.gens_sorted()]
    report = {"dual_generators": gens, "reg_dual": rep.reg_dual,
              "pd_quotient": rep.pd_quotient, "equal": rep.equal}
    human = ["dual ideal:"] + ["  " + " ".join(str(v) for v in gen) for gen in gens]
    human.append(f"reg(dual) = {rep.reg_dual}   pd(S/I) = {rep.pd_quotient}   equal: {rep.equal}")
    emit(report, fmt, human)
    sys.exit(0 if rep.equal else 1)


@main.command("bootstrap-check")
@click.option("--k-min", type=int, default=1, show_default=True)
@click.option("--k-max", type=int, default=5, show_default=True)
@click.option("--grid-max", type=int, default=100000, show_default=True,
              help="check on the integer grid 1..grid-max")
@click.option("--tol", type=float, default=1e-9, show_default=True)
@format_option
def bootstrap_check(k_min, k_max, grid_max, tol, fmt):
    """Verify the degree-to-vertex-count bound transfer conditions numerically."""
    if k_min < 1 or k_max < k_min:
        raise click.UsageError("need 1 <= k-min <= k-max")
    if grid_max < 1:
        raise click.UsageError("grid-max must be positive")
    grid = range(1, grid_max + 1)
    reports = []
    for k in range(k_min, k_max + 1):
        reports.append(_bounds.bootstrap_verify(k, grid, tol).to_json_obj())
    all_pass = all(rep["passed"] for rep in reports)
    report = {"reports": reports, "passed": all_pass}
    human = []
    for rep in reports:
        _, f, _ = _bounds.bootstrap_functions(rep["k"])
        human.append(
            f"k={rep['k']}: f(1)={f(1.0):.12g} monotone={rep['monotone_margin']:.3g} "
            f"concavity={rep['concavity_margin']:.3g} floor={rep['floor_margin']:.3g} "
            f"composition={rep['composition_margin']:.3g} -> "
            f"{'pass' if rep['passed'] else 'FAIL'}")
    emit(report, fmt, human)
    sys.exit(0 if all_pass else 1)


@main.command()
@click.argument("spec")
@click.option("--seed", type=int, default=0, show_default=True,
              help="seed for gnp specs without an explicit one")
def gen(spec, seed):
    """Emit a generated corpus as graph6 lines."""
    for g in parse_gen_spec(spec, seed):
        click.echo(_graphs.encode_graph6(g))


if __name__ == "__main__":
    main()
