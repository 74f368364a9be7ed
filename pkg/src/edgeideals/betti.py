"""Exact multigraded Betti tables of squarefree monomial ideals.

The table of S/I is assembled from reduced homology of restricted
Stanley-Reisner complexes, one squarefree multidegree at a time:
the entry at homological index i and multidegree σ is the rank of reduced
homology in dimension |σ| - i - 1 of the subcomplex of faces inside σ.
Restrictions are enumerated directly from the generator supports, so the
2^n loop never materializes a facet list; subsets that leave some vertex
uncovered give a cone (acyclic restriction) and are skipped outright.

Derived invariants: regularity of the ideal, projective dimension and depth
of the quotient, how many resolution steps stay linear, and the multidegree
witnesses where the regularity is attained.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass

from .graphs import Graph, bit_indices
from .ideals import SquarefreeIdeal, edge_ideal
from .homology import GF2, ranks_from_faces, validate_field
from . import graphs as _graphs

DEFAULT_MAX_VARS = 22


def _sigma_faces_quadratic(sigma: int, nb: list[int]) -> dict[int, list[int]]:
    """Faces inside sigma avoiding the quadratic generators (independent sets)."""
    by_dim: dict[int, list[int]] = {-1: [0]}
    stack = [(0, sigma)]
    while stack:
        face, cand = stack.pop()
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            new = face | low
            by_dim.setdefault(new.bit_count() - 1, []).append(new)
            child_cand = cand & ~((low << 1) - 1) & ~nb[v]
            if child_cand:
                stack.append((new, child_cand))
    return by_dim


def _sigma_faces_general(sigma: int, banned: int, nb: list[int],
                         big_by_var: dict[int, list[int]]) -> dict[int, list[int]]:
    """Faces inside sigma avoiding generators of any degree."""
    by_dim: dict[int, list[int]] = {-1: [0]}
    stack = [(0, sigma & ~banned)]
    while stack:
        face, cand = stack.pop()
        c = cand
        while c:
            low = c & -c
            c ^= low
            v = low.bit_length() - 1
            new = face | low
            if any(gsup & ~new == 0 for gsup in big_by_var.get(v, ())):
                continue
            by_dim.setdefault(new.bit_count() - 1, []).append(new)
            child_cand = cand & ~((low << 1) - 1) & ~nb[v]
            if child_cand:
                stack.append((new, child_cand))
    return by_dim


def _betti_range(gens: tuple[int, ...], n_vars: int, fld: str,
                 start: int, stop: int) -> dict[tuple[int, int], int]:
    """Hochster contributions for the Gray-code positions start..stop-1."""
    entries: dict[tuple[int, int], int] = {}
    quadratic = all(gsup.bit_count() == 2 for gsup in gens)
    nb_full = [0] * n_vars
    if quadratic:
        for gsup in gens:
            u, v = bit_indices(gsup)
            nb_full[u] |= 1 << v
            nb_full[v] |= 1 << u
    for t in range(start, stop):
        sigma = t ^ (t >> 1)
        covered = 0
        gens_in = []
        for gsup in gens:
            if gsup & ~sigma == 0:
                gens_in.append(gsup)
                covered |= gsup
        if covered != sigma:
            continue  # some vertex in no generator: the restriction is a cone
        if quadratic:
            by_dim = _sigma_faces_quadratic(sigma, nb_full)
        else:
            banned = 0
            nb = [0] * n_vars
            big_by_var: dict[int, list[int]] = {}
            for gsup in gens_in:
                size = gsup.bit_count()
                if size == 1:
                    banned |= gsup
                elif size == 2:
                    u, v = bit_indices(gsup)
                    nb[u] |= 1 << v
                    nb[v] |= 1 << u
                else:
                    for v in bit_indices(gsup):
                        big_by_var.setdefault(v, []).append(gsup)
            by_dim = _sigma_faces_general(sigma, banned, nb, big_by_var)
        for d in by_dim:
            by_dim[d].sort(key=lambda m: tuple(bit_indices(m)))
        profile = ranks_from_faces(by_dim, fld)
        size = sigma.bit_count()
        for d, r in profile.ranks.items():
            if r:
                entries[(size - d - 1, sigma)] = r
    return entries


def _betti_worker(args) -> dict[tuple[int, int], int]:
    return _betti_range(*args)


class BettiTable:
    """Map (homological index, multidegree bitset) -> rank, plus graded views."""

    def __init__(self, n_vars: int, entries: dict[tuple[int, int], int]):
        self.n_vars = n_vars
        self.entries = dict(entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BettiTable)
                and self.n_vars == other.n_vars
                and self.entries == other.entries)

    def __repr__(self) -> str:
        return f"BettiTable(n_vars={self.n_vars}, entries={len(self.entries)})"

    def entries_sorted(self) -> list[tuple[int, int, int]]:
        keys = sorted(self.entries, key=lambda key: (key[0], tuple(bit_indices(key[1]))))
        return [(i, sigma, self.entries[(i, sigma)]) for i, sigma in keys]

    def graded(self) -> dict[tuple[int, int], int]:
        """Graded Betti numbers: β_{i,j} summed over multidegrees of size j."""
        out: dict[tuple[int, int], int] = {}
        for (i, sigma), r in self.entries.items():
            key = (i, sigma.bit_count())
            out[key] = out.get(key, 0) + r
        return out

    @property
    def pd_quotient(self) -> int:
        return max(i for i, _ in self.entries)

    @property
    def reg_quotient(self) -> int:
        return max(sigma.bit_count() - i for i, sigma in self.entries)

    def to_json_obj(self) -> dict:
        entries = [{"i": i, "sigma": bit_indices(sigma), "rank": r}
                   for i, sigma, r in self.entries_sorted()]
        graded = sorted([i, j, r] for (i, j), r in self.graded().items())
        return {"n_vars": self.n_vars, "entries": entries, "graded": graded}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BettiTable":
        entries = {}
        for item in obj["entries"]:
            sigma = 0
            for v in item["sigma"]:
                sigma |= 1 << v
            entries[(item["i"], sigma)] = item["rank"]
        return cls(obj["n_vars"], entries)

    def macaulay_lines(self) -> list[str]:
        """Betti triangle, rows by degree slope: row r column i holds β_{i,i+r}."""
        graded = self.graded()
        pd = self.pd_quotient
        top = self.reg_quotient
        cols = []
        for i in range(pd + 1):
            col = [graded.get((i, i + r), 0) for r in range(top + 1)]
            cols.append(col)
        widths = [max(len(str(i)), len(str(sum(col))),
                      *(len(str(c)) if c else 1 for c in col)) for i, col in enumerate(cols)]
        head = ["      " + " ".join(str(i).rjust(widths[i]) for i in range(pd + 1))]
        head.append("total:" + " ".join(str(sum(col)).rjust(widths[i]) for i, col in enumerate(cols)))
        for r in range(top + 1):
            cells = [str(cols[i][r]) if cols[i][r] else "." for i in range(pd + 1)]
            head.append(f"{r}:".rjust(6) + " ".join(cells[i].rjust(widths[i]) for i in range(pd + 1)))
        return head


def betti_table(ideal: SquarefreeIdeal, fld: str = GF2, *,
                max_n: int = DEFAULT_MAX_VARS, jobs: int = 1) -> BettiTable:
    """Complete multigraded Betti table of S/I over the chosen field.

    Walks all 2^n squarefree multidegrees (Gray-code order, accumulated into
    a sorted table); ``jobs`` > 1 splits the walk across processes.  Guarded
    at ``max_n`` variables since the walk is exponential.
    """
    validate_field(fld)
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("Betti table defined for proper nonzero ideals only")
    if ideal.n_vars > max_n:
        raise ValueError(f"{ideal.n_vars} variables exceeds the guard {max_n}; raise max_n to override")
    gens = tuple(ideal.gens_sorted())
    total = 1 << ideal.n_vars
    if jobs <= 1 or total < 4096:
        entries = _betti_range(gens, ideal.n_vars, fld, 0, total)
    else:
        n_chunks = jobs * 8
        step = (total + n_chunks - 1) // n_chunks
        args = [(gens, ideal.n_vars, fld, lo, min(lo + step, total))
                for lo in range(0, total, step)]
        ctx = multiprocessing.get_context("fork" if "fork" in multiprocessing.get_all_start_methods() else None)
        with ctx.Pool(jobs) as pool:
            entries = {}
            for part in pool.map(_betti_worker, args):
                entries.update(part)
    return BettiTable(ideal.n_vars, entries)


@dataclass(frozen=True)
class InvariantRecord:
    """Homological invariants derived from one Betti table.

    ``lin_steps`` counts how many initial resolution steps of the ideal are
    linear (relative to the common generator degree; None when generators
    have mixed degrees).  When the whole resolution is linear,
    ``fully_linear`` is set and ``lin_steps`` reports the resolution length.
    ``presentation_reg`` is the largest degree-minus-index over the first two
    homological positions, a statistic only.  ``witnesses`` lists every
    (index, multidegree) pair attaining the regularity.
    """

    reg_ideal: int
    pd_quotient: int
    depth_quotient: int
    lin_steps: int | None
    fully_linear: bool
    witnesses: tuple[tuple[int, int], ...]
    presentation_reg: int | None
    zero_ideal: bool = False

    def to_json_obj(self) -> dict:
        return {
            "reg_ideal": self.reg_ideal,
            "pd_quotient": self.pd_quotient,
            "depth_quotient": self.depth_quotient,
            "lin_steps": self.lin_steps,
            "fully_linear": self.fully_linear,
            "witnesses": [{"i": i, "sigma": bit_indices(sigma)} for i, sigma in self.witnesses],
            "presentation_reg": self.presentation_reg,
            "zero_ideal": self.zero_ideal,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "InvariantRecord":
        witnesses = tuple((w["i"], sum(1 << v for v in w["sigma"])) for w in obj["witnesses"])
        return cls(obj["reg_ideal"], obj["pd_quotient"], obj["depth_quotient"],
                   obj["lin_steps"], obj["fully_linear"], witnesses,
                   obj["presentation_reg"], obj["zero_ideal"])


def invariants(ideal: SquarefreeIdeal, fld: str = GF2, *,
               max_n: int = DEFAULT_MAX_VARS, jobs: int = 1) -> InvariantRecord:
    """Regularity, projective dimension and linearity data of S/I.

    The zero ideal is assigned regularity 2 by convention (the value the
    recursion bottoms out at for edgeless graphs) and projective dimension 0.
    """
    if ideal.is_unit:
        raise ValueError("invariants undefined for the unit ideal")
    if ideal.is_zero:
        return InvariantRecord(2, 0, ideal.n_vars, None, True, (), None, zero_ideal=True)
    table = betti_table(ideal, fld, max_n=max_n, jobs=jobs)
    return invariants_from_table(ideal, table)


def invariants_from_table(ideal: SquarefreeIdeal, table: BettiTable) -> InvariantRecord:
    entries = table.entries
    pd = max(i for i, _ in entries)
    reg_q = max(sigma.bit_count() - i for i, sigma in entries)
    witnesses = tuple(sorted(
        ((i, sigma) for i, sigma in entries if i >= 1 and sigma.bit_count() - i == reg_q),
        key=lambda key: (key[0], tuple(bit_indices(key[1])))))
    presentation_reg = max(sigma.bit_count() - i for i, sigma in entries if i <= 2)
    degrees = ideal.generator_degrees()
    if len(degrees) == 1:
        d0 = next(iter(degrees))
        nonlinear = [i - 1 for i, sigma in entries
                     if i >= 2 and sigma.bit_count() != (i - 1) + d0]
        if nonlinear:
            lin_steps: int | None = min(nonlinear) - 1
            fully = False
        else:
            lin_steps = pd - 1
            fully = True
    else:
        lin_steps = None
        fully = False
    return InvariantRecord(reg_q + 1, pd, table.n_vars - pd, lin_steps, fully,
                           witnesses, presentation_reg)


@dataclass(frozen=True)
class TeraiReport:
    """Both sides of Terai's duality: reg of the dual vs pd of the quotient."""

    reg_dual: int
    pd_quotient: int
    equal: bool


def terai_check(ideal: SquarefreeIdeal, fld: str = GF2, *,
                max_n: int = DEFAULT_MAX_VARS, jobs: int = 1) -> TeraiReport:
    """Compute reg of the Alexander dual and pd of the quotient independently."""
    from .ideals import alexander_dual

    dual = alexander_dual(ideal)
    reg_dual = invariants(dual, fld, max_n=max_n, jobs=jobs).reg_ideal
    pd_q = invariants(ideal, fld, max_n=max_n, jobs=jobs).pd_quotient
    return TeraiReport(reg_dual, pd_q, reg_dual == pd_q)


@dataclass(frozen=True)
class LinearityReport:
    """Resolution linearity read off the Betti table vs the induced-cycle test."""

    steps_betti: int | None
    fully_linear: bool
    steps_combinatorial: float  # may be math.inf
    reg_ideal: int
    consistent: bool


def linearity_cross_check(g: Graph, fld: str = GF2, *,
                          max_n: int = DEFAULT_MAX_VARS, jobs: int = 1) -> LinearityReport:
    """Check that Betti-table linearity matches the complement's cycle spectrum.

    An unbounded combinatorial answer (no induced cycle of length >= 4 in the
    complement) must pair with a fully linear resolution and regularity 2.
    """
    ideal = edge_ideal(g)
    if ideal.is_zero:
        raise ValueError("linearity cross-check needs a graph with an edge")
    rec = invariants(ideal, fld, max_n=max_n, jobs=jobs)
    comb = _graphs.linearity_steps_combinatorial(g)
    if comb == float("inf"):
        ok = rec.fully_linear and rec.reg_ideal == 2
    else:
        ok = (not rec.fully_linear) and rec.lin_steps == comb
    return LinearityReport(rec.lin_steps, rec.fully_linear, comb, rec.reg_ideal, ok)
