"""Closed-form bound evaluation and the numeric bootstrap verifier.

Every bound is evaluated in double precision exactly as written; comparisons
against the integer invariants elsewhere allow the bound a slack of 1e-9,
since a genuine violation overshoots by at least 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .graphs import Graph, remove


@dataclass(frozen=True)
class BoundValue:
    """One evaluated bound: value, echoed parameters, applicability."""

    name: str
    value: float
    params: dict
    applicable: bool = True
    note: str = ""


def _log_base(base: float, x: float) -> float:
    return math.log(x) / math.log(base)


def reg_bound(kind: str, k: int, x: float) -> BoundValue:
    """Regularity bounds for edge ideals whose resolution is k-steps linear.

    ``maxdeg``: log_{(k+4)/2}(d / (k+1)) + 3 with x the maximum vertex degree.
    ``nvertices``: log_{(k+4)/2}((x-1) ln((k+4)/2) / (k+1) + 2/(k+4)) + 3 with
    x the vertex count.  The maxdeg formula dips below 3 when d < k+1; the
    value is still returned, with a note, since the trivial bound 3 applies
    in that regime.
    """
    if k < 1:
        raise ValueError("bounds need k >= 1")
    if x < 1:
        raise ValueError("bounds need x >= 1")
    base = (k + 4) / 2.0
    if kind == "maxdeg":
        value = _log_base(base, x / (k + 1)) + 3.0
        note = "degree below k+1: formula value under the trivial bound 3" if x < k + 1 else ""
        return BoundValue("reg_maxdeg", value, {"k": k, "d": x}, True, note)
    if kind == "nvertices":
        value = _log_base(base, (x - 1) * math.log(base) / (k + 1) + 2.0 / (k + 4)) + 3.0
        return BoundValue("reg_nvertices", value, {"k": k, "n": x}, True)
    raise ValueError(f"unknown regularity bound kind {kind!r}")


def pd_bound(kind: str, *, n: int | None = None, D: int | None = None,
             C: int | None = None, d: int | None = None, k: int | None = None,
             b: int | None = None) -> BoundValue:
    """Projective dimension bounds for quotients by edge ideals.

    ``edge_degree``: n(1 - 1/D) for D the maximum edge degree.
    ``clawfree``: n(1 - 1/C) with C the claw-free constant.
    ``maxdeg``: n(1 - 1/(2d)) for d the maximum vertex degree.
    ``s2``: the height-2 bound log_{(k+3)/2}((n-1) ln((k+3)/2)/k + 2/(k+3)) + 3
    for quotients satisfying Serre's condition S_k, k >= 2.
    ``faltings``: n - floor((n-1)/b) for b the big height (integer valued).
    ``normal``: n - (2n-1)/(b+1), the sharper form for normal quotients.
    Hypothesis violations return applicable=False with the reason.
    """
    def inapplicable(name: str, why: str, params: dict) -> BoundValue:
        return BoundValue(name, math.nan, params, False, why)

    if kind == "edge_degree":
        params = {"n": n, "D": D}
        if n is None or D is None or n < 1 or D < 1:
            return inapplicable("pd_edge_degree", "needs n >= 1 and edge degree D >= 1", params)
        return BoundValue("pd_edge_degree", n * (1.0 - 1.0 / D), params)
    if kind == "clawfree":
        params = {"n": n, "C": C}
        if n is None or C is None or n < 1 or C < 1:
            return inapplicable("pd_clawfree", "needs n >= 1 and claw-free constant C >= 1", params)
        return BoundValue("pd_clawfree", n * (1.0 - 1.0 / C), params)
    if kind == "maxdeg":
        params = {"n": n, "d": d}
        if n is None or d is None or n < 1 or d < 1:
            return inapplicable("pd_maxdeg", "needs n >= 1 and max degree d >= 1", params)
        return BoundValue("pd_maxdeg", n * (1.0 - 1.0 / (2.0 * d)), params)
    if kind == "s2":
        params = {"k": k, "n": n}
        if k is None or n is None or k < 2 or n < 1:
            return inapplicable("pd_s2", "needs Serre level k >= 2 and n >= 1", params)
        base = (k + 3) / 2.0
        value = _log_base(base, (n - 1) * math.log(base) / k + 2.0 / (k + 3)) + 3.0
        return BoundValue("pd_s2", value, params)
    if kind == "faltings":
        params = {"n": n, "b": b}
        if n is None or b is None or n < 1 or b < 1:
            return inapplicable("pd_faltings", "needs n >= 1 and big height b >= 1", params)
        return BoundValue("pd_faltings", float(n - (n - 1) // b), params)
    if kind == "normal":
        params = {"n": n, "b": b}
        if n is None or b is None or n < 1 or b < 1:
            return inapplicable("pd_normal", "needs n >= 1 and big height b >= 1", params)
        return BoundValue("pd_normal", n - (2.0 * n - 1.0) / (b + 1.0), params)
    raise ValueError(f"unknown projective dimension bound kind {kind!r}")


def edge_degree_lower_bound(m: int, d: int, k: int) -> float:
    """Lower bound m / (log_{(k+4)/2}(d/(k+1)) + 3) on a witness subgraph's
    maximum edge degree, for a regularity witness on m vertices with maximum
    vertex degree d and k-steps-linear edge ideal."""
    if k < 1 or m < 1 or d < 1:
        raise ValueError("needs m, d, k >= 1")
    denom = _log_base((k + 4) / 2.0, d / (k + 1.0)) + 3.0
    if denom <= 0:
        raise ValueError("nonpositive denominator")
    return m / denom


def trim(g: Graph, reg_oracle: Callable[[Graph], int]) -> tuple[Graph, list]:
    """Iterated vertex deletion until no star-deletion drops regularity by 2+.

    Returns (G', removed labels) with reg(G) <= reg(G') and, for every vertex
    x of G', reg(G') <= reg(G' - star x) + 1.  While a vertex w violates the
    star condition, plain deletion of w cannot drop the regularity (checked
    against the oracle); ties break on the smallest index.
    """
    current = g
    removed = []
    while True:
        reg_here = reg_oracle(current)
        offender = None
        for w in range(current.n):
            if reg_here > reg_oracle(remove(current, w, "star")) + 1:
                offender = w
                break
        if offender is None:
            return current, removed
        after = remove(current, offender, "vertex")
        if reg_oracle(after) < reg_here:
            raise RuntimeError(
                f"oracle inconsistency: deleting vertex {current.label_of(offender)} dropped regularity")
        removed.append(current.label_of(offender))
        current = after


@dataclass(frozen=True)
class BootstrapReport:
    """Numeric check of the degree-to-vertex-count bound transfer conditions.

    Margins are signed so that a nonpositive margin (within tolerance) means
    the condition holds: monotonicity and the floor at f(1)=2 report
    (required - actual), concavity and the composition bound report
    (actual - allowed).
    """

    k: int
    grid_points: int
    tol: float
    monotone_margin: float
    concavity_margin: float
    floor_margin: float
    composition_margin: float
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "k": self.k, "grid_points": self.grid_points, "tol": self.tol,
            "monotone_margin": self.monotone_margin,
            "concavity_margin": self.concavity_margin,
            "floor_margin": self.floor_margin,
            "composition_margin": self.composition_margin,
            "passed": self.passed,
        }


def bootstrap_functions(k: int) -> tuple[Callable[[float], float], Callable[[float], float], Callable[[float], float]]:
    """The degree bound g, the vertex-count bound f and f' for linearity level k.

    g(x) = log_{(k+4)/2}((x+1)/(k+1)) + 3 bounds regularity by maximum degree;
    f is the closed form whose composition property g(1/f'(x) - 1) <= f(x)
    turns g into a bound in the number of vertices, normalized by f(1) = 2.
    """
    if k < 1:
        raise ValueError("needs k >= 1")
    base = (k + 4) / 2.0
    log_base = math.log(base)
    slope = log_base / (k + 1)
    shift = 2.0 / (k + 4)

    def g(x: float) -> float:
        return _log_base(base, (x + 1.0) / (k + 1.0)) + 3.0

    def f(x: float) -> float:
        return _log_base(base, slope * (x - 1.0) + shift) + 3.0

    def f_prime(x: float) -> float:
        return slope / (log_base * (slope * (x - 1.0) + shift))

    return g, f, f_prime


def bootstrap_verify(k: int, grid: Sequence[float], tol: float) -> BootstrapReport:
    """Verify on a grid that f is nondecreasing and concave-down, f(1) >= 2,
    and g(1/f'(x) - 1) <= f(x), with f' evaluated analytically."""
    if not grid:
        raise ValueError("empty grid")
    if tol < 0:
        raise ValueError("negative tolerance")
    g, f, f_prime = bootstrap_functions(k)
    xs = list(grid)
    vals = [f(x) for x in xs]
    if not all(math.isfinite(v) for v in vals):
        raise ValueError("non-finite bound value on the grid")
    monotone = 0.0
    for a, b in zip(vals, vals[1:]):
        monotone = max(monotone, a - b)
    concavity = -math.inf
    for i in range(1, len(xs) - 1):
        concavity = max(concavity, vals[i + 1] - 2.0 * vals[i] + vals[i - 1])
    if concavity == -math.inf:
        concavity = 0.0
    floor = 2.0 - f(1.0)
    composition = -math.inf
    for x, fx in zip(xs, vals):
        composition = max(composition, g(1.0 / f_prime(x) - 1.0) - fx)
    passed = (monotone <= tol and concavity <= tol and floor <= tol and composition <= tol)
    return BootstrapReport(k, len(xs), tol, monotone, concavity, floor, composition, passed)
