"""Squarefree monomial ideals and their Stanley-Reisner combinatorics.

An ideal is stored as the antichain of its minimal generator supports, each
support a vertex bitset over ``n_vars`` variables.  The zero ideal has no
generators; the unit ideal carries an explicit flag (never an empty-support
generator) because downstream conventions special-case both.

The module houses the edge ideal of a graph, Stanley-Reisner / independence
complexes, Alexander duals via minimal transversal enumeration, big height,
and the squarefree cubic thickening of an edge ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, bit_indices, build_graph, maximal_independent_sets


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Antichain of minimal generator supports over ``n_vars`` variables."""

    n_vars: int
    gens: frozenset[int]
    unit: bool = False

    def __post_init__(self):
        if self.unit and self.gens:
            raise ValueError("unit ideal carries no generators")
        full = (1 << self.n_vars) - 1
        for gsup in self.gens:
            if gsup == 0:
                raise ValueError("empty generator support; use the unit flag")
            if gsup & ~full:
                raise ValueError("generator references variables >= n_vars")
        for a in self.gens:
            for b in self.gens:
                if a != b and a & ~b == 0:
                    raise ValueError("generators do not form an antichain")

    @property
    def is_zero(self) -> bool:
        return not self.unit and not self.gens

    @property
    def is_unit(self) -> bool:
        return self.unit

    def gens_sorted(self) -> list[int]:
        return sorted(self.gens, key=lambda m: (m.bit_count(), tuple(bit_indices(m))))

    def generator_degrees(self) -> set[int]:
        return {gsup.bit_count() for gsup in self.gens}


def _minimalize(supports: Iterable[int]) -> frozenset[int]:
    """Drop duplicates and strict supersets, keeping the antichain of minima."""
    sups = sorted(set(supports), key=lambda m: m.bit_count())
    keep: list[int] = []
    for s in sups:
        if not any(k & ~s == 0 for k in keep):
            keep.append(s)
    return frozenset(keep)


def squarefree_ideal(n_vars: int, supports: Iterable[Iterable[int] | int], unit: bool = False) -> SquarefreeIdeal:
    """Build an ideal from variable-index supports, minimalizing to an antichain."""
    if unit:
        return SquarefreeIdeal(n_vars, frozenset(), unit=True)
    masks = []
    for sup in supports:
        masks.append(sup if isinstance(sup, int) else sum(1 << v for v in set(sup)))
    if any(m == 0 for m in masks):
        raise ValueError("empty generator support; use the unit flag")
    return SquarefreeIdeal(n_vars, _minimalize(masks))


def active_vertices(g: Graph) -> tuple[int, ...]:
    """Non-isolated vertices of ``g`` in ascending order."""
    return tuple(v for v in range(g.n) if g.adj[v])


def edge_ideal(g: Graph) -> SquarefreeIdeal:
    """Edge ideal of a graph: one degree-2 generator per edge.

    Isolated vertices are stripped first (they do not change regularity or
    projective dimension); an edgeless graph yields the zero ideal.
    """
    active = active_vertices(g)
    index = {v: i for i, v in enumerate(active)}
    gens = frozenset((1 << index[u]) | (1 << index[v]) for u, v in g.edges())
    return SquarefreeIdeal(len(active), gens)


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet list over ``n_vars`` vertices.

    The void complex (no faces at all) has an empty facet set; the complex
    whose only face is the empty set has the single facet ``0``.
    """

    n_vars: int
    facets: frozenset[int]

    def __post_init__(self):
        full = (1 << self.n_vars) - 1
        for f in self.facets:
            if f & ~full:
                raise ValueError("facet references vertices >= n_vars")
        for a in self.facets:
            for b in self.facets:
                if a != b and a & ~b == 0:
                    raise ValueError("facets do not form an antichain")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty_complex(self) -> bool:
        return self.facets == frozenset({0})

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex.  Undefined (error) when void."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def facets_sorted(self) -> list[int]:
        return sorted(self.facets, key=lambda m: tuple(bit_indices(m)))


def make_complex(n_vars: int, facets: Iterable[int]) -> SimplicialComplex:
    """Simplicial complex from a face list, keeping only the maximal faces."""
    faces = sorted(set(facets), key=lambda m: -m.bit_count())
    keep: list[int] = []
    for f in faces:
        if not any(f & ~k == 0 for k in keep):
            keep.append(f)
    return SimplicialComplex(n_vars, frozenset(keep))


def minimal_transversals(ideal: SquarefreeIdeal) -> frozenset[int]:
    """Minimal vertex sets meeting every generator support.

    Branch-and-bound: pick an uncovered generator and branch on its elements,
    excluding the elements already branched over at that node so each cover is
    generated once; the output is minimalized.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("transversals undefined for the zero or unit ideal")
    gens = ideal.gens_sorted()
    covers: list[int] = []

    def branch(chosen: int, banned: int) -> None:
        uncovered = next((gsup for gsup in gens if not gsup & chosen), None)
        if uncovered is None:
            covers.append(chosen)
            return
        avail = uncovered & ~banned
        local_ban = banned
        for v in bit_indices(avail):
            branch(chosen | (1 << v), local_ban)
            local_ban |= 1 << v

    branch(0, 0)
    return _minimalize(covers)


def stanley_reisner_complex(ideal: SquarefreeIdeal) -> SimplicialComplex:
    """Complex whose faces are the squarefree monomials outside the ideal.

    For an edge ideal this is the independence complex of the graph and the
    facets (maximal independent sets) are enumerated directly by pivoting
    Bron-Kerbosch; in general the facets are the complements of the minimal
    transversals of the generator hypergraph.
    """
    if ideal.is_unit:
        raise ValueError("the unit ideal has a void Stanley-Reisner complex")
    full = (1 << ideal.n_vars) - 1
    if ideal.is_zero:
        return SimplicialComplex(ideal.n_vars, frozenset({full}))
    if ideal.generator_degrees() == {2}:
        host = build_graph(ideal.n_vars, [tuple(bit_indices(gsup)) for gsup in ideal.gens])
        return SimplicialComplex(ideal.n_vars, frozenset(maximal_independent_sets(host)))
    facets = frozenset(full & ~t for t in minimal_transversals(ideal))
    return SimplicialComplex(ideal.n_vars, facets)


def alexander_dual(ideal: SquarefreeIdeal) -> SquarefreeIdeal:
    """Ideal generated by the minimal prime supports (minimal transversals)."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("Alexander dual undefined for the zero or unit ideal")
    return SquarefreeIdeal(ideal.n_vars, minimal_transversals(ideal))


def big_height(ideal: SquarefreeIdeal) -> int:
    """Maximum size of a minimal transversal (largest minimal prime height)."""
    return max(t.bit_count() for t in minimal_transversals(ideal))


def cubic_thickening(g: Graph) -> SquarefreeIdeal:
    """Squarefree cubics through the edges: supports {x,y,z} containing an edge.

    Works over the non-isolated vertices of ``g``; needs at least 3 of them,
    otherwise no squarefree cubic exists and the construction degenerates.
    """
    ideal = edge_ideal(g)
    n = ideal.n_vars
    if ideal.is_zero:
        raise ValueError("cubic thickening needs at least one edge")
    if n < 3:
        raise ValueError("cubic thickening needs at least 3 non-isolated vertices")
    gens = set()
    for e in ideal.gens:
        for v in range(n):
            bit = 1 << v
            if not e & bit:
                gens.add(e | bit)
    return SquarefreeIdeal(n, frozenset(gens))


def add_variable(ideal: SquarefreeIdeal, v: int) -> SquarefreeIdeal:
    """The ideal (I, x_v): generators involving x_v become redundant."""
    if ideal.is_unit:
        return ideal
    bit = 1 << v
    gens = frozenset(gsup for gsup in ideal.gens if not gsup & bit) | {bit}
    return SquarefreeIdeal(ideal.n_vars, gens)


def colon_variable(ideal: SquarefreeIdeal, v: int) -> SquarefreeIdeal:
    """The colon ideal (I : x_v), again squarefree.

    Each generator drops x_v from its support; if some generator was x_v
    itself the colon is the unit ideal.
    """
    if ideal.is_unit or ideal.is_zero:
        return ideal
    bit = 1 << v
    supports = [gsup & ~bit for gsup in ideal.gens]
    if any(s == 0 for s in supports):
        return SquarefreeIdeal(ideal.n_vars, frozenset(), unit=True)
    return SquarefreeIdeal(ideal.n_vars, _minimalize(supports))


# ---------------------------------------------------------------------------
# ideal text format: header "n_vars k", then one generator per line as sorted
# variable indices separated by spaces


def format_ideal(ideal: SquarefreeIdeal) -> str:
    if ideal.is_unit:
        raise ValueError("no text form for the unit ideal")
    lines = [f"{ideal.n_vars} {len(ideal.gens)}"]
    for gsup in ideal.gens_sorted():
        lines.append(" ".join(str(v) for v in bit_indices(gsup)))
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> SquarefreeIdeal:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty ideal input")
    try:
        n_vars, k = (int(tok) for tok in lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad ideal header {lines[0]!r}") from exc
    if len(lines) - 1 != k:
        raise ValueError(f"ideal declares {k} generators but has {len(lines) - 1} lines")
    supports = []
    for ln in lines[1:]:
        try:
            idxs = [int(tok) for tok in ln.split()]
        except Exception as exc:
            raise ValueError(f"bad generator line {ln!r}") from exc
        if not idxs:
            raise ValueError("empty generator line")
        supports.append(idxs)
    return squarefree_ideal(n_vars, supports)
