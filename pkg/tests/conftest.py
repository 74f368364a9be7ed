"""Shared brute-force oracles for the test suite.

Everything here recomputes expected values by exhaustive enumeration,
independently of the implementation paths under test.
"""

from __future__ import annotations

from itertools import combinations

import pytest

from edgeideals.graphs import (Graph, bit_indices, build_graph, induced_subgraph,
                               mask_of)


def brute_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bit_indices(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def brute_induced_cycle_lengths(g: Graph, max_len: int | None = None) -> set[int]:
    """Induced cycle lengths by checking every vertex subset directly."""
    limit = g.n if max_len is None else min(max_len, g.n)
    out = set()
    for size in range(3, limit + 1):
        for subset in combinations(range(g.n), size):
            h = induced_subgraph(g, mask_of(subset))
            if (h.n_edges == size and all(h.degree(v) == 2 for v in range(h.n))
                    and brute_connected(h)):
                out.add(size)
                break
    return out


def brute_minimal_covers(n: int, supports: list[int]) -> set[int]:
    """Minimal transversals of a support hypergraph by subset sweep."""
    covers = [s for s in range(1 << n) if all(gsup & s for gsup in supports)]
    minimal = set()
    for s in covers:
        if not any(t != s and t & ~s == 0 for t in covers):
            minimal.add(s)
    return minimal


def brute_maximal_independent_sets(g: Graph) -> set[int]:
    independent = []
    for s in range(1 << g.n):
        ok = True
        for v in bit_indices(s):
            if g.adj[v] & s:
                ok = False
                break
        if ok:
            independent.append(s)
    maximal = set()
    for s in independent:
        if not any(t != s and s & ~t == 0 for t in independent):
            maximal.add(s)
    return maximal


def brute_is_claw_free(g: Graph) -> bool:
    for v in range(g.n):
        nbs = bit_indices(g.adj[v])
        for trio in combinations(nbs, 3):
            a, b, c = trio
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def brute_is_gap_free(g: Graph) -> bool:
    edges = list(g.edges())
    for i, (w, x) in enumerate(edges):
        for (y, z) in edges[i + 1:]:
            if len({w, x, y, z}) < 4:
                continue
            joined = any(g.has_edge(a, b) for a in (w, x) for b in (y, z))
            if not joined:
                return False
    return True


@pytest.fixture
def named_graphs():
    from edgeideals.graphs import complete_bipartite, cycle, disjoint_edges, path

    return {
        "K2": build_graph(2, [(0, 1)]),
        "P3": path(3),
        "P4": path(4),
        "C4": cycle(4),
        "C5": cycle(5),
        "C6": cycle(6),
        "K3": cycle(3),
        "K13": complete_bipartite(1, 3),
        "K23": complete_bipartite(2, 3),
        "2K2": disjoint_edges(2),
    }
