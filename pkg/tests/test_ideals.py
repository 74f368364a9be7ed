"""Ideal layer: edge ideals, Stanley-Reisner facets, duals, transversals."""

import pytest

from edgeideals.graphs import (all_labeled, build_graph, complete_bipartite,
                               cycle, disjoint_edges, gnp, path, SplitMix64)
from edgeideals.ideals import (SquarefreeIdeal, active_vertices, add_variable,
                               alexander_dual, big_height, colon_variable,
                               cubic_thickening, edge_ideal, format_ideal,
                               make_complex, minimal_transversals, parse_ideal,
                               squarefree_ideal, stanley_reisner_complex)

from conftest import brute_maximal_independent_sets, brute_minimal_covers


def test_edge_ideal_examples():
    k2 = edge_ideal(build_graph(2, [(0, 1)]))
    assert k2.n_vars == 2 and k2.gens == {0b11}
    c4 = edge_ideal(cycle(4))
    assert c4.gens == {0b0011, 0b0110, 0b1100, 0b1001}
    zero = edge_ideal(build_graph(3, []))
    assert zero.is_zero and zero.n_vars == 0
    # isolated vertices are stripped and indices compacted
    g = build_graph(4, [(1, 3)])
    ideal = edge_ideal(g)
    assert ideal.n_vars == 2 and ideal.gens == {0b11}
    assert active_vertices(g) == (1, 3)


def test_ideal_validation():
    with pytest.raises(ValueError):
        SquarefreeIdeal(2, frozenset({0b01, 0b11}))  # not an antichain
    with pytest.raises(ValueError):
        SquarefreeIdeal(2, frozenset({0}))  # empty support
    with pytest.raises(ValueError):
        SquarefreeIdeal(1, frozenset({0b10}))  # out of range
    assert squarefree_ideal(3, [[0, 1], [0, 1, 2]]).gens == {0b011}
    unit = squarefree_ideal(3, [], unit=True)
    assert unit.is_unit and not unit.is_zero


def test_stanley_reisner_examples():
    assert stanley_reisner_complex(edge_ideal(build_graph(2, [(0, 1)]))).facets == {0b01, 0b10}
    assert stanley_reisner_complex(edge_ideal(cycle(4))).facets == {0b0101, 0b1010}
    zero3 = SquarefreeIdeal(3, frozenset())
    assert stanley_reisner_complex(zero3).facets == {0b111}
    with pytest.raises(ValueError):
        stanley_reisner_complex(squarefree_ideal(2, [], unit=True))
    # mixed-degree ideal goes through the transversal route
    mixed = squarefree_ideal(3, [[1], [0, 2]])
    assert stanley_reisner_complex(mixed).facets == {0b001, 0b100}


def test_stanley_reisner_facets_are_maximal_independent_sets():
    for g in all_labeled(5):
        ideal = edge_ideal(g)
        if ideal.is_zero:
            continue
        if g.isolated_mask:
            continue  # stripping reindexes; compare on graphs used as-is
        facets = stanley_reisner_complex(ideal).facets
        assert facets == brute_maximal_independent_sets(g)


def test_alexander_dual_examples():
    assert alexander_dual(edge_ideal(build_graph(2, [(0, 1)]))).gens == {0b01, 0b10}
    assert alexander_dual(edge_ideal(path(3))).gens == {0b010, 0b101}
    assert alexander_dual(edge_ideal(cycle(4))).gens == {0b0101, 0b1010}
    with pytest.raises(ValueError):
        alexander_dual(SquarefreeIdeal(3, frozenset()))


def test_dual_gens_are_minimal_covers_and_double_dual():
    rng = SplitMix64(31)
    graphs = list(all_labeled(5)) + [gnp(7, 0.5, rng.next_u64()) for _ in range(30)]
    for g in graphs:
        ideal = edge_ideal(g)
        if ideal.is_zero:
            continue
        dual = alexander_dual(ideal)
        assert dual.gens == brute_minimal_covers(ideal.n_vars, list(ideal.gens))
        assert alexander_dual(dual) == ideal


def test_double_dual_on_general_ideals():
    rng = SplitMix64(32)
    for _ in range(60):
        n = 3 + rng.next_u64() % 4
        supports = set()
        for _ in range(2 + rng.next_u64() % 4):
            mask = 1 + rng.next_u64() % ((1 << n) - 1)
            supports.add(mask)
        ideal = squarefree_ideal(n, supports)
        assert alexander_dual(alexander_dual(ideal)) == ideal


def test_transversals_meet_every_edge_minimally():
    for g in all_labeled(5):
        ideal = edge_ideal(g)
        if ideal.is_zero:
            continue
        for t in minimal_transversals(ideal):
            assert all(gsup & t for gsup in ideal.gens)
            for v in range(ideal.n_vars):
                if (t >> v) & 1:
                    smaller = t & ~(1 << v)
                    assert any(not (gsup & smaller) for gsup in ideal.gens)


def test_big_height_examples():
    assert big_height(edge_ideal(path(3))) == 2
    assert big_height(edge_ideal(cycle(5))) == 3
    for d in range(1, 6):
        assert big_height(edge_ideal(complete_bipartite(1, d))) == d


def test_cubic_thickening():
    assert cubic_thickening(path(3)).gens == {0b111}
    assert cubic_thickening(cycle(3)).gens == {0b111}
    two = cubic_thickening(disjoint_edges(2))
    # every 3-subset of 4 variables contains one of the two disjoint edges
    assert two.gens == {0b0111, 0b1011, 0b1101, 0b1110}
    for gsup in cubic_thickening(cycle(5)).gens:
        assert gsup.bit_count() == 3
    c5 = cycle(5)
    edges = set(edge_ideal(c5).gens)
    for gsup in cubic_thickening(c5).gens:
        assert any(e & ~gsup == 0 for e in edges)
    with pytest.raises(ValueError):
        cubic_thickening(build_graph(2, [(0, 1)]))
    with pytest.raises(ValueError):
        cubic_thickening(build_graph(3, []))
    # a K2 with an isolated third vertex still has only 2 active variables
    with pytest.raises(ValueError):
        cubic_thickening(build_graph(3, [(0, 1)]))


def test_add_and_colon_variable():
    ideal = edge_ideal(path(3))  # (x0x1, x1x2)
    assert add_variable(ideal, 0).gens == {0b001, 0b110}
    assert colon_variable(ideal, 1).gens == {0b001, 0b100}
    assert colon_variable(ideal, 0).gens == {0b010}  # x1 absorbs x1x2
    vars_ideal = squarefree_ideal(2, [[0]])
    assert colon_variable(vars_ideal, 0).is_unit


def test_make_complex_maximalizes():
    cx = make_complex(3, [0b001, 0b011, 0b100])
    assert cx.facets == {0b011, 0b100}
    void = make_complex(2, [])
    assert void.is_void
    empty = make_complex(2, [0])
    assert empty.is_empty_complex and empty.dim == -1


def test_ideal_text_roundtrip():
    ideal = edge_ideal(cycle(5))
    text = format_ideal(ideal)
    assert text.splitlines()[0] == "5 5"
    assert parse_ideal(text) == ideal
    zero = SquarefreeIdeal(4, frozenset())
    assert parse_ideal(format_ideal(zero)) == zero
    with pytest.raises(ValueError):
        parse_ideal("2 1\n")
    with pytest.raises(ValueError):
        parse_ideal("")
