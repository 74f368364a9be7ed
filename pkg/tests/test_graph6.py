"""graph6 codec against fixed strings and the networkx reference codec."""

import networkx as nx
import pytest

from edgeideals.graphs import (SplitMix64, build_graph, cycle, decode_graph6,
                               encode_graph6, format_edge_list, gnp,
                               iter_graph6, parse_edge_list)


def nx_roundtrip(g6: str) -> set[tuple[int, int]]:
    return {tuple(sorted(e)) for e in nx.from_graph6_bytes(g6.encode()).edges()}


def test_fixed_strings():
    k2 = decode_graph6("A_")
    assert k2.n == 2 and list(k2.edges()) == [(0, 1)]
    k3 = decode_graph6("Bw")
    assert k3.n == 3 and k3.n_edges == 3
    single = build_graph(1, [])
    assert encode_graph6(single) == "@"
    assert encode_graph6(build_graph(0, [])) == "?"
    assert encode_graph6(k2) == "A_"
    assert encode_graph6(k3) == "Bw"


def test_against_reference_codec():
    rng = SplitMix64(2024)
    for _ in range(300):
        n = 1 + rng.next_u64() % 30
        g = gnp(n, rng.next_float(), rng.next_u64())
        mine = encode_graph6(g)
        ref = nx.empty_graph(n)
        ref.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(ref, header=False).decode().strip()
        assert mine == theirs
        assert nx_roundtrip(mine) == set(g.edges())


def test_roundtrip_random_graphs():
    rng = SplitMix64(99)
    for _ in range(10_000):
        n = rng.next_u64() % 41
        g = gnp(n, rng.next_float(), rng.next_u64())
        assert decode_graph6(encode_graph6(g)).adj == g.adj


def test_long_form_63_and_64_vertices():
    for n in (63, 64):
        g = gnp(n, 0.5, n)
        line = encode_graph6(g)
        assert line.startswith("~")
        assert decode_graph6(line).adj == g.adj
        ref = nx.empty_graph(n)
        ref.add_edges_from(g.edges())
        assert line == nx.to_graph6_bytes(ref, header=False).decode().strip()


def test_decode_errors():
    with pytest.raises(ValueError):
        decode_graph6("A")  # missing data character
    with pytest.raises(ValueError):
        decode_graph6("A_X")  # extra data
    with pytest.raises(ValueError):
        decode_graph6("B\x1f")  # character below 63
    with pytest.raises(ValueError):
        decode_graph6("")
    with pytest.raises(ValueError):
        decode_graph6("~~AAAAAA")  # 8-byte form: beyond 64 vertices


def test_iter_graph6_stream():
    lines = [">>graph6<<A_", "", "Bw", "A", "D?{"]
    parsed = list(iter_graph6(lines))
    assert [no for no, g, err in parsed] == [1, 3, 4, 5]
    assert parsed[0][1].n == 2 and parsed[0][2] is None
    assert parsed[2][1] is None and "mismatch" in parsed[2][2]
    assert parsed[3][1].n == 5


def test_edge_list_roundtrip():
    g = cycle(5)
    text = format_edge_list(g)
    assert text.splitlines()[0] == "5 5"
    assert parse_edge_list(text).adj == g.adj
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")  # count mismatch
    with pytest.raises(ValueError):
        parse_edge_list("nope\n")
    with pytest.raises(ValueError):
        parse_edge_list("")
