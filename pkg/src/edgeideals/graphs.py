"""Bitset-backed finite simple graphs.

Graphs live on at most 64 labelled vertices so every adjacency row fits in
a single machine word (a Python int used as a bitset).  All operations are
pure: they return new ``Graph`` values and never mutate, so graphs are safe
to share across threads and to use as dict keys.

Besides the basic constructions (complement, vertex/star deletion, induced
subgraphs) this module provides the structural predicates the rest of the
package consumes: gap-freeness, claw-freeness, induced-cycle spectra of a
graph, edge degrees, and the graph6 / edge-list codecs used for corpus I/O.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64

_MASK64 = (1 << 64) - 1


def bit_indices(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1`` with bitset adjacency rows.

    ``labels`` optionally records external vertex names; deletions preserve
    the surviving labels so a vertex of a subgraph can be traced back to the
    graph it came from.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple | None = None

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from vertex count")
        full = self.full_mask
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} references vertices >= {self.n}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for w in bit_indices(row):
                if not (self.adj[w] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count differs from vertex count")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1)
            w = v + 1
            while higher:
                if higher & 1:
                    yield (v, w)
                higher >>= 1
                w += 1

    @property
    def n_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def isolated_mask(self) -> int:
        m = 0
        for v, row in enumerate(self.adj):
            if not row:
                m |= 1 << v
        return m

    def label_of(self, v: int):
        return self.labels[v] if self.labels is not None else v


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None) -> Graph:
    """Construct a graph from an edge list; duplicate edges are deduplicated."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), tuple(labels) if labels is not None else None)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = tuple((full & ~row) & ~(1 << v) for v, row in enumerate(g.adj))
    return Graph(g.n, adj, g.labels)


def induced_subgraph(g: Graph, keep: int) -> Graph:
    """Induced subgraph on the vertex bitset ``keep``, reindexed compactly."""
    if keep & ~g.full_mask:
        raise ValueError("vertex set not contained in the graph")
    survivors = bit_indices(keep)
    index = {v: i for i, v in enumerate(survivors)}
    adj = []
    for v in survivors:
        row = 0
        for w in bit_indices(g.adj[v] & keep):
            row |= 1 << index[w]
        adj.append(row)
    labels = tuple(g.label_of(v) for v in survivors)
    return Graph(len(survivors), tuple(adj), labels)


def remove(g: Graph, v: int, mode: str = "vertex") -> Graph:
    """Delete a vertex (``mode="vertex"``) or its closed star (``mode="star"``).

    The star of ``v`` is ``v`` together with all its neighbours; the result
    is the induced subgraph on the survivors.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if mode == "vertex":
        gone = 1 << v
    elif mode == "star":
        gone = (1 << v) | g.adj[v]
    else:
        raise ValueError(f"unknown removal mode {mode!r}")
    return induced_subgraph(g, g.full_mask & ~gone)


def distance(g: Graph, u: int, v: int) -> int | float:
    """BFS distance between ``u`` and ``v``; ``math.inf`` when disconnected."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex out of range")
    seen = 1 << u
    frontier = seen
    d = 0
    while True:
        if (frontier >> v) & 1:
            return d
        nxt = 0
        for w in bit_indices(frontier):
            nxt |= g.adj[w]
        nxt &= ~seen
        if not nxt:
            return math.inf
        seen |= nxt
        frontier = nxt
        d += 1


def edge_degree(g: Graph, x: int, y: int) -> int:
    """Number of vertices adjacent to ``x`` or ``y``, for an edge ``(x, y)``."""
    if not g.has_edge(x, y):
        raise ValueError(f"({x},{y}) is not an edge")
    return (g.adj[x] | g.adj[y]).bit_count()


@dataclass(frozen=True)
class EdgeStats:
    """Degree statistics of a graph.

    ``d_max`` is the maximum vertex degree, ``d_edge_max`` the maximum edge
    degree |N(x) ∪ N(y)| over edges, and ``c_clawfree`` the maximum of
    deg(x) + floor(deg(y)/2) + 1 over ordered adjacent pairs (x, y).  The two
    edge statistics are None for edgeless graphs.  ``big_height`` is filled
    in by the ideal layer when known.
    """

    n: int
    d_max: int
    d_edge_max: int | None
    c_clawfree: int | None
    big_height: int | None = None


def degree_stats(g: Graph) -> EdgeStats:
    degs = [g.degree(v) for v in range(g.n)]
    d_max = max(degs, default=0)
    d_edge_max = None
    c_claw = None
    for x, y in g.edges():
        ed = (g.adj[x] | g.adj[y]).bit_count()
        d_edge_max = ed if d_edge_max is None else max(d_edge_max, ed)
        for a, b in ((x, y), (y, x)):
            c = degs[a] + degs[b] // 2 + 1
            c_claw = c if c_claw is None else max(c_claw, c)
    return EdgeStats(g.n, d_max, d_edge_max, c_claw)


def is_gap_free(g: Graph) -> tuple[bool, tuple[tuple[int, int], tuple[int, int]] | None]:
    """Whether no two vertex-disjoint edges lack a connecting edge.

    Returns ``(False, (e1, e2))`` with a witness pair of edges forming a gap,
    or ``(True, None)``.  Equivalent to the complement having no induced C4.
    """
    edges = list(g.edges())
    for i, (w, x) in enumerate(edges):
        ends1 = (1 << w) | (1 << x)
        reach1 = g.adj[w] | g.adj[x]
        for y, z in edges[i + 1:]:
            ends2 = (1 << y) | (1 << z)
            if ends1 & ends2:
                continue
            if not (reach1 & ends2):
                return False, ((w, x), (y, z))
    return True, None


def is_claw_free(g: Graph) -> tuple[bool, tuple[int, tuple[int, int, int]] | None]:
    """Whether the graph has no induced K_{1,3}.

    Returns ``(False, (center, (a, b, c)))`` with the three pairwise
    non-adjacent neighbours of the center, or ``(True, None)``.
    """
    for v in range(g.n):
        nb = g.adj[v]
        if nb.bit_count() < 3:
            continue
        nbs = bit_indices(nb)
        for i, a in enumerate(nbs):
            for b in nbs[i + 1:]:
                if (g.adj[a] >> b) & 1:
                    continue
                third = nb & ~g.adj[a] & ~g.adj[b] & ~(1 << a) & ~(1 << b)
                third &= ~((1 << (b + 1)) - 1)  # canonical: c > b > a
                if third:
                    c = (third & -third).bit_length() - 1
                    return False, (v, (a, b, c))
    return True, None


def induced_cycle_spectrum(g: Graph, max_len: int | None = None) -> frozenset[int]:
    """Lengths ℓ in [3, max_len] for which the graph has an induced ℓ-cycle.

    Depth-first induced-path extension: a path is grown only by vertices
    adjacent to its last vertex and non-adjacent to every earlier path vertex;
    a candidate adjacent to the path's first vertex closes an induced cycle
    and is never extended through.  Paths are rooted at their minimum vertex.
    """
    n = g.n
    limit = n if max_len is None else min(max_len, n)
    if limit < 3:
        return frozenset()
    want = set(range(3, limit + 1))
    found: set[int] = set()
    adj = g.adj
    for s in range(n):
        if not want - found:
            break
        above_s = ~((1 << (s + 1)) - 1)
        for u in bit_indices(adj[s] & above_s):
            above_u = ~((1 << (u + 1)) - 1)
            # stack frames: (last vertex, path length, path mask, neighbours of
            # internal path vertices); internal = path minus both endpoints
            stack = [(u, 2, (1 << s) | (1 << u), 0)]
            while stack:
                last, plen, pmask, blocked = stack.pop()
                cand = adj[last] & above_s & ~pmask & ~blocked
                closing = cand & adj[s]
                if plen + 1 <= limit and plen + 1 >= 3 and (closing & above_u):
                    found.add(plen + 1)
                    if not want - found:
                        return frozenset(found)
                if plen <= limit - 2:
                    grow = blocked | adj[last]
                    for w in bit_indices(cand & ~adj[s]):
                        stack.append((w, plen + 1, pmask | (1 << w), grow))
    return frozenset(found)


def linearity_steps_combinatorial(g: Graph) -> int | float:
    """Largest k ≥ 0 with no induced cycle of length 4..k+3 in the complement.

    Returns ``math.inf`` when the complement has no induced cycle of length
    at least 4 at all (the edge ideal then has regularity 2).
    """
    spectrum = induced_cycle_spectrum(complement(g))
    long_cycles = [c for c in spectrum if c >= 4]
    if not long_cycles:
        return math.inf
    return min(long_cycles) - 4


def maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitsets (pivoting Bron-Kerbosch).

    Runs Bron-Kerbosch with pivoting on the complement's adjacency, i.e.
    treats non-neighbours as the clique relation.
    """
    full = g.full_mask
    nonadj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = -1
        best = -1
        for v in bit_indices(pivot_pool):
            c = (p & nonadj[v]).bit_count()
            if c > best:
                best = c
                pivot = v
        for v in bit_indices(p & ~nonadj[pivot]):
            bit = 1 << v
            expand(r | bit, p & nonadj[v], x & nonadj[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        return [0]
    expand(0, full, 0)
    return out


# ---------------------------------------------------------------------------
# graph6 codec


def encode_graph6(g: Graph) -> str:
    """Standard graph6 line for a graph on at most 64 vertices.

    Column-wise upper-triangle bit packing, 6 bits per character offset by 63;
    vertex counts above 62 use the '~' long form.
    """
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    bits = []
    for j in range(1, n):
        col = j
        for i in range(j):
            bits.append((g.adj[i] >> col) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return head + "".join(chars)


def decode_graph6(line: str) -> Graph:
    """Parse one graph6 line (vertex count at most 64)."""
    text = line.strip()
    if not text:
        raise ValueError("empty graph6 line")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"malformed graph6 character {ch!r}")
    if text[0] == "~":
        if len(text) >= 2 and text[1] == "~":
            raise ValueError("graph6 vertex count beyond 64 unsupported")
        if len(text) < 4:
            raise ValueError("truncated graph6 long-form vertex count")
        n = ((ord(text[1]) - 63) << 12) | ((ord(text[2]) - 63) << 6) | (ord(text[3]) - 63)
        data = text[4:]
    else:
        n = ord(text[0]) - 63
        data = text[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) != need:
        raise ValueError(f"graph6 length mismatch: {len(data)} data characters for n={n} (expected {need})")
    adj = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            chunk = ord(data[pos // 6]) - 63
            bit = (chunk >> (5 - pos % 6)) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(adj))


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | None, str | None]]:
    """Parse a graph6 stream, yielding ``(line_no, graph, error)`` triples.

    Blank lines and the optional ``>>graph6<<`` header are skipped; a bad
    line yields ``(line_no, None, message)`` and processing continues.
    """
    for no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text.startswith(">>graph6<<"):
            text = text[len(">>graph6<<"):]
        if not text:
            continue
        try:
            yield no, decode_graph6(text), None
        except ValueError as exc:
            yield no, None, str(exc)


# ---------------------------------------------------------------------------
# plain edge-list format: first line "n m", then m lines "u v" (0-based)


def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except Exception as exc:
        raise ValueError(f"bad edge-list header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ValueError(f"edge-list declares {m} edges but has {len(lines) - 1} edge lines")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(tok) for tok in ln.split())
        except Exception as exc:
            raise ValueError(f"bad edge line {ln!r}") from exc
        edges.append((u, v))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.n_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# generators


class SplitMix64:
    """Deterministic 64-bit PRNG; same seed gives the same stream everywhere."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53


def complete_bipartite(m: int, k: int) -> Graph:
    if m < 0 or k < 0 or m + k > MAX_VERTICES:
        raise ValueError("bad complete bipartite sizes")
    return build_graph(m + k, [(i, m + j) for i in range(m) for j in range(k)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("paths need at least 1 vertex")
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def disjoint_edges(l: int) -> Graph:
    if l < 0 or 2 * l > MAX_VERTICES:
        raise ValueError("bad disjoint edge count")
    return build_graph(2 * l, [(2 * i, 2 * i + 1) for i in range(l)])


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi graph; deterministic in (n, p, seed) on every platform."""
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability outside [0, 1]")
    rng = SplitMix64(seed)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_float() < p:
                edges.append((i, j))
    return build_graph(n, edges)


ALL_LABELED_MAX_N = 6


def all_labeled(n: int) -> Iterator[Graph]:
    """Stream all 2^(n choose 2) labelled graphs on n vertices (n at most 6)."""
    if n > ALL_LABELED_MAX_N:
        raise ValueError(f"all_labeled capped at n={ALL_LABELED_MAX_N}")
    if n < 0:
        raise ValueError("negative vertex count")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        rest = mask
        idx = 0
        while rest:
            if rest & 1:
                i, j = pairs[idx]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            rest >>= 1
            idx += 1
        yield Graph(n, tuple(adj))
