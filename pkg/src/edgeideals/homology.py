"""Reduced simplicial homology ranks over GF(2) or the rationals.

The reduced chain complex includes the empty face in dimension -1, so the
complex {∅} has one dimension of homology there; this bookkeeping is what
feeds squarefree Betti number computations, where ideals containing
variables contribute through exactly that rank.

GF(2) is the default field: boundary matrices become int bitsets and ranks
come from bit-packed Gaussian elimination.  The rational option runs
fraction-free (Bareiss) elimination over exact Python integers, so there is
no overflow at any size this package handles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ideals import SimplicialComplex, make_complex
from .graphs import bit_indices

GF2 = "gf2"
RATIONAL = "rational"

FACE_GUARD = 1 << 22


def validate_field(field: str) -> str:
    if field not in (GF2, RATIONAL):
        raise ValueError(f"unknown field {field!r}; use {GF2!r} or {RATIONAL!r}")
    return field


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of reduced homology by dimension, from -1 up to the dimension.

    The void complex has an empty rank map; the complex {∅} has rank 1 in
    dimension -1 and nothing else.
    """

    ranks: dict[int, int]

    def rank(self, d: int) -> int:
        return self.ranks.get(d, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: r for d, r in sorted(self.ranks.items()) if r}

    def euler_reduced(self) -> int:
        return sum((-1) ** d * r for d, r in self.ranks.items())


def restrict(cx: SimplicialComplex, sigma: int) -> SimplicialComplex:
    """Subcomplex of the faces contained in ``sigma``."""
    if sigma & ~((1 << cx.n_vars) - 1):
        raise ValueError("restriction set not contained in the vertex set")
    if cx.is_void:
        return cx
    return make_complex(cx.n_vars, (f & sigma for f in cx.facets))


def gf2_rank(vectors: list[int]) -> int:
    """Rank over GF(2) of bitset row vectors, by elimination on leading bits."""
    pivots: dict[int, int] = {}
    rank = 0
    for vec in vectors:
        while vec:
            top = vec.bit_length() - 1
            row = pivots.get(top)
            if row is None:
                pivots[top] = vec
                rank += 1
                break
            vec ^= row
    return rank


def bareiss_rank(rows: list[list[int]]) -> int:
    """Exact integer matrix rank via fraction-free Gaussian elimination."""
    if not rows or not rows[0]:
        return 0
    mat = [row[:] for row in rows]
    n_rows = len(mat)
    n_cols = len(mat[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if mat[r][col]), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        scale_is_one = pivot == prev
        for r in range(rank + 1, n_rows):
            factor = mat[r][col]
            if factor == 0 and scale_is_one:
                continue  # the row transform is the identity here
            row = mat[r]
            top = mat[rank]
            for c in range(col + 1, n_cols):
                row[c] = (row[c] * pivot - factor * top[c]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank


def _faces_from_facets(facets: list[int]) -> dict[int, list[int]]:
    """All faces of a facet list, grouped by dimension and sorted lexicographically.

    Depth-first subset generation, adding vertices in increasing order and
    pruning sets contained in no facet, so each face appears exactly once.
    """
    if not facets:
        return {}
    union = 0
    for f in facets:
        union |= f
    by_dim: dict[int, list[int]] = {-1: [0]}
    count = 1
    stack = [(0, union)]
    while stack:
        face, cand = stack.pop()
        for v in bit_indices(cand):
            new = face | (1 << v)
            if not any(new & ~f == 0 for f in facets):
                continue
            count += 1
            if count > FACE_GUARD:
                raise ValueError("face count exceeds the memory guard 2^22")
            by_dim.setdefault(new.bit_count() - 1, []).append(new)
            stack.append((new, cand & ~((1 << (v + 1)) - 1)))
    for d in by_dim:
        by_dim[d].sort(key=lambda m: tuple(bit_indices(m)))
    return by_dim


def ranks_from_faces(by_dim: dict[int, list[int]], field: str = GF2) -> HomologyProfile:
    """Reduced homology ranks from an explicit face list.

    Boundary maps use vertex-sorted simplices with alternating signs (signs
    vanish over GF(2)); the rank in dimension d is
    nullity(boundary_d) - rank(boundary_{d+1}).
    """
    validate_field(field)
    if not by_dim:
        return HomologyProfile({})
    top = max(by_dim)
    f_count = {d: len(by_dim.get(d, ())) for d in range(-1, top + 1)}
    # boundary_rank[d] = rank of the map from d-chains to (d-1)-chains
    boundary_rank = {d: 0 for d in range(-1, top + 2)}
    for d in range(0, top + 1):
        faces = by_dim.get(d, [])
        if not faces:
            continue
        lower_index = {f: i for i, f in enumerate(by_dim.get(d - 1, []))}
        if field == GF2:
            vectors = []
            for face in faces:
                vec = 0
                for v in bit_indices(face):
                    vec |= 1 << lower_index[face ^ (1 << v)]
                vectors.append(vec)
            boundary_rank[d] = gf2_rank(vectors)
        else:
            n_low = len(lower_index)
            rows = []
            for face in faces:
                row = [0] * n_low
                for pos, v in enumerate(bit_indices(face)):
                    row[lower_index[face ^ (1 << v)]] = -1 if pos % 2 else 1
                rows.append(row)
            boundary_rank[d] = bareiss_rank(rows)
    ranks = {}
    for d in range(-1, top + 1):
        ranks[d] = f_count[d] - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
    return HomologyProfile(ranks)


def reduced_homology_ranks(cx: SimplicialComplex, field: str = GF2) -> HomologyProfile:
    """Reduced homology ranks of a complex given by its facets."""
    validate_field(field)
    if cx.is_void:
        return HomologyProfile({})
    return ranks_from_faces(_faces_from_facets(cx.facets_sorted()), field)
