"""Exact homological invariants of edge ideals of small graphs.

Computes multigraded Betti tables of squarefree monomial ideals from reduced
simplicial homology of restricted Stanley-Reisner complexes, derives
Castelnuovo-Mumford regularity and projective dimension, and machine-checks
the classical structural results relating them to graph data (Alexander
duality, linearity vs induced cycles of the complement, degree and
vertex-count bounds) over exhaustive and random graph corpora.
"""

from .graphs import (Graph, EdgeStats, build_graph, complement, remove,
                     induced_subgraph, edge_degree, degree_stats, distance,
                     is_gap_free, is_claw_free, induced_cycle_spectrum,
                     linearity_steps_combinatorial, maximal_independent_sets,
                     encode_graph6, decode_graph6, parse_edge_list,
                     format_edge_list, complete_bipartite, cycle, path,
                     disjoint_edges, gnp, all_labeled, SplitMix64)
from .ideals import (SquarefreeIdeal, SimplicialComplex, squarefree_ideal,
                     make_complex, edge_ideal, stanley_reisner_complex,
                     alexander_dual, big_height, cubic_thickening,
                     minimal_transversals, add_variable, colon_variable,
                     format_ideal, parse_ideal)
from .homology import (GF2, RATIONAL, HomologyProfile, restrict,
                       reduced_homology_ranks, gf2_rank, bareiss_rank)
from .betti import (BettiTable, InvariantRecord, TeraiReport, LinearityReport,
                    betti_table, invariants, terai_check, linearity_cross_check)
from .bounds import (BoundValue, BootstrapReport, reg_bound, pd_bound,
                     edge_degree_lower_bound, trim, bootstrap_verify,
                     bootstrap_functions)
from .verify import (CheckResult, BoundReport, BoundCheck, CorpusResult,
                     verify_reg_recursion, verify_terai, verify_linearity,
                     verify_froberg, verify_distance2, verify_nevo,
                     verify_pd_splitting, verify_lyu_neighborhoods,
                     verify_cubic_reg, verify_all_bounds, run_corpus,
                     run_checks, corpus_from_graphs, corpus_from_lines,
                     reg_of_graph, graph_invariants, ideal_invariants)

__version__ = "0.1.0"
