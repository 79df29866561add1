"""matchkit: exact matching polynomials, matching measures, and
monomer-dimer entropy for finite graphs, with a verification harness for
the inequalities that hold on vertex-transitive bipartite graphs."""

from .graphs import (Graph, cycle, path, complete_bipartite, hypercube, torus,
                     heawood, random_regular_bipartite, generate,
                     delete_vertices, delete_edge, disjoint_union, girth,
                     verify_transitivity, verify_edge_transitivity,
                     ball_statistics, to_edge_list, from_edge_list,
                     to_json, from_json)
from .matchpoly import (MatchPoly, matching_polynomial, matching_count_prefix,
                        top_match_counts, brute_force_match_counts,
                        check_identity, path_residual_oracle)
from .spectra import (Spectrum, RootInterval, isolate_spectrum,
                      heilmann_lieb_check, measure_moments, tree_moment,
                      kesten_mckay_density, MatchingMeasure, matching_measure)
from .entropy import (density, invert_density, entropy_value, gurvits_bound,
                      gurvits_perfect, EntropyPoint, entropy_point,
                      entropy_curve, default_p_grid, GapCertificate,
                      gap_certificate, cycle_gap_lower_bound, tree_activity,
                      tree_density, FederbushSeries, federbush_series)
from .verify import (CheckReport, CHECK_IDS, run_check, run_corpus,
                     default_corpus, reports_to_jsonl)
from .limits import (torus_entropy_sequence, girth_entropy_gap,
                     moment_convergence, catalan_over_pi)
from .degenerate import (edge_probability, vertex_probability_sum, s_value,
                         build_degenerate, degenerate_report, check_trivial)

__version__ = "0.1.0"
