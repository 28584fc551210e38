"""Algorithms on weakly modular graphs.

Start with :class:`Graph` (or :func:`parse_graph`) and :func:`recognize`.
"""
from .core import (VertexSet, MetricTriangle, gate, gated_hull, interval, is_convex, is_gated,
                   max_metric_triangle_side, pair_hull, quasi_median)
from .cover import CoverBall, universal_cover_ball
from .errors import (BudgetExceeded, CapReached, DisconnectedGraphError, GraphFormatError,
                     InvariantError, NotAClosedWalk, NotApplicable, RadiusTooLarge, RankDiverges)
from .graph import Graph, all_pairs_distances, parse_graph, read_graph, serialize_graph, write_graph
from .metric import (BfsOrder, DiscFilling, HyperbolicityReport, bfs_order, fill_cycle,
                     hyperbolicity_delta, interval_thinness, is_distance_preserving,
                     max_isometric_grid_side, replay, verify_hyperbolicity_bounds)
from .patterns import PATTERNS, PatternHit, find_pattern
from .recognition import (ClassReport, Orientation, Verdict, check_clique_helly, check_dismantlable,
                          check_dual_polar, check_helly, check_metric_family, check_pre_median,
                          check_prime_pre_median, check_swm, check_weakly_modular,
                          decide_simple_connectivity, find_admissible_orientation, recognize)
from .swm import (BarycentricGraph, BooleanGatedPoset, NormalPath, barycentric_graph,
                  barycentric_iterate, boolean_gated_sets, cube_dimension, delta_gate,
                  diagonal_extension, geodesic_extension_check, is_boolean_pair, normal_bg_path,
                  partial_thickening, thickening, verify_fellow_traveler, wm_skeleton)
from .zeroext import ZeroExtInstance, ZeroExtSolution, approx2, cost, solve_exact

__version__ = "0.1.0"
