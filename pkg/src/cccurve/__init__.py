"""Centrality comparison curves: rank-overlap comparison of graph centrality measures."""

__version__ = "0.1.0"

from .centrality import (Measure, ScoreVector, betweenness, closeness, compute,
                         degree, eigenvector, harmonic, in_degree, katz, load,
                         out_degree, pagerank, parse_measure, random_scores,
                         spectral_radius)
from .curve import (CccCurve, ccc, ccco, curve_distance, overlap_counts,
                    reference_curves)
from .ensemble import EnsembleSummary, run_ensemble
from .errors import (CCCError, ConvergenceError, DegenerateSpectrumError,
                     DivergenceError, GenerationError, KernelError, ParseError)
from .generators import (Graphon, ModelSpec, directed_config_model,
                         directed_stub_matching, generate, graphon_sample,
                         named_graphon, pareto_degree_sequence,
                         undirected_config_model)
from .graph import Graph, from_edge_list, load_graph, parse_snap, read_snap
from .ordering import (InducedOrder, induced_order, induced_order_degenerate,
                       shared_uniforms)
from .seeding import sub_seed
