"""Maximum average degree, the average-hereditary graph class and chromatic bounds."""

__version__ = "0.1.0"

from .bounds import (
    BoundsReport,
    bound_brooks,
    bound_delta,
    bound_mad,
    bound_soto,
    bounds_report,
    exact_case,
    lower_clique,
)
from .coloring import (
    Coloring,
    DegeneracyOrder,
    degeneracy_order,
    exact_chromatic,
    exact_coloring,
    greedy_color,
    validate_coloring,
)
from .density import (
    AhVerdict,
    DensestResult,
    densest_subgraph,
    goldberg_feasible,
    is_average_hereditary,
    mad,
    mad_bruteforce,
)
from .graph import (
    DegreeStats,
    Graph,
    average_degree,
    build_graph,
    compare_fraction,
    connected_components,
    cut_size,
    degree_stats,
    floor_fraction,
    induced_subgraph,
)
from .reduction import CnfFormula, KarpGraph, karp_graph, parse_cnf, predicted_stats, sat_bruteforce
