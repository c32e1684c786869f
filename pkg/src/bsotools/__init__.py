"""First Banhatti-Sombor index, companion degree-based indices, their bounds,
and extremal trees."""

from .bounds import BoundId, BoundReport, EqualityCondition, check_all_bounds, evaluate_bound
from .graph import (
    DegreeSummary,
    DomainError,
    EdgeTypeCounts,
    Graph,
    GraphParseError,
    complement,
    degree_summary,
    edge_type_counts,
    is_semiregular_bipartite,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .indices import IndexKind, IndexValue, all_indices, bso, classical_index, sombor
from .trees import (
    ExtremalResult,
    TreeFamily,
    chemical_bso_upper_bound,
    enumerate_chemical_trees,
    enumerate_trees,
    extremal_search,
    path_bso_closed_form,
    star_bso_closed_form,
)

__version__ = "0.1.0"
