"""Linear Turan numbers of small linear hypertrees.

Modules: :mod:`~hyperturan.core` (validated hypergraphs and IO),
:mod:`~hyperturan.designs` (Steiner systems), :mod:`~hyperturan.patterns`
(forbidden configurations and detectors), :mod:`~hyperturan.bounds` (bound
formulas and witness constructions), :mod:`~hyperturan.search` (exact branch
and bound) and :mod:`~hyperturan.cli`.
"""

from .core import (
    ComponentPartition,
    DegreeProfile,
    LinearHypergraph,
    components,
    degree_profile,
    disjoint_union,
    parse,
    serialize,
    validate,
)
from .designs import (
    construct_affine_plane,
    construct_projective_plane,
    construct_sts,
    steiner_counts,
    unique_avoiding_edge,
    verify_steiner,
)
from .patterns import (
    broom,
    contains,
    contains_b4,
    contains_crown,
    contains_path,
    contains_pattern_generic,
    contains_star,
    crown,
    expand_tree,
    find_crown_with_base,
    path,
    star,
)
from .bounds import (
    edge_weight_diagnostics,
    p4_lower_construction,
    tree_lower_construction,
    upper_bound,
    verify_b4_extremal,
)
from .search import SearchConfig, conjecture_probe, exact_linear_turan, max_linear_system

__version__ = "0.1.0"
