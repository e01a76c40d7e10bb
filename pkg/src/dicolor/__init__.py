"""Constructive (k, m)-degenerate and acyclic colorings of digraphs."""

from .core import (
    DegreeStats,
    Digraph,
    HalfInt,
    degree_stats,
    from_edge_list,
    induced_subgraph,
    is_oriented,
    weak_components,
)
from .degeneracy import Coloring, PeelResult, is_acyclic, is_weakly_m_degenerate, peel, verify_coloring
from .patterns import F1, F2, G1, G2, avoids_F, avoids_G, contains_induced
from .decomposition import (
    Partition,
    PartitionTargets,
    f_objective,
    find_brooks_cycle,
    lovasz_partition,
    modlov_partition,
)
from .coloring import (
    FracDeltaPlan,
    ImprovedPlan,
    bounded_coloring,
    fracdelta_coloring,
    fracdelta_plan,
    greedy_coloring,
    improved_acyclic_coloring,
    improved_plan,
)
from .oracle import ExactResult, exact_chi_m, is_km_critical, weak_degeneracy_bruteforce
from .errors import IterationCapError, PreconditionError, SizeCapError

__version__ = "0.1.0"
