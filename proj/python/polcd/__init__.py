"""Polarization-aware community detection on graphs with two-pole memberships."""

from ._core import (
    ConfigError,
    ContractViolation,
    DegenerateDialogueError,
    DegeneratePolarizationError,
    EmptyGraphError,
    Graph,
    Operators,
    ParseError,
    PolcdError,
    Profile,
    SizeLimitError,
    UndefinedModularityError,
    UndefinedScoreError,
    capacity_matrix,
    cohesion,
    gamma_sweep,
    jdj_pol,
    load_edge_list,
    louvain,
    modularity,
    mu,
    pair_risk,
    parse_edge_list,
    polarization_louvain,
    read_membership,
    shapley,
    synthesize,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
