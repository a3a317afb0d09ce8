"""Exact (t,r) broadcast domination on graphs, orientations, and tori."""

from .errors import (
    BdomError,
    DegenerateTorus,
    DuplicateEdge,
    GraphConstructionError,
    GuardError,
    InfeasibleParams,
    InvalidDims,
    InvalidVertex,
    LengthMismatch,
    LoopEdge,
    NotAMultiple,
    OutOfFormulaDomain,
    OutOfRange,
    ParseError,
    TooLarge,
    TooManyEdges,
)
from .graphs import (
    Digraph,
    Graph,
    Params,
    bits_from_index,
    bounded_distances,
    build_graph,
    format_dg,
    format_ug,
    index_from_bits,
    is_dominating,
    orient,
    parse_dg,
    parse_ug,
    reception,
    reception_undirected,
    transpose,
)
from .interval import (
    DominationInterval,
    Jump,
    WalkTrace,
    domination_interval,
    flip_walk,
    is_full,
    jump_search,
    max_step,
    witness_orientation,
)
from .solver import (
    GammaResult,
    gamma,
    gamma_bruteforce,
    gamma_undirected,
    greedy_upper_bound,
)

__version__ = "0.1.0"

__all__ = [
    "BdomError",
    "DegenerateTorus",
    "Digraph",
    "DominationInterval",
    "DuplicateEdge",
    "GammaResult",
    "Graph",
    "GraphConstructionError",
    "GuardError",
    "InfeasibleParams",
    "InvalidDims",
    "InvalidVertex",
    "Jump",
    "LengthMismatch",
    "LoopEdge",
    "NotAMultiple",
    "OutOfFormulaDomain",
    "OutOfRange",
    "Params",
    "ParseError",
    "TooLarge",
    "TooManyEdges",
    "WalkTrace",
    "bits_from_index",
    "bounded_distances",
    "build_graph",
    "domination_interval",
    "flip_walk",
    "format_dg",
    "format_ug",
    "gamma",
    "gamma_bruteforce",
    "gamma_undirected",
    "greedy_upper_bound",
    "index_from_bits",
    "is_dominating",
    "is_full",
    "jump_search",
    "max_step",
    "orient",
    "parse_dg",
    "parse_ug",
    "reception",
    "reception_undirected",
    "transpose",
    "witness_orientation",
    "__version__",
]
