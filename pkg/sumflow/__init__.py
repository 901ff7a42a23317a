"""
==============
:mod:`sumflow`
==============
Exact c-sum and γ-valued flows on graphs: decide, construct and certify.
"""
# Local Folder
from .core import (
    Bipartition,
    CapExceededError,
    ConjectureError,
    Graph,
    GraphFile,
    GraphStructureError,
    GraphSyntaxError,
    InfeasibleError,
    PreconditionError,
    SumFlowError,
    VerificationError,
)
from .labels import FlowResult, IntervalSpec, LabelSet
from .lp import (
    FarkasCertificate,
    Feasible,
    Infeasible,
    edge_value_range,
    interval_flow,
    nonnegative_flow,
    verify_farkas,
)
from .parser import format_graph_file, parse_graph_file, parse_label_set
from .solver import gamma_flow_exists, solve_gamma_flow
from .trees import tree_range_report, tree_unique_flow

__all__ = (
    "Bipartition",
    "CapExceededError",
    "ConjectureError",
    "FarkasCertificate",
    "Feasible",
    "FlowResult",
    "Graph",
    "GraphFile",
    "GraphStructureError",
    "GraphSyntaxError",
    "Infeasible",
    "InfeasibleError",
    "IntervalSpec",
    "LabelSet",
    "PreconditionError",
    "SumFlowError",
    "VerificationError",
    "edge_value_range",
    "format_graph_file",
    "gamma_flow_exists",
    "interval_flow",
    "nonnegative_flow",
    "parse_graph_file",
    "parse_label_set",
    "solve_gamma_flow",
    "tree_range_report",
    "tree_unique_flow",
    "verify_farkas",
)
