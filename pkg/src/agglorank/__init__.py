"""Influential-node ranking for connected graphs by node contraction.

Contracting a node merges it and its whole neighborhood into a single node;
how much more "agglomerated" (compact) the network becomes measures the
node's importance.  Everything is computed in exact rational arithmetic, and
the generic engine is cross-validated against analytic closed forms for
paths, comets, double comets and lollipop networks.
"""

from . import closed_forms
from .agglomeration import (
    ImcEntry,
    RankReport,
    Rational,
    average_path_length,
    imc,
    imc_all,
    phi,
)
from .contraction import ContractionResult, contract
from .errors import (
    AggloRankError,
    ConnectivityError,
    DegenerateOrderError,
    EdgeListError,
    FamilyParameterError,
    FormulaDomainError,
)
from .families import (
    CometSpec,
    DoubleCometSpec,
    FamilySpec,
    LabeledGraph,
    LollipopSpec,
    NodeClass,
    PathSpec,
    class_of,
    generate,
    read_labeled,
    scan_class_comments,
    write_labeled,
)
from .graph import (
    Graph,
    bfs_distances,
    degree,
    distance_sum,
    from_edge_list,
    is_connected,
    parse_edge_list,
    to_edge_list,
)
from .verify import DEFAULT_GRIDS, VerifyReport, VerifyRow, verify_family

__version__ = "0.1.0"

__all__ = [
    "AggloRankError",
    "CometSpec",
    "ConnectivityError",
    "ContractionResult",
    "DEFAULT_GRIDS",
    "DegenerateOrderError",
    "DoubleCometSpec",
    "EdgeListError",
    "FamilyParameterError",
    "FamilySpec",
    "FormulaDomainError",
    "Graph",
    "ImcEntry",
    "LabeledGraph",
    "LollipopSpec",
    "NodeClass",
    "PathSpec",
    "RankReport",
    "Rational",
    "VerifyReport",
    "VerifyRow",
    "average_path_length",
    "bfs_distances",
    "class_of",
    "closed_forms",
    "contract",
    "degree",
    "distance_sum",
    "from_edge_list",
    "generate",
    "imc",
    "imc_all",
    "is_connected",
    "parse_edge_list",
    "phi",
    "read_labeled",
    "scan_class_comments",
    "to_edge_list",
    "verify_family",
    "write_labeled",
]
