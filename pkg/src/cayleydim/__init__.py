"""Metric dimension of Cayley graphs on dihedral groups."""

from .cayley import CayleyGraph, DistanceMatrix, Graph, build_cayley, export, is_bipartite, is_connected, is_regular
from .classifier import Classification, Prediction, classify_dim2, predicted_dimension
from .dihedral import (
    ConnectionSet,
    DihedralElement,
    closure,
    element_order,
    inverse,
    is_generating,
    is_generating_fast,
    multiply,
    reflection,
    rotation,
)
from .metric import SearchConfig, dim2_basis_properties, is_resolving, metric_dimension_exact
from .structure import StructureVerdict, isomorphic, recognize
from .verify import enumerate_connection_sets, verify_range

__version__ = "0.1.0"
