"""Exact computations for the equivariant index of Kostant's cubic Dirac operator."""

from .errors import CapExceeded, DomainError, InternalConsistencyError
from .index import IndexResult, bwb_index, gh_index, oracle_index
from .rootsys import RootSystem, Weight, build_root_system, parse_type, parse_weight

__all__ = ["CapExceeded", "DomainError", "IndexResult", "InternalConsistencyError",
           "RootSystem", "Weight", "bwb_index", "build_root_system", "gh_index",
           "oracle_index", "parse_type", "parse_weight"]
__version__ = "0.1.0"
