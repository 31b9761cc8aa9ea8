"""Exact construction and classification of NSSD commuting graphs of the
Hv-group (D_2n, o)."""

from .dihedral import DihedralGroup, GroupElement, format_element
from .hyperop import HvGroup, HyperProduct, check_reproduction, check_weak_associativity
from .graph import CommutingGraph, commuting_graph, export_dot, export_graph6, parse_graph6
from .canon import canonical_form
from .linalg import IntPolynomial, char_poly, determinant, nullity, principal_minor, rank
from .nssd import NssdCertificate, is_nssd, is_nssd_spectral
from .constructions import bridge_join, bridge_charpoly_identity, pendant_nullity, pendant_union
from .enumeration import EnumerationReport, enumerate_nssd, write_report
from .catalog import gamma, verify_all, verify_gamma

__version__ = "0.1.0"

__all__ = [
    "DihedralGroup", "GroupElement", "format_element",
    "HvGroup", "HyperProduct", "check_reproduction", "check_weak_associativity",
    "CommutingGraph", "commuting_graph", "export_dot", "export_graph6", "parse_graph6",
    "canonical_form",
    "IntPolynomial", "char_poly", "determinant", "nullity", "principal_minor", "rank",
    "NssdCertificate", "is_nssd", "is_nssd_spectral",
    "bridge_join", "bridge_charpoly_identity", "pendant_nullity", "pendant_union",
    "EnumerationReport", "enumerate_nssd", "write_report",
    "gamma", "verify_all", "verify_gamma",
]
