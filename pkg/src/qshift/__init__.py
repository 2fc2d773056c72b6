"""Schur Q-functions on shifted skew diagrams: tableaux, amenability and strange shapes."""
from .canonical_fill import canonical_filling, compute_layers, layer_has_disconnection, path_endpoints
from .classify import is_strange_oracle, is_strange_theorem, match_family, sweep
from .errors import QShiftError
from .qpoly import QPolynomial, expand_q, is_symmetric, verify_decomposition
from .shapes import Cell, SkewShape, StrictPartition, canonicalize, make_skew, parse_partition, render_ascii
from .tableaux import Tableau, count_amenable, decompose, enumerate_amenable, enumerate_gsyt, is_valid_gsyt, lr_coeff
from .words import Letter, is_amenable, is_amenable_via_restriction, parse_word

__all__ = [
    "Cell", "Letter", "QPolynomial", "QShiftError", "SkewShape", "StrictPartition", "Tableau",
    "canonical_filling", "canonicalize", "compute_layers", "count_amenable", "decompose",
    "enumerate_amenable", "enumerate_gsyt", "expand_q", "is_amenable", "is_amenable_via_restriction",
    "is_strange_oracle", "is_strange_theorem", "is_symmetric", "is_valid_gsyt", "layer_has_disconnection",
    "lr_coeff", "make_skew", "match_family", "parse_partition", "parse_word", "path_endpoints",
    "render_ascii", "sweep", "verify_decomposition",
]
