"""Khovanov homology of links and spatial graphs, and chromatic graph homology."""

from .chromhom import AbstractGraph, chromatic_complex, chromatic_homology, deletion_contraction, les_bound_check
from .exactlin import SparseMatrix, homology_dim, rank_exact
from .khovanov import KhTable, build_complex, dual_table, graded_euler, khovanov_homology, tensor_tables
from .laurent import IntPoly, LaurentPoly, chromatic_state_sum, count_proper_colorings, jones_state_sum
from .linkdiag import LinkDiagram, connected_sum, crossing_signs, disjoint_union, mirror, resolve, saddle, validate_link
from .spatialgraph import (SpatialGraphDiagram, apply_replacement, enumerate_replacements, graph_khovanov,
                           kauffman_family, validate_spatial)

__version__ = "0.1.0"
