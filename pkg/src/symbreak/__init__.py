"""Symmetry-breaking invariants of finite graphs: distinguishing threshold,
distinguishing number, motion and counts of distinguishing colorings."""

from .autsearch import automorphism_generators, is_asymmetric, isomorphic
from .distinguishing import (Coloring, Phi_k, automorphism_group, distinguishing_number,
                             is_distinguishing, motion, phi_k, stirling2, theta)
from .graph import Graph, build_graph, complement, disjoint_union, parse_graph6, write_graph6
from .perm import Permutation, PermGroup, close_generators, cycle_count

__version__ = "0.1.0"
