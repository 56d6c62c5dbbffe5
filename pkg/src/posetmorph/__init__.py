"""Finite posets, p-morphisms, locally surjective graph homomorphisms,
the graph-to-poset reduction, and the polynomial tree-source solver."""

from .graphs import (Graph, GraphError, VertexMap, dump_graph, load_graph,
                     lshom_brute, verify_lshom)
from .mapfile import dump_map, load_map
from .order import (CycleError, ParseError, Poset, PosetError, dump_poset,
                    load_poset)
from .pmorph import PosetMap, logcontain, spmorph_brute, verify_pmorphism
from .reduction import (PathDecomposition, PosLabeling, build_pos,
                        check_degree_bounds, dump_pathdecomp,
                        labeling_from_poset, lift_homomorphism,
                        load_pathdecomp, reserved_label_isomorphism,
                        restrict_pmorphism, theorem3_check,
                        transform_pathdecomp)
from .treesolver import (INHERITED, LEAF, MATCHED, MatchInstance, QtTable,
                         compute_qt, dump_qt, reconstruct_witness,
                         saturating_matching, tree_logcontain, tree_spmorph)

__all__ = [
    "INHERITED", "LEAF", "MATCHED",
    "CycleError", "Graph", "GraphError", "MatchInstance", "ParseError",
    "PathDecomposition", "PosLabeling", "Poset", "PosetError", "PosetMap",
    "QtTable", "VertexMap", "build_pos", "check_degree_bounds",
    "compute_qt", "dump_graph", "dump_map", "dump_pathdecomp",
    "dump_poset", "dump_qt", "labeling_from_poset", "lift_homomorphism",
    "load_graph", "load_map", "load_pathdecomp", "load_poset",
    "logcontain", "lshom_brute", "reconstruct_witness",
    "reserved_label_isomorphism", "restrict_pmorphism",
    "saturating_matching", "spmorph_brute", "theorem3_check",
    "transform_pathdecomp", "tree_logcontain", "tree_spmorph",
    "verify_lshom", "verify_pmorphism",
]

__version__ = "0.1.0"
