"""Generalized integer splines on edge-weighted graphs.

A spline labels each vertex with an integer so that labels across an edge agree
modulo the edge weight. This package verifies splines, reduces graphs by
star-clique and edge-collapse operations, and builds flow-up bases of the spline
module two ways: by collapsing and lifting with the Chinese Remainder Theorem, and
from lcm-of-gcd formulas over paths.
"""
from .basis import (
    FlowUpBasis,
    KernelGenerator,
    build_basis,
    decompose,
    determinant,
    extend_spline,
    kernel_generators,
    lift,
)
from .collapse import (
    CollapseSequence,
    EdgeCollapse,
    StarClique,
    collapse_once,
    complete_collapse,
    edge_collapse_all,
    star_clique,
)
from .errors import (
    CapExceeded,
    Disconnected,
    Incompatible,
    InvalidGraph,
    InvalidVertex,
    NotInSpan,
    NotSimple,
    PathExplosion,
    SplineError,
)
from .graph import Edge, Path, WeightedGraph, is_connected, is_simple, path_gcd, permute, simple_paths, star
from .kernels import BACKEND
from .numtheory import Congruence, CrtSolution, crt_solve, gcd_all, lcm_all, lcm_of_gcds
from .oracle import ResidueBox, check_basis_spans, crt_scan, enumerate_splines
from .paths import PathAggregate, leading_terms_via_paths, path_lcm
from .spline import Spline, VerifyReport, flow_up_index, is_minimal_in_class, leading_term, verify

__version__ = "0.1.0"
