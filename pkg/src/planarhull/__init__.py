"""Exact convex hulls of planar H-polyhedra.

A polyhedron is a finite list of closed halfplanes a*x + b*y <= c over exact
rationals; the empty list is the whole plane.  ``hull`` computes the smallest
H-polyhedron containing two such regions in O(n log n) by decomposing both
into generator points and rays, boxing the points, translating along the
rays, and scanning the resulting cloud.  The ``oracle`` module carries
independent brute-force counterparts for every step.
"""

from .geometry import (
    EQ,
    GT,
    LT,
    ContractError,
    Dir,
    GeometryError,
    HPoly,
    Ineq,
    Point,
    Rational,
    VRep,
    canonical,
    connect,
    gap_ge_pi,
    in_box,
    intersect,
    orient,
    pivot_compare,
    saturates,
    theta_compare,
)
from .decompose import boundary_point, extreme
from .hpolyfile import HPolyParseError, emit_hpoly, parse_hpoly
from .normalize import canonical_poly, is_satisfiable, normalize, remove_redundant
from .oracle import (
    INFEASIBLE,
    UNBOUNDED,
    Unsatisfiable,
    contains_point,
    gen_instance,
    hull_naive,
    in_generated,
    lp_max,
    poly_equal,
    vrep_naive,
)
from .reconstruct import box_size, centroid, hull, scan, sort_ccw, translate

__version__ = "0.1.0"

__all__ = [
    "EQ",
    "GT",
    "LT",
    "ContractError",
    "Dir",
    "GeometryError",
    "HPoly",
    "HPolyParseError",
    "INFEASIBLE",
    "Ineq",
    "Point",
    "Rational",
    "UNBOUNDED",
    "Unsatisfiable",
    "VRep",
    "boundary_point",
    "box_size",
    "canonical",
    "canonical_poly",
    "centroid",
    "connect",
    "contains_point",
    "emit_hpoly",
    "extreme",
    "gap_ge_pi",
    "gen_instance",
    "hull",
    "hull_naive",
    "in_box",
    "in_generated",
    "intersect",
    "is_satisfiable",
    "lp_max",
    "normalize",
    "orient",
    "parse_hpoly",
    "pivot_compare",
    "poly_equal",
    "remove_redundant",
    "saturates",
    "scan",
    "sort_ccw",
    "theta_compare",
    "translate",
    "vrep_naive",
]
