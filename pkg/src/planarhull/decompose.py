"""Decompose an H-polyhedron into generator points and ray directions.

``extreme`` walks the inequalities in angular order and reads vertices and
recession directions off adjacent pairs: an angular gap below pi means the
boundary crossing of the pair is a vertex, a gap of pi or more means the
polyhedron recedes along both boundaries instead.  The result satisfies

    region == conv(points) + cone(rays | {0})

with at most four ray directions.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .counters import counters
from .geometry import (
    ContractError,
    Dir,
    HPoly,
    Ineq,
    Point,
    VRep,
    gap_ge_pi,
    intersect,
    theta_compare,
)


def boundary_point(e: Ineq) -> Point:
    """A deterministic point on the boundary line of e.

    Chosen as the foot of the perpendicular from the origin; always rational.
    """
    n2 = e.a * e.a + e.b * e.b
    return Point(Fraction(e.a * e.c, 1) / n2, Fraction(e.b * e.c, 1) / n2)


def theta_sorted(ineqs) -> list[Ineq]:
    """Sort inequalities by normal angle, rejecting angular duplicates."""
    counters.extreme_sorts += 1
    out = sorted(ineqs, key=functools.cmp_to_key(theta_compare))
    for prev, cur in zip(out, out[1:]):
        if theta_compare(prev, cur) == 0:
            raise ContractError(f"inequalities {prev} and {cur} share a normal direction")
    return out


def extreme(E: HPoly, assume_sorted: bool = False) -> VRep:
    """Generator points and rays of a satisfiable, non-redundant polyhedron.

    With ``assume_sorted`` the input order is trusted to be strictly
    theta-sorted and the sorting pass is skipped entirely.
    """
    if E.is_universe:
        raise ContractError("extreme() requires a nonempty inequality list")
    if not E.normalized:
        raise ContractError("extreme() requires a normalized polyhedron")
    ineqs = list(E.ineqs) if assume_sorted else theta_sorted(E.ineqs)
    n = len(ineqs)

    points: set[Point] = set()
    rays: set[Dir] = set()
    if n == 1:
        e = ineqs[0]
        rays.add(Dir(-e.a, -e.b))  # into the halfplane, fixing the feasible side

    for i in range(n):
        counters.extreme_steps += 1
        e = ineqs[i]
        d_pre = n == 1 or gap_ge_pi(ineqs[(i - 1) % n], e)
        d_post = n == 1 or gap_ge_pi(e, ineqs[(i + 1) % n])
        if d_pre:
            rays.add(Dir(e.b, -e.a))
        if d_post:
            rays.add(Dir(-e.b, e.a))
        else:
            v = intersect(e, ineqs[(i + 1) % n])
            if v is None:  # angular gap < pi guarantees non-parallel normals
                raise ContractError("adjacent inequalities violate the sorted precondition")
            points.add(v)
        if d_pre and d_post:
            points.add(boundary_point(e))

    return VRep.of(points, rays)
