"""Brute-force reference implementations used as test oracles.

Everything here decides questions about polyhedra by global enumeration
(pairwise boundary intersections, candidate direction filtering, supporting
lines through generator pairs) and deliberately shares no reasoning with the
angular-neighbour walk used by the production decomposition and
reconstruction, so agreement between the two is evidence rather than
tautology.  All arithmetic is exact; hot paths work on integer-cleared
homogeneous coordinates.
"""

from __future__ import annotations

import functools
import itertools
import random
from fractions import Fraction
from math import gcd, lcm

from .geometry import (
    ContractError,
    Dir,
    GeometryError,
    HPoly,
    Ineq,
    Point,
    VRep,
    canonical,
    connect,
    theta_compare,
)


class Unsatisfiable(GeometryError):
    """The inequality system has an empty feasible set."""


class LpStatus:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name


UNBOUNDED = LpStatus("UNBOUNDED")
INFEASIBLE = LpStatus("INFEASIBLE")


# -- homogeneous integer views ------------------------------------------------
#
# A point (x, y) is handled as (xn, yn, d) with d > 0 and x = xn/d, y = yn/d.
# An inequality a*x + b*y <= c as (a, b, cn, cd) with cd > 0.  Sign tests on
# these views never build Fraction objects.


def _homog(p: Point) -> tuple[int, int, int]:
    dx, dy = p.x.denominator, p.y.denominator
    d = dx * dy // gcd(dx, dy)
    return (p.x.numerator * (d // dx), p.y.numerator * (d // dy), d)


def _point(h: tuple[int, int, int]) -> Point:
    return Point(Fraction(h[0], h[2]), Fraction(h[1], h[2]))


def _rows(E: HPoly) -> list[tuple[int, int, int, int]]:
    return [(e.a, e.b, e.c.numerator, e.c.denominator) for e in E.ineqs]


def _row_holds(row, h) -> bool:
    a, b, cn, cd = row
    return (a * h[0] + b * h[1]) * cd <= cn * h[2]


def _feasible_h(rows, h) -> bool:
    return all(_row_holds(row, h) for row in rows)


def _cross_rows(r1, r2) -> tuple[int, int, int] | None:
    """Homogeneous crossing of two boundary lines, or None if parallel."""
    a1, b1, cn1, cd1 = r1
    a2, b2, cn2, cd2 = r2
    det = a1 * b2 - a2 * b1
    if det == 0:
        return None
    xn = cn1 * cd2 * b2 - cn2 * cd1 * b1
    yn = a1 * cn2 * cd1 - a2 * cn1 * cd2
    d = det * cd1 * cd2
    if d < 0:
        xn, yn, d = -xn, -yn, -d
    return (xn, yn, d)


def _theta_sorted(ineqs) -> list[Ineq]:
    return sorted(ineqs, key=functools.cmp_to_key(theta_compare))


def contains_point(E: HPoly, p: Point) -> bool:
    """Exact membership: the conjunction of all inequality evaluations."""
    return all(e.eval(p) <= e.c for e in E.ineqs)


def is_satisfiable(E: HPoly) -> bool:
    """Exact emptiness decision by enumeration.

    If two constraint boundaries cross, the region is pointed, so it is
    nonempty iff some pairwise crossing is feasible.  Otherwise all normals
    are parallel and a one-dimensional bound comparison decides.
    """
    rows = _rows(E)
    if not rows:
        return True
    crossing = False
    for r1, r2 in itertools.combinations(rows, 2):
        h = _cross_rows(r1, r2)
        if h is None:
            continue
        crossing = True
        if _feasible_h(rows, h):
            return True
    if crossing:
        return False
    # all normals on one line: reduce to bounds on g.x for the primitive g
    g = (rows[0][0], rows[0][1])
    hi_n = hi_d = lo_n = lo_d = None  # g.x <= hi, -g.x <= lo
    for a, b, cn, cd in rows:
        if (a, b) == g:
            if hi_n is None or cn * hi_d < hi_n * cd:
                hi_n, hi_d = cn, cd
        else:
            if lo_n is None or cn * lo_d < lo_n * cd:
                lo_n, lo_d = cn, cd
    if hi_n is None or lo_n is None:
        return True
    return hi_n * lo_d + lo_n * hi_d >= 0


def _ray_candidates(rows) -> set[Dir]:
    dirs: set[Dir] = set()
    for a, b, _, _ in rows:
        dirs.add(Dir(b, -a))
        dirs.add(Dir(-b, a))
        dirs.add(Dir(-a, -b))
    return dirs


def _recession_dirs(rows) -> set[Dir]:
    """Generators of the recession cone {r != 0 : A r <= 0}, by filtering."""
    return {
        d
        for d in _ray_candidates(rows)
        if all(a * d.dx + b * d.dy <= 0 for a, b, _, _ in rows)
    }


def _foot(a: int, b: int, c: Fraction) -> Point:
    n2 = a * a + b * b
    return Point(Fraction(a * c, 1) / n2, Fraction(b * c, 1) / n2)


def vrep_naive(E: HPoly) -> VRep:
    """Generator representation by global enumeration.

    Vertices are the feasible crossings of non-parallel boundary pairs; rays
    are the filtered candidate directions.  A satisfiable region without
    vertices contains a line, hence all normals are parallel, and the feet
    of the tightest bound on each side anchor the representation.  Works on
    any satisfiable system, redundant or not.
    """
    if E.is_universe:
        raise ContractError("vrep_naive() requires a nonempty inequality list")
    if not is_satisfiable(E):
        raise Unsatisfiable("cannot decompose an empty region")
    rows = _rows(E)
    rays = _recession_dirs(rows)
    points: set[Point] = set()
    for r1, r2 in itertools.combinations(rows, 2):
        h = _cross_rows(r1, r2)
        if h is not None and _feasible_h(rows, h):
            points.add(_point(h))
    if not points:
        best: dict[tuple[int, int], Fraction] = {}
        for e in E.ineqs:
            key = (e.a, e.b)
            if key not in best or e.c < best[key]:
                best[key] = e.c
        points = {_foot(a, b, c) for (a, b), c in best.items()}
    return VRep.of(points, rays)


def lp_max(E: HPoly, d: Dir):
    """sup of d.x over the region: a Fraction, UNBOUNDED, or INFEASIBLE."""
    if E.is_universe:
        return UNBOUNDED
    if not is_satisfiable(E):
        return INFEASIBLE
    vr = vrep_naive(E)
    if any(d.dx * r.dx + d.dy * r.dy > 0 for r in vr.rays):
        return UNBOUNDED
    return max(d.dx * p.x + d.dy * p.y for p in vr.points)


def _included(A: HPoly, B: HPoly) -> bool:
    # [[A]] subset of [[B]], both satisfiable or universe
    if B.is_universe:
        return True
    if A.is_universe:
        return False
    vr = vrep_naive(A)
    for e in B.ineqs:
        if any(e.a * r.dx + e.b * r.dy > 0 for r in vr.rays):
            return False
        if any(e.eval(p) > e.c for p in vr.points):
            return False
    return True


def poly_equal(E1: HPoly, E2: HPoly) -> bool:
    """Set equality of two regions by mutual inclusion of their generators."""
    return _included(E1, E2) and _included(E2, E1)


# -- naive hull ----------------------------------------------------------------


def _axis_cap(end: Point, outward: Dir) -> Ineq:
    # closing bound at a 1-D endpoint: x-bound on horizontal carriers, else y-bound
    if outward.dy == 0:
        s = 1 if outward.dx > 0 else -1
        return Ineq(s, 0, s * end.x)
    s = 1 if outward.dy > 0 else -1
    return Ineq(0, s, s * end.y)


def _point_box(p: Point) -> list[Ineq]:
    return [
        Ineq(1, 0, p.x),
        Ineq(0, 1, p.y),
        Ineq(-1, 0, -p.x),
        Ineq(0, -1, -p.y),
    ]


def _flip(e: Ineq) -> Ineq:
    return Ineq(-e.a, -e.b, -e.c)


def hull_naive(E1: HPoly, E2: HPoly) -> HPoly:
    """Smallest region containing both inputs, by supporting-line enumeration.

    Candidate boundaries are the lines through every pair of generator
    points and through each generator point parallel to each ray.  A
    halfplane survives iff it contains every generator point, absorbs every
    ray, and its boundary meets the generated set in a one-dimensional face
    (two touching points, or one touching point plus a parallel ray): for a
    full-dimensional result those survivors are exactly the facets.
    Lower-dimensional results are emitted directly as the carrier-line pair
    plus axis bounds at the closed ends; a single point becomes its four
    coordinate bounds.
    """
    if E1.is_universe or E2.is_universe:
        return HPoly((), normalized=True)
    v1, v2 = vrep_naive(E1), vrep_naive(E2)
    pts = sorted(v1.points | v2.points, key=lambda p: (p.x, p.y))
    rays = sorted(v1.rays | v2.rays, key=lambda r: (r.dx, r.dy))

    if len(pts) == 1 and not rays:
        return HPoly(tuple(_theta_sorted(_point_box(pts[0]))), normalized=True)

    if len(pts) >= 2:
        v = pts[1] - pts[0]
        carrier = Dir(v.x.numerator * v.y.denominator, v.y.numerator * v.x.denominator)
    else:
        carrier = rays[0]
    cvec = Point(Fraction(carrier.dx), Fraction(carrier.dy))
    one_dim = all((p - pts[0]).cross(cvec) == 0 for p in pts) and all(
        carrier.dx * r.dy - carrier.dy * r.dx == 0 for r in rays
    )

    if one_dim:
        def along(p: Point) -> Fraction:
            return carrier.dx * p.x + carrier.dy * p.y

        pmin = min(pts, key=along)
        pmax = max(pts, key=along)
        unbounded_pos = any(carrier.dx * r.dx + carrier.dy * r.dy > 0 for r in rays)
        unbounded_neg = any(carrier.dx * r.dx + carrier.dy * r.dy < 0 for r in rays)
        if pmin != pmax:
            base = connect(pmin, pmax)
        else:
            base = connect(pmin, pmin + cvec)
        out = [base, _flip(base)]
        if not unbounded_pos:
            out.append(_axis_cap(pmax, carrier))
        if not unbounded_neg:
            out.append(_axis_cap(pmin, -carrier))
        return HPoly(tuple(_theta_sorted(out)), normalized=True)

    # full-dimensional: keep the supporting halfplanes with 1-D contact
    hpts = [_homog(p) for p in pts]
    norms: set[Dir] = set()
    for (x1, y1, d1), (x2, y2, d2) in itertools.combinations(hpts, 2):
        vx, vy = x2 * d1 - x1 * d2, y2 * d1 - y1 * d2
        if vx or vy:
            norms.add(Dir(vy, -vx))
    for r in rays:
        norms.add(Dir(r.dy, -r.dx))

    out: set[Ineq] = set()
    for nrm in norms:
        for a, b in ((nrm.dx, nrm.dy), (-nrm.dx, -nrm.dy)):
            if any(a * r.dx + b * r.dy > 0 for r in rays):
                continue
            vn, vd = None, None  # running max of (a, b) . p as vn/vd
            for x, y, d in hpts:
                un = a * x + b * y
                if vn is None or un * vd > vn * d:
                    vn, vd = un, d
            touching = sum(1 for x, y, d in hpts if (a * x + b * y) * vd == vn * d)
            ray_par = any(a * r.dx + b * r.dy == 0 for r in rays)
            if touching >= 2 or (touching >= 1 and ray_par):
                out.add(canonical(a, b, Fraction(vn, vd)))
    return HPoly(tuple(_theta_sorted(out)), normalized=True)


# -- membership in a generated set ---------------------------------------------


def in_generated(vr: VRep, p: Point) -> bool:
    """Exact test of p in conv(points) + cone(rays | {0}).

    Decides feasibility of the convex-combination system by enumerating
    candidate basic solutions: any feasible combination reduces to one
    supported on at most three generators, at least one of them a point.
    All generators and the probe are first placed on a common integer grid.
    """
    if not vr.points:
        return False
    pts = list(vr.points)
    D = lcm(p.x.denominator, p.y.denominator,
            *(q.x.denominator for q in pts), *(q.y.denominator for q in pts))
    grid = [(int(q.x * D), int(q.y * D)) for q in pts]
    px, py = int(p.x * D), int(p.y * D)
    rays = [(r.dx * D, r.dy * D) for r in vr.rays]

    def cross(u, v):
        return u[0] * v[1] - u[1] * v[0]

    def dot(u, v):
        return u[0] * v[0] + u[1] * v[1]

    # single point
    for q in grid:
        if q == (px, py):
            return True
    # point + one ray
    for q in grid:
        w = (px - q[0], py - q[1])
        for rv in rays:
            if cross(w, rv) == 0 and dot(w, rv) > 0:
                return True
    # two points, optionally + one ray
    for q1, q2 in itertools.combinations(grid, 2):
        u = (q2[0] - q1[0], q2[1] - q1[1])
        w = (px - q1[0], py - q1[1])
        if cross(u, w) == 0 and 0 <= dot(u, w) <= dot(u, u):
            return True
        for rv in rays:
            det = cross(u, rv)
            if det == 0:
                continue
            lam_n = cross(w, rv)
            mu_n = cross(u, w)
            if det < 0:
                lam_n, mu_n, det = -lam_n, -mu_n, -det
            if 0 <= lam_n <= det and mu_n >= 0:
                return True
    # point + two rays
    for q in grid:
        w = (px - q[0], py - q[1])
        for rv1, rv2 in itertools.combinations(rays, 2):
            det = cross(rv1, rv2)
            if det == 0:
                continue
            m1 = cross(w, rv2)
            m2 = cross(rv1, w)
            if det < 0:
                m1, m2, det = -m1, -m2, -det
            if m1 >= 0 and m2 >= 0:
                return True
    # three points spanning a proper triangle (flat triples reduce to segments)
    for q1, q2, q3 in itertools.combinations(grid, 3):
        u, v = (q2[0] - q1[0], q2[1] - q1[1]), (q3[0] - q1[0], q3[1] - q1[1])
        if cross(u, v) == 0:
            continue
        o1 = cross(u, (px - q1[0], py - q1[1]))
        o2 = cross((q3[0] - q2[0], q3[1] - q2[1]), (px - q2[0], py - q2[1]))
        o3 = cross((q1[0] - q3[0], q1[1] - q3[1]), (px - q3[0], py - q3[1]))
        if (o1 >= 0 and o2 >= 0 and o3 >= 0) or (o1 <= 0 and o2 <= 0 and o3 <= 0):
            return True
    return False


def vert_points(points) -> set[Point]:
    """Vertices of the hull of a finite point set, straight from the definition."""
    pts = set(points)
    return {p for p in pts if not in_generated(VRep.of(pts - {p}, ()), p)}


# -- seeded instance generation ------------------------------------------------

SHAPES = ("polytope", "wedge", "strip", "halfplane", "point", "line", "random")


def _rand_normal(rng: random.Random, bound: int) -> tuple[int, int]:
    while True:
        a = rng.randint(-bound, bound)
        b = rng.randint(-bound, bound)
        if a or b:
            return a, b


def gen_instance(seed: int, n: int, coeff_bound: int, shape: str = "random") -> HPoly:
    """Deterministic seeded instance of the requested degeneracy family.

    The result is always normalized (satisfiable, non-redundant,
    theta-sorted); n = 0 yields the universe.
    """
    from .normalize import normalize

    if shape not in SHAPES:
        raise GeometryError(f"unknown shape {shape!r}")
    if n <= 0:
        return HPoly((), normalized=True)
    rng = random.Random(seed)
    K = max(1, coeff_bound)

    def rand_point() -> tuple[int, int]:
        return rng.randint(-K, K), rng.randint(-K, K)

    def tight(a: int, b: int, v, slack: int = 0) -> Ineq:
        return canonical(a, b, a * v[0] + b * v[1] + slack)

    def nonparallel_pair():
        while True:
            n1 = _rand_normal(rng, K)
            n2 = _rand_normal(rng, K)
            if n1[0] * n2[1] - n1[1] * n2[0] != 0:
                return n1, n2

    if shape == "halfplane":
        a, b = _rand_normal(rng, K)
        return normalize(HPoly.of([canonical(a, b, rng.randint(-K, K))]))

    if shape == "strip":
        a, b = _rand_normal(rng, K)
        t = rng.randint(-K, K)
        w = rng.randint(1, K)
        return normalize(HPoly.of([canonical(a, b, t + w), canonical(-a, -b, -t + w)]))

    if shape == "line":
        a, b = _rand_normal(rng, K)
        c = rng.randint(-K, K)
        return normalize(HPoly.of([canonical(a, b, c), canonical(-a, -b, -c)]))

    if shape == "point":
        v = rand_point()
        n1, n2 = nonparallel_pair()
        if n == 3 or (n != 4 and rng.random() < 0.5):
            normals = [n1, n2, (-(n1[0] + n2[0]), -(n1[1] + n2[1]))]
        else:
            normals = [n1, n2, (-n1[0], -n1[1]), (-n2[0], -n2[1])]
        return normalize(HPoly.of([tight(a, b, v) for a, b in normals]))

    if shape == "wedge":
        v = rand_point()
        n1, n2 = nonparallel_pair()
        return normalize(HPoly.of([tight(*n1, v), tight(*n2, v)]))

    if shape == "polytope":
        v = rand_point()
        spread = rng.randint(1, K)
        raw = [
            canonical(1, 0, v[0] + spread),
            canonical(0, 1, v[1] + spread),
            canonical(-1, 0, -v[0] + spread),
            canonical(0, -1, -v[1] + spread),
        ]
        for _ in range(n):
            a, b = _rand_normal(rng, K)
            raw.append(tight(a, b, v, rng.randint(0, K)))
        return normalize(HPoly.of(raw))

    # shape == "random": arbitrary systems, resampled until satisfiable
    for _ in range(64):
        raw = [canonical(*_rand_normal(rng, K), rng.randint(-K, K)) for _ in range(n)]
        E = HPoly.of(raw)
        if is_satisfiable(E):
            return normalize(E)
    return gen_instance(rng.randrange(2**32), n, coeff_bound, "polytope")
