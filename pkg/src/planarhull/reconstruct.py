"""Rebuild the hull of two polyhedra from their merged points and rays.

The pipeline: merge the generator sets, size a box around all finite points,
push a copy of every point out of the box along every ray, then run a
pivot-sorted scan over the resulting point cloud.  An edge of the scanned
hull becomes an output inequality iff it touches the box, i.e. iff it is
carried by actual geometry rather than by the artificial translated points;
one-dimensional results additionally get an axis bound at each closed end.

Ray translations use a per-ray rational scale chosen so that every
displacement has Chebyshev length exactly 4s.  That keeps all arithmetic
rational, clears the box by a wide margin, and translates parallel rays
proportionally, which the collinear cases rely on.
"""

from __future__ import annotations

from fractions import Fraction

from .counters import counters
from .decompose import extreme
from .geometry import (
    EQ,
    ContractError,
    Dir,
    GeometryError,
    HPoly,
    Ineq,
    Point,
    connect,
    in_box,
    orient,
    saturates,
)
from .normalize import canonical_poly


def box_size(P) -> Fraction:
    """Half-width of an origin-centred square strictly containing all of P."""
    pts = list(P)
    if not pts:
        raise GeometryError("box_size() of an empty point set")
    return max(max(abs(p.x), abs(p.y)) for p in pts) + 1


def translate(P, R, s: Fraction) -> set[Point]:
    """All points plus every point pushed out of the box along every ray.

    The displacement along r has Chebyshev length exactly 4s, so translated
    points land strictly outside the size-s box.
    """
    Q = set(P)
    for r in R:
        mu = 4 * s / max(abs(r.dx), abs(r.dy))
        for p in P:
            counters.translate_points += 1
            Q.add(Point(p.x + mu * r.dx, p.y + mu * r.dy))
    return Q


def centroid(Q) -> Point:
    """Arithmetic mean of at least two points; never a vertex of their hull."""
    pts = list(Q)
    if len(pts) < 2:
        raise GeometryError("centroid() needs at least two points")
    n = len(pts)
    return Point(
        Fraction(sum(p.x for p in pts), 1) / n,
        Fraction(sum(p.y for p in pts), 1) / n,
    )


def _ccw_key(pivot: Point):
    # Angle around the pivot, counter-clockwise from the positive x axis,
    # encoded as an order-preserving tuple; distance breaks angular ties.
    def key(p: Point):
        counters.sort_keys += 1
        vx, vy = p.x - pivot.x, p.y - pivot.y
        d2 = vx * vx + vy * vy
        if vy == 0:
            return (0, 0, Fraction(0), d2) if vx > 0 else (1, 0, Fraction(0), d2)
        return (0 if vy > 0 else 1, 1, -vx / vy, d2)

    return key


def sort_ccw(Q, pivot: Point) -> list[Point]:
    """Points ordered counter-clockwise around the pivot.

    Points equal to the pivot are dropped: the pivot is the centroid, which
    is never a vertex, so nothing of the hull is lost.  The order agrees
    with pivot_compare everywhere.
    """
    rest = [p for p in Q if p != pivot]
    if len(rest) < 2:
        raise GeometryError("sort_ccw() needs at least two points besides the pivot")
    return sorted(rest, key=_ccw_key(pivot))


def scan(seq: list[Point]) -> list[int]:
    """Indices of the hull vertices of a pivot-sorted sequence, ascending.

    Strict left-turn policy: collinear midpoints are not vertices; a fully
    collinear sequence yields exactly its two extreme points.
    """
    n = len(seq)
    if n < 2:
        raise GeometryError("scan() needs at least two points")
    if n == 2:
        return [0, 1]

    def lex(i: int):
        return (seq[i].y, seq[i].x)

    if all(orient(seq[0], seq[1], seq[i]) == EQ for i in range(2, n)):
        return sorted((min(range(n), key=lex), max(range(n), key=lex)))

    i0 = min(range(n), key=lex)
    rot = seq[i0:] + seq[:i0]
    stack = [0, 1]
    for i in range(2, n):
        counters.scan_steps += 1
        while len(stack) >= 2 and orient(rot[stack[-2]], rot[stack[-1]], rot[i]) <= 0:
            stack.pop()
            counters.scan_steps += 1
        stack.append(i)
    while len(stack) >= 3 and orient(rot[stack[-2]], rot[stack[-1]], rot[0]) <= 0:
        stack.pop()
        counters.scan_steps += 1
    return sorted((i0 + j) % n for j in stack)


def _segment_meets_box(p: Point, q: Point, s: Fraction) -> bool:
    # closed segment [p, q] against the open square (-s, s)^2, exactly
    alpha = beta = None  # open parameter window (alpha, beta)
    for p0, d in ((p.x, q.x - p.x), (p.y, q.y - p.y)):
        for sgn in (1, -1):
            a, b = sgn * p0, sgn * d  # constraint a + b*t < s
            if b == 0:
                if a >= s:
                    return False
            elif b > 0:
                t = (s - a) / b
                beta = t if beta is None else min(beta, t)
            else:
                t = (s - a) / b
                alpha = t if alpha is None else max(alpha, t)
    if beta is not None and beta <= 0:
        return False
    if alpha is not None and alpha >= 1:
        return False
    return alpha is None or beta is None or alpha < beta


def _axis_cap(q1: Point, q2: Point) -> Ineq:
    # extra bound fixing the vertex q1 of a one-dimensional result
    if q1.y == q2.y:
        s = 1 if q1.x > q2.x else -1
        return Ineq(s, 0, s * q1.x)
    s = 1 if q1.y > q2.y else -1
    return Ineq(0, s, s * q1.y)


def _point_box(p: Point) -> list[Ineq]:
    return [
        Ineq(1, 0, p.x),
        Ineq(0, 1, p.y),
        Ineq(-1, 0, -p.x),
        Ineq(0, -1, -p.y),
    ]


def hull(
    E1: HPoly,
    E2: HPoly,
    *,
    assume_sorted: bool = False,
    inner_loop_skip: bool = True,
) -> HPoly:
    """Smallest H-polyhedron containing both regions.

    Inputs must be normalized or empty (the empty list is the whole plane).
    ``assume_sorted`` skips the angular sort inside the decomposition;
    ``inner_loop_skip`` toggles the edges-missing-the-box shortcut.  Neither
    affects the result.
    """
    for E in (E1, E2):
        if not (E.is_universe or E.normalized):
            raise ContractError("hull() requires normalized (or empty) inputs")
    if E1.is_universe or E2.is_universe:
        return HPoly((), normalized=True)

    vr1 = extreme(E1, assume_sorted=assume_sorted)
    vr2 = extreme(E2, assume_sorted=assume_sorted)
    P = vr1.points | vr2.points
    R = vr1.rays | vr2.rays

    s = box_size(P)
    Q = translate(P, R, s)
    if len(Q) == 1:
        (q,) = Q
        return canonical_poly(HPoly.of(_point_box(q)))

    seq = sort_ccw(Q, centroid(Q))
    ks = scan(seq)
    m, n = len(ks), len(seq)

    out: list[Ineq] = []
    for i in range(m):
        counters.edge_steps += 1
        ki, kn = ks[i], ks[(i + 1) % m]
        q1, q2 = seq[ki], seq[kn]
        e = connect(q1, q2)
        add = m == 2 or in_box(s, q1) or in_box(s, q2)
        if not add and (not inner_loop_skip or _segment_meets_box(q1, q2, s)):
            j = (ki + 1) % n
            while not add and j != kn:
                counters.inner_steps += 1
                add = saturates(seq[j], e) and in_box(s, seq[j])
                j = (j + 1) % n
        if m == 2 and in_box(s, q1):
            out.append(_axis_cap(q1, q2))
        if add:
            out.append(e)
    return canonical_poly(HPoly.of(out))
