"""Exact planar primitives: rational points, ray directions, closed halfplanes.

Every coordinate and coefficient is an exact rational (``fractions.Fraction``);
there is no floating point and no rounding anywhere in the library.  All types
are immutable and hashable, all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

Rational = Fraction

# Comparator verdicts, compatible with sign-of-difference conventions.
LT, EQ, GT = -1, 0, 1


class GeometryError(ValueError):
    """Degenerate argument: zero normal, coincident points, empty set, ..."""


class ContractError(GeometryError):
    """A precondition documented on the operation was violated."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Point:
    """A point of the rational plane."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def dot(self, other: "Point") -> Fraction:
        return self.x * other.x + self.y * other.y

    def dist2(self, other: "Point") -> Fraction:
        dx, dy = self.x - other.x, self.y - other.y
        return dx * dx + dy * dy

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class Dir:
    """A ray direction: a nonzero primitive integer vector.

    Stored with gcd(|dx|, |dy|) = 1, so equal directions compare equal
    structurally.  A direction stands for its whole open ray of positive
    multiples.
    """

    dx: int
    dy: int

    def __post_init__(self):
        if self.dx == 0 and self.dy == 0:
            raise GeometryError("direction must be nonzero")
        g = gcd(abs(self.dx), abs(self.dy))
        object.__setattr__(self, "dx", self.dx // g)
        object.__setattr__(self, "dy", self.dy // g)

    def __neg__(self) -> "Dir":
        return Dir(-self.dx, -self.dy)

    def __str__(self) -> str:
        return f"<{self.dx}, {self.dy}>"


@dataclass(frozen=True)
class Ineq:
    """The closed halfplane a*x + b*y <= c.

    Canonical form: (a, b) is a nonzero coprime integer pair and c is
    rational, so two halfplanes have the same outward normal direction iff
    their (a, b) pairs are identical.  The normal (a, b) points away from
    the feasible side.
    """

    a: int
    b: int
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))
        if self.a == 0 and self.b == 0:
            raise GeometryError("inequality normal must be nonzero")
        if gcd(abs(self.a), abs(self.b)) != 1:
            raise GeometryError("inequality coefficients must be coprime; use canonical()")

    def normal(self) -> Dir:
        return Dir(self.a, self.b)

    def eval(self, p: Point) -> Fraction:
        """a*p.x + b*p.y; feasibility is eval(p) <= c."""
        return self.a * p.x + self.b * p.y

    def contains(self, p: Point) -> bool:
        return self.eval(p) <= self.c

    def __str__(self) -> str:
        return f"{self.a}x + {self.b}y <= {self.c}"


def canonical(a, b, c) -> Ineq:
    """Scale a raw rational triple to the unique canonical Ineq.

    Multiplies by the positive rational that makes (a, b) a coprime integer
    pair; the feasible set is unchanged.  Rejects a = b = 0.
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0:
        raise GeometryError("inequality normal must be nonzero")
    m = (a.denominator * b.denominator) // gcd(a.denominator, b.denominator)
    ai, bi = int(a * m), int(b * m)
    g = gcd(abs(ai), abs(bi))
    return Ineq(ai // g, bi // g, c * m / g)


def _half(a: int, b: int) -> int:
    # 0 for normals with orientation in [0, pi), 1 for [pi, 2*pi).
    return 0 if b > 0 or (b == 0 and a > 0) else 1


def theta_compare(e1: Ineq, e2: Ineq) -> int:
    """Order halfplanes by the counter-clockwise angle of their outward normal.

    The zero angle is the normal of x <= 0.  Exact: classifies each normal
    into the [0, pi) or [pi, 2*pi) half, then uses the sign of the cross
    product within a half.  EQ iff the normals are positive multiples of
    each other.
    """
    h1, h2 = _half(e1.a, e1.b), _half(e2.a, e2.b)
    if h1 != h2:
        return LT if h1 < h2 else GT
    return -_sign(e1.a * e2.b - e2.a * e1.b)


def gap_ge_pi(e1: Ineq, e2: Ineq) -> bool:
    """True iff the counter-clockwise angular difference from e1 to e2 is >= pi."""
    cross = e1.a * e2.b - e2.a * e1.b
    if cross != 0:
        return cross < 0
    return e1.a * e2.a + e1.b * e2.b < 0


def intersect(e1: Ineq, e2: Ineq) -> Point | None:
    """The boundary-line crossing of two halfplanes, or None when parallel."""
    det = e1.a * e2.b - e2.a * e1.b
    if det == 0:
        return None
    return Point(
        Fraction(e1.c * e2.b - e2.c * e1.b, 1) / det,
        Fraction(e1.a * e2.c - e2.a * e1.c, 1) / det,
    )


def connect(p1: Point, p2: Point) -> Ineq:
    """The halfplane whose boundary passes through p1 and p2.

    Any p3 counter-clockwise of the ordered pair (p1, p2) lies strictly
    inside the feasible side.
    """
    if p1 == p2:
        raise GeometryError("cannot connect a point to itself")
    a = p2.y - p1.y
    b = p1.x - p2.x
    return canonical(a, b, a * p1.x + b * p1.y)


def saturates(p: Point, e: Ineq) -> bool:
    """True iff p lies exactly on the boundary line of e."""
    return e.eval(p) == e.c


def in_box(s: Fraction, p: Point) -> bool:
    """Strict Chebyshev test: p inside the open square (-s, s)^2."""
    return -s < p.x < s and -s < p.y < s


def orient(p: Point, q: Point, r: Point) -> int:
    """Turn direction of the path p -> q -> r.

    GT: counter-clockwise (left turn), EQ: collinear, LT: clockwise.
    """
    return _sign((q - p).cross(r - p))


def pivot_compare(pivot: Point, p1: Point, p2: Point) -> int:
    """Total counter-clockwise order of two points around a pivot.

    Primary key: angle of the vector from the pivot, increasing
    counter-clockwise from the positive x direction.  Collinear same-side
    ties are broken by squared distance from the pivot, ascending, so
    distinct points never compare EQ.
    """
    v1, v2 = p1 - pivot, p2 - pivot
    if (v1.x == 0 and v1.y == 0) or (v2.x == 0 and v2.y == 0):
        raise GeometryError("cannot order a point equal to the pivot")
    h1 = 0 if v1.y > 0 or (v1.y == 0 and v1.x > 0) else 1
    h2 = 0 if v2.y > 0 or (v2.y == 0 and v2.x > 0) else 1
    if h1 != h2:
        return LT if h1 < h2 else GT
    c = _sign(v1.cross(v2))
    if c != 0:
        return -c
    return _sign(v1.dot(v1) - v2.dot(v2))


@dataclass(frozen=True)
class HPoly:
    """A polyhedron as a finite list of canonical inequalities.

    The empty list denotes the whole plane.  ``normalized`` marks instances
    that are known satisfiable, non-redundant and strictly theta-sorted;
    the flag is carried, never verified here, and does not take part in
    equality.
    """

    ineqs: tuple[Ineq, ...]
    normalized: bool = field(default=False, compare=False)

    @classmethod
    def of(cls, ineqs, normalized: bool = False) -> "HPoly":
        return cls(tuple(ineqs), normalized)

    @property
    def is_universe(self) -> bool:
        return not self.ineqs

    def __iter__(self):
        return iter(self.ineqs)

    def __len__(self) -> int:
        return len(self.ineqs)


@dataclass(frozen=True)
class VRep:
    """Generator form: the set conv(points) + cone(rays plus the null ray)."""

    points: frozenset[Point]
    rays: frozenset[Dir]

    @classmethod
    def of(cls, points, rays) -> "VRep":
        return cls(frozenset(points), frozenset(rays))
