import random
from fractions import Fraction

from planarhull import HPoly, Point, VRep, canonical, normalize


def H(*triples) -> HPoly:
    """Raw polyhedron from (a, b, c) triples, canonicalized but not normalized."""
    return HPoly.of(canonical(*t) for t in triples)


def NH(*triples) -> HPoly:
    """Normalized polyhedron from (a, b, c) triples."""
    return normalize(H(*triples))


def sample_generated(vr: VRep, rng: random.Random) -> Point:
    """A random exact point of conv(points) + cone(rays | {0})."""
    pts = sorted(vr.points, key=lambda p: (p.x, p.y))
    weights = [Fraction(rng.randint(0, 8)) for _ in pts]
    if sum(weights) == 0:
        weights[rng.randrange(len(weights))] = Fraction(1)
    total = sum(weights)
    x = sum(w * p.x for w, p in zip(weights, pts)) / total
    y = sum(w * p.y for w, p in zip(weights, pts)) / total
    for r in sorted(vr.rays, key=lambda r: (r.dx, r.dy)):
        mu = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        x += mu * r.dx
        y += mu * r.dy
    return Point(x, y)
