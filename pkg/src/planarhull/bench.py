"""Scaling benchmark: polygon-like instances and doubling-ratio timings.

Instances are convex lattice polygons built from angularly sorted primitive
vectors, so every vertex is an integer point and coordinate growth stays
tame.  Construction happens outside the timed region.
"""

from __future__ import annotations

import math
import time
from statistics import median

from .counters import counters
from .geometry import HPoly, Point, connect
from .normalize import canonical_poly
from .reconstruct import hull


def _primitive_vectors(m: int) -> list[tuple[int, int]]:
    vecs = [
        (dx, dy)
        for dx in range(-m, m + 1)
        for dy in range(-m, m + 1)
        if (dx or dy) and math.gcd(abs(dx), abs(dy)) == 1
    ]
    vecs.sort(key=lambda v: (math.atan2(v[1], v[0])))
    return vecs


def convex_polygon(n: int, offset: tuple[int, int] = (0, 0)) -> HPoly:
    """A normalized convex polygon with exactly n edges and integer vertices.

    Edge directions are primitive vectors sorted by angle; antipodal pairs
    are dropped until exactly n remain, which keeps the direction sum zero
    and the polygon closed.  n must be even and at least 4.
    """
    if n < 4 or n % 2:
        raise ValueError("n must be even and >= 4")
    m = 1
    while len(_primitive_vectors(m)) < n:
        m += 1
    vecs = _primitive_vectors(m)
    excess = len(vecs) - n
    if excess:
        drop: set[tuple[int, int]] = set()
        for v in vecs:
            if len(drop) == excess:
                break
            if v not in drop and (-v[0], -v[1]) not in drop:
                drop.add(v)
                drop.add((-v[0], -v[1]))
        vecs = [v for v in vecs if v not in drop]
    assert len(vecs) == n

    x, y = offset
    verts = []
    for dx, dy in vecs:
        verts.append(Point(x, y))
        x, y = x + dx, y + dy
    assert (x, y) == offset, "edge directions must sum to zero"
    edges = [connect(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return canonical_poly(HPoly.of(edges))


def build_pair(total_n: int) -> tuple[HPoly, HPoly]:
    """Two overlapping polygon instances whose sizes sum to total_n."""
    half = total_n // 2
    if half % 2:
        half += 1
    E1 = convex_polygon(half)
    # shift the twin so the regions overlap but neither swallows the other
    span = max(int(abs(p)) for e in E1.ineqs for p in (e.c,)) or 1
    E2 = convex_polygon(total_n - half, offset=(max(1, span // 4), 0))
    return E1, E2


def run_bench(sizes, reps: int, presorted: bool = False) -> list[dict]:
    """Median hull times per size plus the consecutive doubling ratio."""
    rows: list[dict] = []
    prev = None
    for n in sizes:
        E1, E2 = build_pair(n)
        times = []
        for _ in range(reps):
            counters.reset()
            t0 = time.perf_counter()
            hull(E1, E2, assume_sorted=presorted)
            times.append(time.perf_counter() - t0)
            if presorted and counters.extreme_sorts:
                raise AssertionError("presorted run invoked the angular sort")
        med = median(times)
        rows.append({
            "n": n,
            "median_s": med,
            "ratio": (med / prev) if prev else None,
        })
        prev = med
    return rows


def format_table(rows) -> str:
    lines = ["n\tmedian_s\tratio"]
    for r in rows:
        ratio = f"{r['ratio']:.3f}" if r["ratio"] is not None else "-"
        lines.append(f"{r['n']}\t{r['median_s']:.6f}\t{ratio}")
    return "\n".join(lines) + "\n"
