"""Figure rendering for instances and hull results.

Regions are clipped exactly against a square viewport three times the size
of the translation box, then handed to matplotlib; saving to a ``.svg``
path produces a vector file.  Purely illustrative output: nothing in the
library depends on it.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import HPoly, Point


def clip_to_viewport(E: HPoly, half_width: Fraction) -> list[Point]:
    """Exact intersection polygon of the region with a centred square.

    Sutherland-Hodgman against each halfplane; empty list if the region
    misses the viewport entirely.
    """
    w = Fraction(half_width)
    poly = [Point(-w, -w), Point(w, -w), Point(w, w), Point(-w, w)]
    for e in E.ineqs:
        if not poly:
            return []
        out: list[Point] = []
        for i, p in enumerate(poly):
            q = poly[(i + 1) % len(poly)]
            p_in = e.eval(p) <= e.c
            q_in = e.eval(q) <= e.c
            if p_in:
                out.append(p)
            if p_in != q_in:
                denom = e.eval(q) - e.eval(p)
                t = (e.c - e.eval(p)) / denom
                out.append(Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
        poly = out
    return poly


def _xy(poly: list[Point]) -> tuple[list[float], list[float]]:
    return [float(p.x) for p in poly], [float(p.y) for p in poly]


def draw_hull(E1: HPoly, E2: HPoly, result: HPoly, s: Fraction, path: str) -> None:
    """Render the two inputs, the hull outline and the box to a figure file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    w = 3 * Fraction(s)
    fig, ax = plt.subplots(figsize=(6, 6))
    for E, color, label in ((E1, "tab:blue", "input A"), (E2, "tab:orange", "input B")):
        poly = clip_to_viewport(E, w)
        if poly:
            xs, ys = _xy(poly)
            ax.fill(xs, ys, color=color, alpha=0.35, lw=0, label=label)
    res = clip_to_viewport(result, w)
    if res:
        xs, ys = _xy(res)
        ax.fill(xs + xs[:1], ys + ys[:1], facecolor="none", edgecolor="black",
                lw=1.8, label="hull")
    sf = float(s)
    ax.plot([-sf, sf, sf, -sf, -sf], [-sf, -sf, sf, sf, -sf],
            ls="--", lw=0.9, color="gray", label="box")
    wf = float(w)
    ax.set_xlim(-wf, wf)
    ax.set_ylim(-wf, wf)
    ax.set_aspect("equal")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fmt = None if "." in path.rsplit("/", 1)[-1] else "svg"
    fig.savefig(path, format=fmt)
    plt.close(fig)


def draw_bench(rows, path: str) -> None:
    """Log-log runtime plot for the scaling table."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [r["n"] for r in rows]
    ts = [r["median_s"] for r in rows]
    fig, ax = plt.subplots(figsize=(5, 4))
    ax.loglog(ns, ts, "o-", base=2)
    ax.set_xlabel("total inequalities n")
    ax.set_ylabel("median hull time [s]")
    ax.grid(True, which="both", lw=0.3)
    fig.tight_layout()
    fmt = None if "." in path.rsplit("/", 1)[-1] else "svg"
    fig.savefig(path, format=fmt)
    plt.close(fig)
