"""Command line surface: hull, extreme, normalize, gen, bench."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from .decompose import extreme
from .geometry import ContractError, GeometryError, HPoly
from .hpolyfile import HPolyParseError, _fmt, emit_hpoly, parse_hpoly
from .normalize import canonical_poly, normalize
from .oracle import SHAPES, Unsatisfiable, hull_naive, poly_equal, vrep_naive
from .reconstruct import box_size, hull


def _read_poly(path: str) -> HPoly:
    return parse_hpoly(Path(path).read_text(encoding="utf-8"))


def _write_out(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _prepare(E: HPoly, no_normalize: bool, name: str) -> HPoly:
    if E.is_universe:
        return E
    if not no_normalize:
        return normalize(E)
    strict = canonical_poly(E)  # raises ContractError on angular duplicates
    if strict.ineqs != E.ineqs:
        raise ContractError(f"{name}: --no-normalize requires theta-sorted input")
    return strict


def _mismatch_witness(out: HPoly, ref: HPoly) -> str:
    for mine, other, tag in ((out, ref, "missing from result"),
                             (ref, out, "not implied by oracle")):
        if mine.is_universe:
            continue
        vr = vrep_naive(mine)
        for e in other.ineqs:
            for r in vr.rays:
                if e.a * r.dx + e.b * r.dy > 0:
                    return f"{tag}: {e} fails on ray {r}"
            for p in vr.points:
                if e.eval(p) > e.c:
                    return f"{tag}: {e} fails at point {p}"
    return "regions differ"


def _cmd_hull(args) -> int:
    E1 = _prepare(_read_poly(args.a), args.no_normalize, args.a)
    E2 = _prepare(_read_poly(args.b), args.no_normalize, args.b)
    result = hull(E1, E2)
    if args.verify:
        ref = hull_naive(E1, E2)
        if not poly_equal(result, ref):
            print(f"verification mismatch: {_mismatch_witness(result, ref)}",
                  file=sys.stderr)
            return 1
    _write_out(emit_hpoly(result), args.out)
    if args.svg:
        from .render import draw_hull

        if E1.is_universe or E2.is_universe:
            s = 1
        else:
            pts = extreme(E1).points | extreme(E2).points
            s = box_size(pts)
        draw_hull(E1, E2, result, s, args.svg)
    return 0


def _cmd_extreme(args) -> int:
    E = normalize(_read_poly(args.a))
    if E.is_universe:
        raise ContractError("cannot decompose the universe (no inequalities)")
    vr = extreme(E)
    for p in sorted(vr.points, key=lambda p: (p.x, p.y)):
        print(f"P {_fmt(p.x)} {_fmt(p.y)}")
    for r in sorted(vr.rays, key=lambda r: (r.dx, r.dy)):
        print(f"R {r.dx} {r.dy}")
    return 0


def _cmd_normalize(args) -> int:
    _write_out(emit_hpoly(normalize(_read_poly(args.a))), args.out)
    return 0


def _cmd_gen(args) -> int:
    from .oracle import gen_instance

    E = gen_instance(args.seed, args.n, args.coeff_bound, args.shape)
    _write_out(emit_hpoly(E), args.out)
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    rows = bench_mod.run_bench(sizes, args.reps, presorted=args.presorted)
    sys.stdout.write(bench_mod.format_table(rows))
    if args.plot:
        from .render import draw_bench

        draw_bench(rows, args.plot)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarhull",
        description="Exact convex hulls of planar H-polyhedra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="smallest H-polyhedron containing two inputs")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--out")
    p.add_argument("--no-normalize", action="store_true",
                   help="trust inputs to be normalized already")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the brute-force oracle")
    p.add_argument("--svg", metavar="FILE", help="render inputs, result and box")
    p.set_defaults(func=_cmd_hull)

    p = sub.add_parser("extreme", help="print generator points and rays")
    p.add_argument("a")
    p.set_defaults(func=_cmd_extreme)

    p = sub.add_parser("normalize", help="satisfiability check plus redundancy removal")
    p.add_argument("a")
    p.add_argument("-o", "--out")
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("gen", help="seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff-bound", type=int, default=16)
    p.add_argument("--shape", choices=SHAPES, default="random")
    p.add_argument("-o", "--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="scaling benchmark")
    p.add_argument("--sizes", default="4096,8192,16384,32768")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--presorted", action="store_true",
                   help="feed theta-sorted inputs and skip the angular sort")
    p.add_argument("--plot", metavar="FILE", help="save a log-log timing figure")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HPolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except Unsatisfiable as exc:
        print(f"unsatisfiable: {exc}", file=sys.stderr)
        return 3
    except (ContractError, GeometryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
