"""Text format for H-polyhedra.

One inequality per line as three whitespace-separated rationals ``a b c``
meaning a*x + b*y <= c.  Rationals are an optionally signed integer or
``integer/positive-integer``.  ``#`` starts a comment, blank lines are
ignored, and a file with no inequality lines is the whole plane.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .geometry import GeometryError, HPoly, canonical

_RATIONAL = re.compile(r"[+-]?\d+(/[1-9]\d*)?\Z")


class HPolyParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


def parse_hpoly(text: str) -> HPoly:
    """Parse the text format; inequalities come out canonicalized."""
    ineqs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise HPolyParseError(lineno, f"expected 3 fields, got {len(tokens)}")
        values = []
        for tok in tokens:
            if not _RATIONAL.match(tok):
                raise HPolyParseError(lineno, f"malformed rational {tok!r}")
            values.append(Fraction(tok))
        try:
            ineqs.append(canonical(*values))
        except GeometryError:
            raise HPolyParseError(lineno, "inequality has zero normal (a = b = 0)")
    return HPoly.of(ineqs)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def emit_hpoly(E: HPoly) -> str:
    """Serialize a canonical polyhedron; exact round-trip with parse_hpoly."""
    return "".join(f"{e.a} {e.b} {_fmt(e.c)}\n" for e in E.ineqs)
