"""Establish the hull precondition: satisfiable, non-redundant, theta-sorted.

Redundancy is decided by an exact two-variable LP over the remaining system
(the oracle's enumeration-based ``lp_max``).  This is quadratic per call and
deliberately so: correctness is what matters here, and normalization is not
part of the scaling path.
"""

from __future__ import annotations

import functools

from .geometry import ContractError, HPoly, Ineq, theta_compare
from .oracle import INFEASIBLE, UNBOUNDED, Unsatisfiable, lp_max
from .oracle import is_satisfiable as _oracle_satisfiable


def is_satisfiable(E: HPoly) -> bool:
    """True iff the region is nonempty, decided exactly."""
    return _oracle_satisfiable(E)


def canonical_poly(E: HPoly) -> HPoly:
    """Sort a satisfiable, non-redundant system by normal angle.

    Structural equality of canonical_poly outputs is polyhedron identity
    for full-dimensional regions.  Rejects angular duplicates, which cannot
    occur in a non-redundant system.
    """
    out = sorted(E.ineqs, key=functools.cmp_to_key(theta_compare))
    for prev, cur in zip(out, out[1:]):
        if theta_compare(prev, cur) == 0:
            raise ContractError(f"{prev} and {cur} share a normal direction")
    return HPoly(tuple(out), normalized=True)


def remove_redundant(E: HPoly) -> HPoly:
    """Drop every inequality whose removal leaves the region unchanged.

    Deterministic: the list is theta-sorted, angular duplicates collapse to
    the tightest bound, then each survivor is tested in order against the
    rest of the current system.
    """
    if not is_satisfiable(E):
        raise Unsatisfiable("cannot normalize an empty region")
    if E.is_universe:
        return HPoly((), normalized=True)

    ordered = sorted(E.ineqs, key=functools.cmp_to_key(theta_compare))
    kept: list[Ineq] = []
    for e in ordered:
        if kept and theta_compare(kept[-1], e) == 0:
            if e.c < kept[-1].c:
                kept[-1] = e
        else:
            kept.append(e)

    i = 0
    while i < len(kept):
        e = kept[i]
        rest = HPoly(tuple(kept[:i] + kept[i + 1:]))
        bound = lp_max(rest, e.normal())
        if bound is not UNBOUNDED and bound is not INFEASIBLE and bound <= e.c:
            kept.pop(i)
        else:
            i += 1
    return HPoly(tuple(kept), normalized=True)


def normalize(E: HPoly) -> HPoly:
    """Satisfiability check, redundancy removal, canonical angular order."""
    return canonical_poly(remove_redundant(E))
