from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropwall.polyhedra import (
    Cone, Fan, Infeasible, Polytope, Unbounded, are_adjacent, dd_convert, lp_optimize, relint_meets, verify_fan,
)

pts2 = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=9, unique=True)


def monotone_chain(points):
    """Vertices of the 2D convex hull (textbook monotone chain, collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return sorted(set(lower[:-1] + upper[:-1]))


def is_collinear(points):
    p0 = points[0]
    return all((p[0] - p0[0]) * (q[1] - p0[1]) == (p[1] - p0[1]) * (q[0] - p0[0]) for p in points for q in points)


@settings(max_examples=60)
@given(pts2)
def test_polytope_vertices_match_monotone_chain(points):
    P = Polytope(points)
    if is_collinear(points):
        ends = [min(points), max(points)]
        assert sorted(tuple(int(a) for a in v) for v in P.vertices) == sorted(set(ends))
    else:
        assert sorted(tuple(int(a) for a in v) for v in P.vertices) == monotone_chain(points)


@settings(max_examples=60)
@given(pts2)
def test_hrep_roundtrip(points):
    P = Polytope(points)
    Q = Polytope.from_hrep(P.inequalities(), P.equations(), 2)
    assert P == Q
    for p in points:
        assert P.contains(p)


@settings(max_examples=60)
@given(pts2, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_lp_matches_vertex_enumeration(points, c):
    P = Polytope(points)
    best = max(c[0] * p[0] + c[1] * p[1] for p in points)
    res = lp_optimize(c, P.inequalities(), P.equations(), maximize=True, nvars=2)
    assert res.value == best
    assert P.contains(res.point)


@settings(max_examples=40)
@given(pts2)
def test_lattice_points_match_brute_force(points):
    P = Polytope(points)
    brute = [p for p in product(range(-5, 6), repeat=2) if P.contains(p)]
    assert sorted(P.lattice_points()) == sorted(brute)


def test_lp_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        lp_optimize([1, 0], [([1, 0], 1), ([-1, 0], 0)], nvars=2)
    with pytest.raises(Unbounded):
        lp_optimize([1, 0], [([1, 0], 0)], nvars=2)


def test_cone_h_and_v_descriptions_agree():
    C = Cone([(1, 0, 0), (0, 1, 0), (1, 1, 1)])
    D = Cone.from_hrep(C.facets, C.equations, 3)
    assert C == D
    assert C.dim == 3 and C.lineality_dim == 0
    assert C.contains_relint(C.relative_interior_point())


def test_cone_with_lineality():
    C = Cone([(0, 1, 0)], [(1, 1, 1)])
    assert C.dim == 2 and C.lineality_dim == 1
    assert C.contains((5, 6, 5))
    assert not C.contains((0, -1, 0))
    # rays are canonical representatives modulo the lineality space
    assert Cone([(1, 2, 1)], [(1, 1, 1)]) == C


def test_simplicial_cone_face_count():
    C = Cone([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert len(C.faces()) == 8


def test_dd_convert_both_directions():
    h = dd_convert(rays=[(1, 0), (1, 1)])
    v = dd_convert(ineqs=h["ineqs"], equations=h["equations"], ambient=2)
    assert sorted(map(tuple, v["rays"])) == [(1, 0), (1, 1)]
    with pytest.raises(ValueError):
        dd_convert()


def test_adjacency():
    A = Cone([(1, 0), (1, 1)])
    B = Cone([(1, 1), (0, 1)])
    C = Cone([(0, 1), (-1, 0)])
    assert are_adjacent(A, B)
    assert not are_adjacent(A, C)


def test_relint_meets():
    C = Cone([(1, 0), (0, 1)])
    assert relint_meets(C, [(1, -1)]) is not None
    assert relint_meets(C, [(-1, 0)]) is None


def test_fan_of_the_square_normal_fan():
    quads = [Cone([(a, 0), (0, b)]) for a, b in product((1, -1), repeat=2)]
    F = Fan(quads)
    ok, problems = verify_fan(F, require_closed=False)
    assert ok, problems
    assert F.f_vector() == [1, 4, 4]
    G = Fan.from_json(F.to_json())
    assert [c.key for c in G.cones] == [c.key for c in F.cones]


def test_overlapping_cones_fail_verification():
    ok, problems = verify_fan([Cone([(1, 0), (1, 2)]), Cone([(1, 1), (0, 1)])])
    assert not ok and problems


def test_polytope_operations():
    sq = Polytope([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert sq.dilate(2).lattice_points().__len__() == 9
    assert sq.translate((1, 1)).contains((2, 2))
    assert sq.project([0]).vertices == [(0,), (1,)]
    assert sq.face((1, 1)).vertices == [(1, 1)]
    assert sq.barycenter() == [Fraction(1, 2), Fraction(1, 2)]
    assert Polytope.from_json(sq.to_json()) == sq


def test_cone_json_roundtrip():
    C = Cone([(0, 1, 0)], [(1, 1, 1)])
    assert Cone.from_json(C.to_json()) == C
