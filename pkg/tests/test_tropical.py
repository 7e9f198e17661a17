import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropwall.grassmann import plucker_ideal
from tropwall.grobner import GroebnerRegionError, ideals_equal
from tropwall.polycore import Ideal, Polynomial
from tropwall.polyhedra import verify_fan
from tropwall.tropical import (
    FanBudgetExceeded, groebner_cone, groebner_fan, lineality_space, newton_polytope_fan,
    toric_associated_prime, tropicalize, weight_in_trop,
)

XY = ("x", "y")
XYZ = ("x", "y", "z")


def I(text, ring):
    return Ideal.from_text(text, ring)


def test_groebner_fan_of_a_principal_ideal():
    J = I("x^4 + x^4*y - x^3*y + x^3*y^2 + y", XY)
    gf = groebner_fan(J)
    assert len(gf.fan.maximal_cones()) == 4
    assert sorted(gf.fan.rays()) == sorted([(1, 4), (1, -3), (-1, 0), (-1, -1)])
    ok, problems = verify_fan(gf.fan)
    assert ok, problems
    # the binomial initial ideals sit on the rays
    expected = {(1, 4): "x^4 + y", (1, -3): "x^3*y^2 + y", (-1, 0): "x^4*y + x^4", (-1, -1): "x^4*y + x^3*y^2"}
    for C in gf.all_cones():
        if C.dim == 1:
            assert ideals_equal(gf.initial_ideal(C), I(expected[C.rays[0]], XY))


coeff = st.integers(-3, 3).filter(bool)


@settings(max_examples=25)
@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), coeff, min_size=2, max_size=5))
def test_principal_fan_equals_newton_polytope_normal_fan(terms):
    f = Polynomial(XY, terms)
    gf = groebner_fan(Ideal(XY, [f]))
    oracle = newton_polytope_fan(f)
    assert [c.key for c in gf.fan.cones] == [c.key for c in oracle.cones]


def test_groebner_fan_rejects_nonhomogeneous_ideals():
    with pytest.raises(GroebnerRegionError):
        groebner_fan(I("x + y^2, x*y - 1", XY))


def test_budget_exhaustion_keeps_partial_result():
    with pytest.raises(FanBudgetExceeded) as e:
        groebner_fan(I("x^2*y + y^3 + x", XY), budget=1)
    assert e.value.partial is not None
    assert not e.value.partial.complete


def test_groebner_cone_contains_its_weight():
    J = I("x^2 + x*y + x*z + z^2", XYZ)
    gc = groebner_cone(J, (1, -1, 0))
    assert gc.cone.contains((1, -1, 0))
    assert list(gc.cone.lineality) == [(1, 1, 1)]
    assert list(gc.cone.rays) == [(0, -2, -1)]


def test_tropical_toy_curve():
    T = tropicalize(I("x + x*y + y", XY))
    flags = {c.cone.rays[0]: c.prime for c in T.maximal_cones()}
    assert flags == {(-1, 0): "not_prime", (0, -1): "not_prime", (1, 1): "prime"}
    assert T.f_vector() == [1, 3]


def test_quadric_surface():
    T = tropicalize(I("x^2 + x*y + x*z + z^2", XYZ))
    assert T.lineality == [(1, 1, 1)]
    assert T.f_vector() == [1, 3]
    c = T.find(ray=(0, -2, -1))
    assert c.prime == "prime"
    assert ideals_equal(c.initial_ideal, I("x*y + z^2", XYZ))
    # a representative differing by the lineality names the same cone
    assert T.find(ray=(2, 0, 1)) is c
    assert T.find(ray=(0, 0, 1)).prime == "not_prime"
    assert T.verify()[0]


def test_grassmannian_two_four():
    J = plucker_ideal(2, 4)
    T = tropicalize(J)
    assert len(T.lineality) == 4
    assert T.f_vector() == [1, 3]
    assert all(c.prime == "prime" for c in T.maximal_cones())
    assert len(lineality_space(J)) == 4


@pytest.mark.parametrize("text,ring", [
    ("x + x*y + y", XY),
    ("x^2 + x*y + x*z + z^2", XYZ),
    ("x*y + y*z + x*z + x + 1", XYZ),
])
def test_fundamental_theorem_oracle(text, ring):
    """Membership in the computed fan agrees with a direct test of in_w(I) at random weights."""
    J = I(text, ring)
    T = tropicalize(J)
    rng = random.Random(7)
    for _ in range(25):
        w = [Fraction(rng.randint(-4, 4)) for _ in ring]
        assert (T.cone_containing(w) is not None) == weight_in_trop(J, w)
    for c in T.cones:
        assert weight_in_trop(J, c.weight)


def test_json_export():
    T = tropicalize(I("x + x*y + y", XY))
    d = T.to_json()
    assert d["format_version"] == 1
    assert d["f_vector"] == [1, 3]
    assert sum(1 for c in d["cones"] if c["maximal"]) == 3
    assert all(c["monomial_free"] for c in d["cones"])


def test_toric_associated_prime():
    J, flag = toric_associated_prime(I("x + x*y", XY))
    assert flag is True
    assert ideals_equal(J, I("1 + y", XY))
    J, flag = toric_associated_prime(I("x^2 - y^2", XY))
    assert flag is False
