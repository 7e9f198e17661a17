from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropwall.polycore import Ideal, ParseError, Polynomial, UnknownVariableError, infer_ring, parse_polynomial, parse_polynomials

R = ("x", "y", "z")


def P(text, ring=R, laurent=False):
    return parse_polynomial(text, ring, laurent)


terms = st.dictionaries(
    st.tuples(*[st.integers(0, 3)] * 3),
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    max_size=5,
)


@st.composite
def polys(draw):
    return Polynomial(R, draw(terms))


def test_parse_and_print():
    f = P("x^2 + 3*x*y - 1/2*z + 1")
    assert f.coefficient((2, 0, 0)) == 1
    assert f.coefficient((1, 1, 0)) == 3
    assert f.coefficient((0, 0, 1)) == Fraction(-1, 2)
    assert f.coefficient((0, 0, 0)) == 1
    assert P(str(f)) == f


def test_coefficient_forms():
    assert P("3x") == P("3*x")
    assert P("x*x*y") == P("x^2*y")
    assert P("2/4*x") == P("1/2*x")


@pytest.mark.parametrize("bad", ["(x+y)^2", "x/2", "x^", "2*", "x + + y", "1/0*x"])
def test_outside_grammar_rejected(bad):
    with pytest.raises(ParseError):
        P(bad)


def test_zero_terms_vanish():
    assert P("x - x").is_zero()
    assert P("0").is_zero()


def test_parse_errors_carry_offsets():
    with pytest.raises(ParseError) as e:
        P("x+*y")
    assert e.value.offset == 2
    with pytest.raises(UnknownVariableError) as e:
        P("x + w")
    assert e.value.offset == 4


def test_negative_exponent_needs_laurent():
    with pytest.raises(ParseError):
        P("x^-1")
    f = P("x^-1*y + 1", laurent=True)
    assert f.clear_denominators() == P("y + x")


def test_generator_list_and_comments():
    gens = parse_polynomials("x+y, y-z\n# a comment\nz^2; x", R)
    assert len(gens) == 4


def test_infer_ring_order_of_appearance():
    assert infer_ring("b*a + c^2 + a") == ("b", "a", "c")


def test_homogeneity_and_homogenize():
    f = P("x^2 + y + 1")
    assert not f.is_homogeneous()[0]
    g = f.homogenize("h")
    assert g.is_homogeneous() == (True, 2)
    assert g.dehomogenize("h") == f


def test_evaluate_and_specialize():
    f = P("x*y + z^2")
    assert f.evaluate([2, 3, Fraction(1, 2)]) == Fraction(25, 4)
    g = P("x*y + t*z", R + ("t",))
    assert g.specialize("t", 0) == P("x*y")


def test_ideal_basics():
    I = Ideal.from_text("x*y - z^2, x^2 - y*z", R)
    assert I.is_homogeneous()
    assert I.nvars == 3
    assert not Ideal(R, [P("x + 1")]).is_homogeneous()


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


@given(polys())
def test_print_parse_roundtrip(f):
    assert P(str(f)) == f


@given(polys(), st.integers(0, 3))
def test_power_matches_repeated_product(f, k):
    acc = Polynomial.constant(R, 1)
    for _ in range(k):
        acc = acc * f
    assert f ** k == acc


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_sum_matches_integer_arithmetic(a, b, c, d):
    s = Fraction(a, b) + Fraction(c, d)
    assert s * (b * d) == a * d + c * b
