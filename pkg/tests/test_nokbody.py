from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropwall.grobner import hilbert_function
from tropwall.nokbody import (
    ValuationUndefined, WeightMatrix, check_adapted_basis, check_khovanskii, column_sumset, find_quasivaluation_witness,
    initial_valuation, leaf_dimension, no_body, no_cone, standard_monomials_by_degree, value_key,
    value_semigroup_elements, values_in_degree, weight_quasivaluation,
)
from tropwall.polycore import Ideal, Polynomial, parse_polynomial

R = ("x", "y", "z")
QUADRIC = Ideal.from_text("x^2 + x*y + x*z + z^2", R)
M = WeightMatrix([[1, 1, 1], [2, 0, 1]])


def P(text):
    return parse_polynomial(text, R)


def v(*a):
    return tuple(Fraction(x) for x in a)


def test_values_of_generators():
    assert weight_quasivaluation(M, QUADRIC, P("x")) == v(1, 2)
    assert weight_quasivaluation(M, QUADRIC, P("y")) == v(1, 0)
    assert weight_quasivaluation(M, QUADRIC, P("z")) == v(1, 1)
    assert weight_quasivaluation(M, QUADRIC, P("x*y")) == v(2, 2)
    assert weight_quasivaluation(M, QUADRIC, P("3")) == v(0, 0)


def test_value_of_an_ideal_element_is_undefined():
    with pytest.raises(ValuationUndefined):
        weight_quasivaluation(M, QUADRIC, P("x^2 + x*y + x*z + z^2"))


def test_value_order_reverses_the_degree():
    assert value_key(v(1, 0)) > value_key(v(2, 5))
    assert value_key(v(1, 2)) > value_key(v(1, 0))


def test_body_and_cone():
    assert no_body(M).vertices == [v(1, 0), v(1, 2)]
    C = no_cone(M)
    assert sorted(C.rays) == [(1, 0), (1, 2)]


def test_semigroup_is_generated_by_columns():
    assert value_semigroup_elements(M, QUADRIC, 0) == {v(0, 0)}
    assert value_semigroup_elements(M, QUADRIC, 1) == {v(1, 2), v(1, 0), v(1, 1)}
    for bound in (2, 3):
        assert value_semigroup_elements(M, QUADRIC, bound) == column_sumset(M, bound)


def test_one_dimensional_leaves():
    for d in range(1, 4):
        vals = values_in_degree(M, QUADRIC, d)
        assert len(vals) == hilbert_function(QUADRIC, d)
        assert all(leaf_dimension(M, QUADRIC, d, a) == 1 for a in vals)


def test_khovanskii_and_adapted_bases():
    assert check_khovanskii([P("x"), P("y"), P("z")], M, QUADRIC, 3)
    assert not check_khovanskii([P("x")], M, QUADRIC, 2)
    basis = [Polynomial.constant(R, 1)]
    for d in (1, 2):
        basis += [Polynomial.monomial(R, e) for e in standard_monomials_by_degree(M, QUADRIC, d)]
    assert check_adapted_basis(basis, M, QUADRIC, 2)


homog = st.builds(
    lambda d, cs: Polynomial(R, {e: c for e, c in zip(
        [(a, b, d - a - b) for a in range(d + 1) for b in range(d + 1 - a)], cs) if c}),
    st.integers(1, 2), st.lists(st.integers(-2, 2), min_size=6, max_size=6),
).filter(lambda f: not f.is_zero())


@settings(max_examples=60)
@given(homog, homog)
def test_prime_cone_gives_a_valuation(f, g):
    try:
        vf, vg, vfg = (weight_quasivaluation(M, QUADRIC, p) for p in (f, g, f * g))
    except ValuationUndefined:
        return
    assert vfg == tuple(a + b for a, b in zip(vf, vg))


@settings(max_examples=60)
@given(homog, homog)
def test_quasivaluation_inequalities(f, g):
    # on the non-prime toy cone multiplicativity may fail, but never in the other direction
    S = ("h", "x", "y")
    H = Ideal.from_text("x*h + x*y + y*h", S)
    N = [[1, 1, 1], [0, -1, 0]]
    f, g = Polynomial(S, f.terms), Polynomial(S, g.terms)
    try:
        vf, vg, vfg = (weight_quasivaluation(N, H, p) for p in (f, g, f * g))
    except ValuationUndefined:
        return
    assert value_key(vfg) >= value_key(tuple(a + b for a, b in zip(vf, vg)))


def test_non_prime_cone_has_a_strict_witness():
    H = Ideal.from_text("x*h + x*y + y*h", ("h", "x", "y"))
    w = find_quasivaluation_witness([[1, 1, 1], [0, -1, 0]], H)
    assert w is not None
    f, g, vfg, vsum = w
    assert value_key(vfg) > value_key(vsum)


def test_prime_cone_has_no_small_witness():
    assert find_quasivaluation_witness(M, QUADRIC) is None


def test_initial_valuation_on_the_polynomial_ring():
    assert initial_valuation(M, P("x + y")) == v(1, 0)


def test_prime_initial_ideal_matches_toric_ideal_up_to_signs():
    from itertools import product as signs

    from tropwall.grobner import ideals_equal
    from tropwall.toricideal import toric_ideal
    from tropwall.tropical import tropicalize

    R = ("x", "y", "z")
    T = tropicalize(Ideal.from_text("x^2+x*y+x*z+z^2", R))
    J = T.find(ray=(0, -2, -1)).initial_ideal
    IA = toric_ideal([[1, 1, 1], [2, 0, 1]])
    gens = [Polynomial(R, g.terms) for g in IA.generators]
    assert not ideals_equal(J, Ideal(R, gens))

    def rescale(p, s):
        return Polynomial(R, {e: c * s[0] ** e[0] * s[1] ** e[1] * s[2] ** e[2] for e, c in p.terms.items()})

    assert any(ideals_equal(J, Ideal(R, [rescale(g, s) for g in gens])) for s in signs((1, -1), repeat=3))
