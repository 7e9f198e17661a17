import random
from itertools import combinations_with_replacement
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropwall.grassmann import (
    exchange_relation, plucker_coordinate, plucker_coords, plucker_ideal, plucker_relations, plucker_ring,
    plucker_subsets,
)
from tropwall.polycore import parse_polynomial
from tropwall.polyhedra.linalg import rank


def test_gr24_relation():
    (g,) = plucker_ideal(2, 4).generators
    f = parse_polynomial("p12*p34 - p13*p24 + p14*p23", plucker_ring(2, 4))
    assert g == f or g == -f


def test_coordinates_of_the_worked_matrix():
    assert plucker_coords([[4, 3, 2, 1], [1, 2, 3, 4]]) == [5, 10, 15, 5, 10, 5]


def test_rank_deficient_matrix_rejected():
    with pytest.raises(ValueError):
        plucker_coords([[1, 2, 3], [2, 4, 6]])


def test_subsets_and_ring():
    assert plucker_subsets(2, 4)[:3] == [(1, 2), (1, 3), (1, 4)]
    assert plucker_ring(1, 3) == ("p1", "p2", "p3")
    with pytest.raises(ValueError):
        plucker_ring(2, 10)


def test_unsorted_index_sign():
    M = [[1, 2, 0, 1], [0, 1, 3, 1]]
    assert plucker_coordinate(M, (2, 1)) == -plucker_coordinate(M, (1, 2))


@pytest.mark.parametrize("k,n,count", [(1, 4, 0), (2, 4, 1), (2, 5, 5), (2, 6, 15), (3, 6, 35)])
def test_number_of_quadrics(k, n, count):
    assert len(plucker_relations(k, n)) == count


PRIME = 2_147_483_647


def rank_mod_p(rows):
    rows = [[a % PRIME for a in r] for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, PRIME)
        rows[r] = [a * inv % PRIME for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % PRIME for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def quadric_count_oracle(k, n, samples, seed=1):
    """C(N+1, 2) minus the rank of degree-2 monomials evaluated at random points of Gr(k, n).

    The rank is taken mod a prime, which can only lower it, so the result is an
    upper bound for the number of independent quadrics.  Our relations are
    independent and vanish on the Grassmannian, so their number is a lower
    bound; equality of the two pins the count down exactly.
    """
    rng = random.Random(seed)
    N = comb(n, k)
    pairs = list(combinations_with_replacement(range(N), 2))
    rows = []
    for _ in range(samples):
        M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
        try:
            p = plucker_coords(M)
        except ValueError:
            continue
        rows.append([int(p[i] * p[j]) for i, j in pairs])
    return len(pairs) - rank_mod_p(rows)


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5), (3, 6)])
def test_quadric_count_matches_evaluation_rank(k, n):
    samples = comb(comb(n, k) + 1, 2) + 20
    rels = plucker_relations(k, n)
    mons = sorted({e for g in rels for e in g.terms})
    assert rank([[g.terms.get(m, 0) for m in mons] for g in rels]) == len(rels)
    assert len(rels) == quadric_count_oracle(k, n, samples)


def test_literal_rule_is_too_small_beyond_k2():
    assert len(plucker_relations(2, 5, literal=True)) == 5
    assert len(plucker_relations(3, 6, literal=True)) == 4


def test_exchange_relation_shape():
    ring = plucker_ring(2, 4)
    f = exchange_relation((1, 2), (3, 4), ring)
    assert len(f.terms) == 3


matrices = st.lists(st.lists(st.integers(-5, 5), min_size=6, max_size=6), min_size=3, max_size=3)


@settings(max_examples=30)
@given(matrices)
def test_relations_vanish_on_minors(M):
    try:
        p = plucker_coords(M)
    except ValueError:
        return
    for g in plucker_relations(3, 6):
        assert g.evaluate(p) == 0
