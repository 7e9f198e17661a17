"""Pluecker ideals and Pluecker coordinates of explicit matrices."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from .polycore import Ideal, Polynomial
from .polyhedra.linalg import rank


def plucker_subsets(k: int, n: int) -> List[Tuple[int, ...]]:
    """k-subsets of [n] (1-based) in lexicographic order."""
    return list(combinations(range(1, n + 1), k))


def plucker_variable(subset: Sequence[int]) -> str:
    # digits are concatenated, so this naming is unambiguous only for n <= 9
    return "p" + "".join(str(i) for i in subset)


def plucker_ring(k: int, n: int) -> Tuple[str, ...]:
    if n > 9:
        raise ValueError("variable naming p<digits> supports n <= 9 only")
    return tuple(plucker_variable(s) for s in plucker_subsets(k, n))


def _sorted_with_sign(idx: Sequence[int]):
    """(sign, sorted tuple) of an index sequence; sign 0 when an index repeats."""
    if len(set(idx)) < len(idx):
        return 0, None
    arr = list(idx)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return sign, tuple(arr)


def exchange_relation(I: Sequence[int], J: Sequence[int], ring, position: int = -1) -> Polynomial:
    """p_I p_J - sum_{j in J} p_{I(i_a -> j)} p_{J(j -> i_a)} with i_a = I[position]."""
    index = {name: t for t, name in enumerate(ring)}
    n = len(ring)

    def term(A, B, coeff):
        sa, a = _sorted_with_sign(A)
        sb, b = _sorted_with_sign(B)
        if not sa or not sb:
            return None
        e = [0] * n
        e[index[plucker_variable(a)]] += 1
        e[index[plucker_variable(b)]] += 1
        return tuple(e), coeff * sa * sb

    terms = {}

    def add(t):
        if t is None:
            return
        e, c = t
        terms[e] = terms.get(e, 0) + c

    add(term(I, J, 1))
    pos = position % len(I)
    ia = I[pos]
    for q, j in enumerate(J):
        A = list(I)
        A[pos] = j
        B = list(J)
        B[q] = ia
        add(term(A, B, -1))
    return Polynomial(ring, terms)


def plucker_relations(k: int, n: int, literal: bool = False) -> List[Polynomial]:
    """Exchange relations spanning the quadrics of the Pluecker ideal.

    ``literal`` keeps only disjoint I, J with i_a the last index of I.  That
    generates the ideal for k <= 2 but not beyond (for Gr(3,6) it spans 4 of
    the 35 quadrics), so by default every pair I != J and every position of
    i_a is used and a linearly independent subset is kept, chosen greedily in
    a fixed order.
    """
    from .polyhedra.linalg import independent_rows

    ring = plucker_ring(k, n)
    subsets = plucker_subsets(k, n)
    seen = {}
    for I in subsets:
        for J in subsets:
            if I == J:
                continue
            if literal and (set(I) & set(J) or I > J):
                continue
            positions = [k - 1] if literal else range(k)
            for pos in positions:
                f = exchange_relation(I, J, ring, pos)
                if not f.is_zero():
                    seen.setdefault(f.content_normalized(), None)
    rels = sorted(seen, key=lambda f: (len(f.terms), [(-sum(e), tuple(-x for x in e)) for e, _ in f.sorted_terms()]))
    mons = sorted({e for g in rels for e in g.terms})
    keep = independent_rows([[g.terms.get(m, 0) for m in mons] for g in rels]) if rels else []
    return [rels[i] for i in keep]


def plucker_ideal(k: int, n: int, literal: bool = False) -> Ideal:
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return Ideal(plucker_ring(k, n), plucker_relations(k, n, literal))


def _det(M) -> Fraction:
    M = [[Fraction(a) for a in row] for row in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return det


def plucker_coords(M: Sequence[Sequence]) -> List[Fraction]:
    """Maximal minors p_I = det(M_I) in lexicographic order of I."""
    k = len(M)
    n = len(M[0])
    if rank(M) < k:
        raise ValueError("matrix does not have full row rank")
    return [_det([[row[i - 1] for i in I] for row in M]) for I in plucker_subsets(k, n)]


def plucker_coordinate(M, J: Sequence[int]) -> Fraction:
    """det(M_J) for an arbitrary index sequence, consistent with p_J = sgn(J) p_I."""
    return _det([[row[i - 1] for i in J] for row in M])
