"""Exact rational linear algebra on lists of lists."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, Tuple

Vec = List[Fraction]


def frac_vec(v) -> Vec:
    return [Fraction(a) for a in v]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def rref(M: Sequence[Sequence]) -> Tuple[List[Vec], List[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    A = [frac_vec(r) for r in M]
    if not A:
        return [], []
    ncols = len(A[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = 1 / A[r][c]
        A[r] = [a * inv for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(M) -> int:
    return len(rref(M)[0]) if M else 0


def nullspace(M: Sequence[Sequence], n: int | None = None) -> List[Vec]:
    """Basis of {x : M x = 0}; one basis vector per free column."""
    if n is None:
        n = len(M[0]) if M else 0
    R, piv = rref(M) if M else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in zip(R, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis


def row_basis(M: Sequence[Sequence]) -> List[Vec]:
    return rref(M)[0]


def independent_rows(M: Sequence[Sequence]) -> List[int]:
    """Indices of a maximal linearly independent subset of rows, greedily from the top."""
    chosen: List[int] = []
    basis: List[Vec] = []
    pivots: List[int] = []
    for i, row in enumerate(M):
        v = frac_vec(row)
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p]
                v = [a - f * c for a, c in zip(v, b)]
        p = next((j for j, a in enumerate(v) if a), None)
        if p is None:
            continue
        inv = 1 / v[p]
        v = [a * inv for a in v]
        # keep earlier basis vectors reduced at the new pivot
        for k, b in enumerate(basis):
            if b[p]:
                f = b[p]
                basis[k] = [a - f * c for a, c in zip(b, v)]
        basis.append(v)
        pivots.append(p)
        chosen.append(i)
    return chosen


def solve(A: Sequence[Sequence], b: Sequence):
    """One solution x of A x = b, or None."""
    m = len(A)
    if m == 0:
        return None
    n = len(A[0])
    aug = [frac_vec(list(A[i]) + [b[i]]) for i in range(m)]
    R, piv = rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(R, piv):
        x[p] = row[n]
    return x


def inverse(A: Sequence[Sequence]) -> List[Vec]:
    n = len(A)
    aug = [frac_vec(list(A[i]) + [1 if j == i else 0 for j in range(n)]) for i in range(n)]
    R, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(R) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in R]


def transpose(M):
    return [list(r) for r in zip(*M)]


def matmul(A, B):
    Bt = transpose(B)
    return [[dot(r, c) for c in Bt] for r in A]


def matvec(A, v):
    return [dot(r, v) for r in A]


def primitive_int(v) -> List[int]:
    """Positive rescaling of a rational vector to a primitive integer vector."""
    fr = [Fraction(a) for a in v]
    m = 1
    for a in fr:
        m = lcm(m, a.denominator)
    ints = [int(a * m) for a in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return ints
    return [a // g for a in ints]


def reduce_modulo(v, basis_rref: List[Vec], pivots: List[int]) -> Vec:
    """Subtract the span of an RREF basis so that v vanishes on the pivot columns."""
    v = frac_vec(v)
    for row, p in zip(basis_rref, pivots):
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def in_span(v, basis_rref: List[Vec], pivots: List[int]) -> bool:
    return not any(reduce_modulo(v, basis_rref, pivots))


def orthogonal_complement(M: Sequence[Sequence], n: int) -> List[Vec]:
    return nullspace(M, n) if M else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
