"""Toric ideals of integer matrices, Ehrhart polynomials and normality checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Optional, Sequence, Tuple

from .grobner import GREVLEX, buchberger, hilbert_function, minimal_generators, saturate_variables
from .lattice import hermite_rows, in_lattice, integer_kernel, lll_reduce
from .polycore import Ideal, Polynomial
from .polyhedra import Polytope


class NonLatticePolytope(ValueError):
    pass


def default_ring(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def _binomial(ring, u) -> Polynomial:
    plus = tuple(max(a, 0) for a in u)
    minus = tuple(max(-a, 0) for a in u)
    return Polynomial(ring, {plus: 1, minus: -1}).content_normalized()


def columns(A) -> List[Tuple[int, ...]]:
    return [tuple(int(A[i][j]) for i in range(len(A))) for j in range(len(A[0]))]


def has_ones_row(A) -> bool:
    return any(all(int(a) == 1 for a in row) for row in A)


def toric_ideal(A: Sequence[Sequence[int]], ring: Optional[Sequence[str]] = None) -> Ideal:
    """I_A: kernel-lattice binomials saturated by the product of all variables."""
    n = len(A[0])
    if any(not any(int(A[i][j]) for i in range(len(A))) for j in range(n)):
        raise ValueError("A has a zero column")
    ring = tuple(ring) if ring is not None else default_ring(n)
    ker = lll_reduce(integer_kernel(A, n))
    if not ker:
        return Ideal(ring, [])
    I = Ideal(ring, [_binomial(ring, u) for u in ker])
    J = saturate_variables(I)
    G = buchberger(J, GREVLEX)
    if J.is_homogeneous():
        gens = minimal_generators(J, G.elements)
    else:
        gens = list(G.elements)
    out = Ideal(ring, [g.content_normalized() for g in gens])
    out.gb_cache[GREVLEX] = G
    return out


@dataclass
class ToricData:
    A: List[List[int]]

    @property
    def points(self) -> List[Tuple[int, ...]]:
        return columns(self.A)

    @property
    def polytope(self) -> Polytope:
        return Polytope(self.points)

    @property
    def lattice(self) -> List[List[int]]:
        """Hermite basis of the column lattice ZA."""
        return hermite_rows(self.points)

    def ideal(self, ring=None) -> Ideal:
        return toric_ideal(self.A, ring)


def lattice_count(P: Polytope, lattice: Optional[Sequence[Sequence[int]]] = None) -> int:
    pts = P.lattice_points()
    if lattice is None:
        return len(pts)
    return sum(1 for p in pts if in_lattice(lattice, p))


def _check_lattice_polytope(Q: Polytope, lattice):
    for v in Q.vertices:
        if any(a.denominator != 1 for a in v):
            raise NonLatticePolytope(f"vertex {[str(a) for a in v]} is not integral")
        if lattice is not None and not in_lattice(lattice, [int(a) for a in v]):
            raise NonLatticePolytope(f"vertex {[str(a) for a in v]} is not in the lattice")


def interpolate(values: Sequence[Tuple[int, int]]) -> List[Fraction]:
    """Coefficients (constant first) of the polynomial through the points (r, value)."""
    k = len(values)
    coeffs = [Fraction(0)] * k
    for i, (ri, vi) in enumerate(values):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (rj, _) in enumerate(values):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= rj * basis[t + 1]
            denom *= ri - rj
        for t in range(len(basis)):
            coeffs[t] += Fraction(vi) * basis[t] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def evaluate_univariate(coeffs: Sequence[Fraction], r) -> Fraction:
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * r + c
    return out


def ehrhart_polynomial(Q: Polytope, lattice: Optional[Sequence[Sequence[int]]] = None) -> List[Fraction]:
    """E_Q(r) = |lattice cap rQ| as coefficients in r, constant term first."""
    _check_lattice_polytope(Q, lattice)
    q = Q.dim
    values = [(r, lattice_count(Q.dilate(r), lattice) if r else 1) for r in range(q + 1)]
    return interpolate(values)


def normalized_volume(Q: Polytope, lattice=None) -> int:
    E = ehrhart_polynomial(Q, lattice)
    v = factorial(len(E) - 1) * E[-1]
    if v.denominator != 1:
        raise ArithmeticError("normalized volume is not an integer")
    return int(v)


def is_normal(P: Polytope, k_max: int, lattice=None) -> bool:
    """Bounded check: lattice points of kP are sums of k lattice points of P for k <= k_max."""
    _check_lattice_polytope(P, lattice)

    def pts(Q):
        L = Q.lattice_points()
        if lattice is not None:
            L = [p for p in L if in_lattice(lattice, p)]
        return set(L)

    base = pts(P)
    current = set(base)
    for k in range(2, k_max + 1):
        current = {tuple(a + b for a, b in zip(p, q)) for p in current for q in base}
        if pts(P.dilate(k)) - current:
            return False
    return True


def hilbert_ehrhart_table(A, degree_bound: int) -> List[Tuple[int, int, int]]:
    """Rows (r, Hilbert function of R/I_A at r, lattice count of ZA cap rQ)."""
    if not has_ones_row(A):
        raise ValueError("A needs a row of ones for the standard grading")
    data = ToricData([list(r) for r in A])
    I = data.ideal()
    Q = data.polytope
    lat = data.lattice
    E = ehrhart_polynomial(Q, lat)
    rows = []
    for r in range(degree_bound + 1):
        rows.append((r, hilbert_function(I, r), int(evaluate_univariate(E, r))))
    return rows


def hilbert_equals_ehrhart(A, degree_bound: int) -> bool:
    return all(h == e for _, h, e in hilbert_ehrhart_table(A, degree_bound))


def projective_space_check(n: int, degree_bound: int) -> bool:
    """Hilbert function of P^{n-1} against the closed form C(r+n-1, n-1)."""
    A = [[1] * n] + [[int(i == j) for j in range(n)] for i in range(n - 1)]
    return all(h == comb(r + n - 1, n - 1) == e for r, h, e in hilbert_ehrhart_table(A, degree_bound))
