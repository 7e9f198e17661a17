"""Weight quasi-valuations, value semigroups and Newton-Okounkov cones and bodies.

Values live in Q^d ordered lexicographically with the first coordinate
reversed.  For a weight matrix M the quasi-valuation of a residue class is
the M-weight of the minimal term of its normal form with respect to an
order whose leading term is the term of minimal M-value; by standard
Groebner theory this normal form attains the maximum over all
representatives of the class.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .grobner import buchberger, hilbert_function, monomials_of_degree
from .orders import OrderDescriptor
from .polycore import Ideal, Polynomial
from .polyhedra import Cone, Polytope

Value = Tuple[Fraction, ...]


class ValuationUndefined(ValueError):
    pass


@dataclass(frozen=True)
class WeightMatrix:
    rows: Tuple[Tuple[Fraction, ...], ...]

    def __init__(self, rows):
        object.__setattr__(self, "rows", tuple(tuple(Fraction(a) for a in r) for r in rows))
        if len({len(r) for r in self.rows}) != 1:
            raise ValueError("weight matrix rows must have equal length")

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> Value:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> List[Value]:
        return [self.column(j) for j in range(self.n)]

    def apply(self, exp) -> Value:
        return tuple(sum((a * e for a, e in zip(r, exp)), Fraction(0)) for r in self.rows)

    def is_homogeneous_convention(self) -> bool:
        return all(a == 1 for a in self.rows[0])

    def drop_last_row(self) -> "WeightMatrix":
        return WeightMatrix(self.rows[:-1])

    def order(self, tiebreak: str = "grevlex") -> OrderDescriptor:
        """Monomial order whose leading term is the term of minimal value."""
        rows = [tuple(-a for a in self.rows[0])] + [tuple(r) for r in self.rows[1:]]
        return OrderDescriptor(tiebreak, tuple(rows))

    def to_json(self):
        return [[str(a) for a in r] for r in self.rows]


def value_key(v: Sequence) -> tuple:
    """Sort key: larger key means larger value in the valuation order."""
    return (-v[0],) + tuple(v[1:])


def value_less(a, b) -> bool:
    return value_key(a) < value_key(b)


def value_min(values: Iterable[Value]) -> Value:
    return min(values, key=value_key)


def _add(a, b) -> Value:
    return tuple(x + y for x, y in zip(a, b))


def _as_matrix(M) -> WeightMatrix:
    return M if isinstance(M, WeightMatrix) else WeightMatrix(M)


def initial_valuation(M, f: Polynomial) -> Value:
    """The weight valuation on the polynomial ring: minimal M-value among terms."""
    M = _as_matrix(M)
    if f.is_zero():
        raise ValuationUndefined("valuation of zero")
    return value_min(M.apply(e) for e in f.terms)


def weight_quasivaluation(M, I: Ideal, f: Polynomial, tiebreak: str = "grevlex") -> Value:
    """nu_M of the residue class of f in R/I."""
    M = _as_matrix(M)
    G = buchberger(I, M.order(tiebreak))
    r = G.reduce(f)
    if r.is_zero():
        raise ValuationUndefined("polynomial lies in the ideal")
    return initial_valuation(M, r)


def standard_monomials_by_degree(M, I: Ideal, d: int, tiebreak: str = "grevlex") -> List[Tuple[int, ...]]:
    M = _as_matrix(M)
    G = buchberger(I, M.order(tiebreak))
    return [e for e in sorted(monomials_of_degree(I.nvars, d), reverse=True)
            if not any(all(x <= y for x, y in zip(l, e)) for l in G.leads)]


def values_in_degree(M, I: Ideal, d: int, tiebreak: str = "grevlex") -> Set[Value]:
    M = _as_matrix(M)
    return {M.apply(e) for e in standard_monomials_by_degree(M, I, d, tiebreak)}


def value_semigroup_elements(M, I: Ideal, degree_bound: int, tiebreak: str = "grevlex") -> Set[Value]:
    """Values of nonzero homogeneous classes of degree 1..bound ({0} when bound is 0)."""
    M = _as_matrix(M)
    if degree_bound <= 0:
        return {tuple(Fraction(0) for _ in range(M.d))}
    out: Set[Value] = set()
    for d in range(1, degree_bound + 1):
        out |= values_in_degree(M, I, d, tiebreak)
    return out


def column_sumset(M, degree_bound: int) -> Set[Value]:
    """Sums of 1..bound columns of M (the semigroup they generate, truncated)."""
    M = _as_matrix(M)
    cols = sorted(set(M.columns()))
    out = set()
    for d in range(1, degree_bound + 1):
        for combo in combinations_with_replacement(cols, d):
            v = combo[0]
            for c in combo[1:]:
                v = _add(v, c)
            out.add(v)
    return out


def no_cone(M) -> Cone:
    M = _as_matrix(M)
    return Cone(M.columns(), ambient=M.d)


def no_body(M) -> Polytope:
    """conv of the columns rescaled into the slice where the first coordinate is 1."""
    M = _as_matrix(M)
    pts = []
    for c in M.columns():
        if c[0] <= 0:
            raise ValueError("columns must have positive first coordinate")
        pts.append([a / c[0] for a in c])
    return Polytope(pts)


def _generated_by(values: Sequence[Value], degree_bound: int) -> Dict[int, Set[Value]]:
    """Sums of the given (degree-graded) values, grouped by first coordinate, up to the bound."""
    out: Dict[int, Set[Value]] = {}
    frontier = {v for v in values if 0 < v[0] <= degree_bound}
    allv = set(frontier)
    while frontier:
        new = set()
        for a in frontier:
            for b in values:
                s = _add(a, b)
                if 0 < s[0] <= degree_bound and s not in allv:
                    new.add(s)
        allv |= new
        frontier = new
    for v in allv:
        if v[0].denominator == 1:
            out.setdefault(int(v[0]), set()).add(v)
    return out


def check_khovanskii(B: Sequence[Polynomial], M, I: Ideal, degree_bound: int) -> bool:
    """Bounded check that nu(B) generates the value semigroup with one-dimensional leaves."""
    M = _as_matrix(M)
    vals = [weight_quasivaluation(M, I, b) for b in B]
    gen = _generated_by(vals, degree_bound)
    for d in range(1, degree_bound + 1):
        V = values_in_degree(M, I, d)
        if not V <= gen.get(d, set()):
            return False
        if len(V) != hilbert_function(I, d):
            return False
    return True


def check_adapted_basis(B: Sequence[Polynomial], M, I: Ideal, degree_bound: int) -> bool:
    """Per degree: as many elements as the Hilbert function, with pairwise distinct values."""
    M = _as_matrix(M)
    by_deg: Dict[int, List[Polynomial]] = {}
    for b in B:
        ok, d = b.is_homogeneous()
        if not ok:
            return False
        by_deg.setdefault(d, []).append(b)
    for d in range(0, degree_bound + 1):
        Bd = by_deg.get(d, [])
        if len(Bd) != hilbert_function(I, d):
            return False
        try:
            vals = [weight_quasivaluation(M, I, b) for b in Bd]
        except ValuationUndefined:
            return False
        if len(set(vals)) != len(vals):
            return False
    return True


def leaf_dimension(M, I: Ideal, d: int, value: Sequence) -> int:
    """Number of standard monomials of degree d carrying the given value."""
    M = _as_matrix(M)
    value = tuple(Fraction(a) for a in value)
    return sum(1 for e in standard_monomials_by_degree(M, I, d) if M.apply(e) == value)


def small_polynomials(ring, max_degree: int = 2, coeffs=(1, -1), max_terms: int = 2) -> List[Polynomial]:
    """Homogeneous polynomials with few small coefficients, used for witness searches."""
    n = len(ring)
    out = []
    for d in range(1, max_degree + 1):
        mons = sorted(monomials_of_degree(n, d), reverse=True)
        for t in range(1, max_terms + 1):
            for combo in combinations_with_replacement(range(len(mons)), t):
                if len(set(combo)) < t:
                    continue
                for cs in product(coeffs, repeat=t):
                    if cs[0] != 1:
                        continue
                    out.append(Polynomial(ring, {mons[i]: c for i, c in zip(combo, cs)}))
    return out


def find_quasivaluation_witness(M, I: Ideal, candidates: Optional[Sequence[Polynomial]] = None):
    """Search for f, g with nu(fg) strictly above nu(f) + nu(g); None if absent among candidates."""
    M = _as_matrix(M)
    if candidates is None:
        candidates = small_polynomials(I.ring, 1, max_terms=2)
    G = buchberger(I, M.order())
    cache = {}

    def nu(p):
        if p not in cache:
            r = G.reduce(p)
            cache[p] = None if r.is_zero() else initial_valuation(M, r)
        return cache[p]

    for i, f in enumerate(candidates):
        vf = nu(f)
        if vf is None:
            continue
        for g in candidates[i:]:
            vg = nu(g)
            if vg is None:
                continue
            vfg = nu(f * g)
            if vfg is None:
                continue
            if value_key(vfg) > value_key(_add(vf, vg)):
                return f, g, vfg, _add(vf, vg)
    return None
