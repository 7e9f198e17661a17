"""Buchberger's algorithm, initial forms and ideals, saturation, degenerations.

Initial forms follow the minimum convention throughout: ``in_w(f)`` collects
the terms of minimal ``w``-weight, and for a monomial order the initial term
is the leading term of that order (see :mod:`tropwall.orders`).
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .lattice import is_saturated
from .orders import GREVLEX, OrderDescriptor, as_order, integral_weight
from .polycore import Ideal, Polynomial, RingMismatchError

Exp = Tuple[int, ...]
Terms = Dict[Exp, Fraction]


class GroebnerRegionError(ValueError):
    """Raised when a weight order is not usable for a non-homogeneous ideal."""


class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial."""

    def __init__(self, ring, order: OrderDescriptor, elements: Sequence[Polynomial], laurent=False):
        self.ring = tuple(ring)
        self.order = order
        self.laurent = laurent
        self._key = order.key(len(self.ring))
        self.elements = tuple(elements)
        self.leads = tuple(max(g.terms, key=self._key) for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis[{self.order}]({', '.join(map(str, self.elements))})"

    def is_unit(self) -> bool:
        return any(not any(e) for e in self.leads)

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of ``f`` (fully reduced remainder)."""
        if f.ring != self.ring:
            raise RingMismatchError("polynomial and basis live in different rings")
        if f.laurent and any(a < 0 for e in f.terms for a in e):
            f = f.clear_denominators()
        rem = _reduce(dict(f.terms), list(zip(self.leads, (g.terms for g in self.elements))), self._key)
        return Polynomial._raw(self.ring, rem, False)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def leading_monomials(self) -> List[Polynomial]:
        return [Polynomial.monomial(self.ring, e) for e in self.leads]

    def ideal(self) -> Ideal:
        I = Ideal(self.ring, self.elements, self.laurent)
        I.gb_cache[self.order] = self
        return I


# low-level arithmetic on term dictionaries

def _divides(a: Exp, b: Exp) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _disjoint(a: Exp, b: Exp) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _reduce(f: Terms, basis, key) -> Terms:
    """Full reduction of ``f`` by ``basis`` = list of (lead, monic terms)."""
    if not f:
        return {}
    keycache = {}

    def k(e):
        v = keycache.get(e)
        if v is None:
            v = keycache[e] = tuple(-a for a in key(e))
        return v

    heap = [(k(e), e) for e in f]
    heapq.heapify(heap)
    inheap = set(f)
    rem: Terms = {}
    while heap:
        _, e = heapq.heappop(heap)
        inheap.discard(e)
        c = f.pop(e, None)
        if c is None:
            continue
        for lead, g in basis:
            if _divides(lead, e):
                q = tuple(x - y for x, y in zip(e, lead))
                for ge, gc in g.items():
                    if ge == lead:
                        continue
                    ne = tuple(x + y for x, y in zip(ge, q))
                    v = f.get(ne, 0) - c * gc
                    if v:
                        f[ne] = v
                        if ne not in inheap:
                            inheap.add(ne)
                            heapq.heappush(heap, (k(ne), ne))
                    else:
                        f.pop(ne, None)
                break
        else:
            rem[e] = c
    return rem


def _monic(t: Terms, key) -> Tuple[Exp, Terms]:
    lead = max(t, key=key)
    c = t[lead]
    if c != 1:
        t = {e: v / c for e, v in t.items()}
    return lead, t


def _spoly(lf, f, lg, g):
    m = _lcm(lf, lg)
    qf = tuple(x - y for x, y in zip(m, lf))
    qg = tuple(x - y for x, y in zip(m, lg))
    out: Terms = {}
    for e, c in f.items():
        if e != lf:
            out[tuple(x + y for x, y in zip(e, qf))] = c
    for e, c in g.items():
        if e == lg:
            continue
        ne = tuple(x + y for x, y in zip(e, qg))
        v = out.get(ne, 0) - c
        if v:
            out[ne] = v
        else:
            out.pop(ne, None)
    return out


def _buchberger_terms(polys: List[Terms], key, budget: Optional[int] = None) -> List[Terms]:
    """Reduced Groebner basis of the term dictionaries ``polys`` under ``key``."""
    G: List[Tuple[Exp, Terms]] = []
    active: List[int] = []
    pairs: List[Tuple[int, int]] = []
    lcms: Dict[Tuple[int, int], Exp] = {}

    def update(h: int):
        nonlocal active, pairs
        lh = G[h][0]
        C = [g for g in active]
        D = []
        for idx, g in enumerate(C):
            lg = G[g][0]
            m = _lcm(lg, lh)
            if _disjoint(lg, lh):
                D.append((g, m, True))
                continue
            dominated = False
            for g2 in C[idx + 1:]:
                if _divides(_lcm(G[g2][0], lh), m):
                    dominated = True
                    break
            if not dominated:
                for g2, m2, _ in D:
                    if _divides(m2, m):
                        dominated = True
                        break
            if not dominated:
                D.append((g, m, False))
        newpairs = []
        for (a, b) in pairs:
            m = lcms[(a, b)]
            if (_divides(lh, m) and _lcm(G[a][0], lh) != m and _lcm(G[b][0], lh) != m):
                continue
            newpairs.append((a, b))
        for g, m, disj in D:
            if disj:
                continue
            p = (g, h)
            lcms[p] = m
            newpairs.append(p)
        pairs = newpairs
        active = [g for g in active if not _divides(lh, G[g][0])] + [h]

    def add(t: Terms):
        lead, t = _monic(t, key)
        G.append((lead, t))
        update(len(G) - 1)
        return lead

    start = []
    for p in polys:
        if p:
            start.append(_monic(dict(p), key))
    start.sort(key=lambda lt: key(lt[0]))
    for lead, t in start:
        r = _reduce(dict(t), [G[i] for i in active], key)
        if r:
            lead = add(r)
            if not any(lead):
                return [{lead: Fraction(1)}]
    steps = 0
    while pairs:
        # normal strategy: smallest lcm first, ties broken by pair indices
        best = min(range(len(pairs)), key=lambda i: (key(lcms[pairs[i]]), pairs[i]))
        a, b = pairs.pop(best)
        steps += 1
        if budget is not None and steps > budget:
            raise BudgetExceeded("Buchberger pair budget exhausted")
        s = _spoly(G[a][0], G[a][1], G[b][0], G[b][1])
        r = _reduce(s, [G[i] for i in active] + [G[i] for i in range(len(G)) if i not in active], key)
        if r:
            lead = add(r)
            if not any(lead):
                return [{lead: Fraction(1)}]
    # interreduce
    basis = [G[i] for i in active]
    basis.sort(key=lambda lt: key(lt[0]))
    out = []
    for i, (lead, t) in enumerate(basis):
        others = basis[:i] + basis[i + 1:]
        tail = {e: c for e, c in t.items() if e != lead}
        tail = _reduce(tail, others, key)
        tail[lead] = Fraction(1)
        out.append(tail)
    return out


class BudgetExceeded(RuntimeError):
    pass


# public entry points

def _prepared_generators(I: Ideal) -> List[Terms]:
    out = []
    for g in I.generators:
        if I.laurent or g.laurent:
            g = g.clear_denominators()
        out.append(dict(g.terms))
    return out


def buchberger(I: Ideal, order=GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of ``I`` (cached on the ideal)."""
    order = as_order(order)
    order.check_arity(I.nvars)
    cached = I.gb_cache.get(order)
    if cached is not None:
        return cached
    key = order.key(I.nvars)
    gens = _prepared_generators(I)
    if len(gens) <= 1:
        elems = [] if not gens else [_monic(gens[0], key)[1]]
    else:
        if not order.is_well_order() and not I.is_homogeneous():
            raise GroebnerRegionError(
                f"order {order} is not a well-order and the ideal is not homogeneous; "
                "homogenize the ideal first")
        elems = _buchberger_terms(gens, key)
    polys = [Polynomial._raw(I.ring, t, False) for t in elems]
    polys.sort(key=lambda p: key(max(p.terms, key=key)))
    gb = GroebnerBasis(I.ring, order, polys, I.laurent)
    I.gb_cache[order] = gb
    return gb


groebner_basis = buchberger


def normal_form(f: Polynomial, I: Ideal, order=GREVLEX) -> Polynomial:
    return buchberger(I, order).reduce(f)


def ideal_contains(I: Ideal, f: Polynomial) -> bool:
    return buchberger(I, _default_order(I)).contains(f)


def _default_order(I: Ideal) -> OrderDescriptor:
    return GREVLEX


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        return False
    GI = buchberger(I, GREVLEX)
    GJ = buchberger(J, GREVLEX)
    return GI.elements == GJ.elements


def initial_form_order(f: Polynomial, order) -> Polynomial:
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial")
    key = as_order(order).key(f.nvars)
    e = max(f.terms, key=key)
    return Polynomial._raw(f.ring, {e: f.terms[e]}, f.laurent)


def weight_of(e: Exp, w) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(w, e)), Fraction(0))


def initial_form_weight(f: Polynomial, w: Sequence) -> Polynomial:
    """Sum of the terms of ``f`` of minimal ``w``-weight."""
    if f.is_zero():
        raise ValueError("initial form of the zero polynomial")
    if len(w) != f.nvars:
        raise RingMismatchError(f"weight of length {len(w)} for ring of {f.nvars} variables")
    wi = integral_weight(w)
    vals = {e: sum(a * b for a, b in zip(wi, e)) for e in f.terms}
    b = min(vals.values())
    return Polynomial._raw(f.ring, {e: c for e, c in f.terms.items() if vals[e] == b}, f.laurent)


def homogenization(I: Ideal, var: str = "h0") -> Ideal:
    """The homogenization I^h in ``ring + (var,)`` (from a degree-compatible basis)."""
    if var in I.ring:
        raise ValueError(f"variable {var!r} already in the ring")
    G = buchberger(Ideal(I.ring, [g.clear_denominators() if I.laurent else g for g in I.generators]), GREVLEX)
    ring = I.ring + (var,)
    return Ideal(ring, [g.homogenize(var) for g in G.elements])


def weighted_groebner_basis(I: Ideal, w: Sequence, tiebreak="grevlex") -> GroebnerBasis:
    """Reduced basis under the order refining ``w`` (minimum convention) by ``tiebreak``."""
    order = OrderDescriptor.weight(w, tiebreak if isinstance(tiebreak, str) else tiebreak.tiebreak)
    return buchberger(I, order)


def initial_ideal(I: Ideal, w_or_order, tiebreak="grevlex") -> Ideal:
    """in_w(I) for a weight vector, or the leading monomial ideal for an order.

    The result is built from a Groebner basis, never from the raw generators.
    For a non-homogeneous ideal and a weight outside the Groebner region the
    computation passes through the homogenization (weight 0 on the new
    variable) and dehomogenizes at the end, which yields exactly in_w(I).
    """
    if isinstance(w_or_order, (OrderDescriptor, str)):
        order = as_order(w_or_order)
        G = buchberger(I, order)
        out = Ideal(I.ring, G.leading_monomials(), I.laurent)
        return out
    w = tuple(Fraction(a) for a in w_or_order)
    if len(w) != I.nvars:
        raise RingMismatchError(f"weight of length {len(w)} for ring of {I.nvars} variables")
    if I.is_zero():
        return Ideal(I.ring, [], I.laurent)
    homog = I.is_homogeneous()
    if not homog and not I.is_principal() and not all(a <= 0 for a in w):
        Ih = homogenization(I)
        Jh = initial_ideal(Ih, w + (Fraction(0),), tiebreak)
        G = buchberger(Jh, GREVLEX)
        gens = [g.dehomogenize(Ih.ring[-1]) for g in G.elements]
        return Ideal(I.ring, [g for g in gens if g], I.laurent)
    order = OrderDescriptor.weight(w, tiebreak)
    G = buchberger(I, order)
    forms = [initial_form_weight(g, w) for g in G.elements]
    out = Ideal(I.ring, [Polynomial._raw(I.ring, f.terms, False) for f in forms], I.laurent)
    # the initial forms are the reduced basis of in_w(I) for the refined order
    out.gb_cache[order] = GroebnerBasis(I.ring, order, out.generators, I.laurent)
    tb = OrderDescriptor(order.tiebreak)
    out.gb_cache[tb] = GroebnerBasis(I.ring, tb, out.generators, I.laurent)
    return out


def monomials_of_degree(n: int, d: int):
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        yield tuple(e)


def standard_monomials(I: Ideal, order=GREVLEX, degree_bound: int = 0,
                       exact_degree: bool = False) -> List[Polynomial]:
    """Monomials of degree <= ``degree_bound`` outside the initial ideal."""
    G = buchberger(I, order)
    leads = G.leads
    out = []
    lo = degree_bound if exact_degree else 0
    for d in range(lo, degree_bound + 1):
        for e in sorted(monomials_of_degree(I.nvars, d), reverse=True):
            if not any(_divides(l, e) for l in leads):
                out.append(Polynomial.monomial(I.ring, e))
    return out


def hilbert_function(I: Ideal, d: int, order=GREVLEX) -> int:
    """dim_k (R/I)_d for homogeneous I."""
    return len(standard_monomials(I, order, d, exact_degree=True))


def elimination_order(ring: Sequence[str], names: Iterable[str], tiebreak="grevlex") -> OrderDescriptor:
    names = set(names)
    w = tuple(-1 if v in names else 0 for v in ring)
    return OrderDescriptor(tiebreak, (w,))


def eliminate(I: Ideal, names: Iterable[str]) -> Ideal:
    """I intersected with the subring in the remaining variables (same ambient ring)."""
    names = list(names)
    order = elimination_order(I.ring, names)
    G = buchberger(I, order)
    idx = [I.ring.index(v) for v in names]
    keep = [g for g in G.elements if all(e[i] == 0 for e in g.terms for i in idx)]
    return Ideal(I.ring, keep, I.laurent)


def restrict_ring(I: Ideal, ring: Sequence[str]) -> Ideal:
    return Ideal(tuple(ring), [g.change_ring(ring) for g in I.generators], I.laurent)


def saturate(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f^infinity) by elimination of an auxiliary variable s with s*f - 1."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    s = "_s"
    while s in I.ring:
        s += "_"
    ring = I.ring + (s,)
    gens = [g.clear_denominators().change_ring(ring) if I.laurent else g.change_ring(ring)
            for g in I.generators]
    sv = Polynomial.var(ring, s)
    gens.append(sv * f.change_ring(ring) - 1)
    J = eliminate(Ideal(ring, gens), [s])
    out = restrict_ring(J, I.ring)
    out.laurent = I.laurent
    return out


def _divide_out_variable(g: Polynomial, i: int) -> Polynomial:
    k = min(e[i] for e in g.terms)
    if not k:
        return g
    return Polynomial._raw(g.ring, {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in g.terms.items()}, False)


def saturate_variable_homogeneous(I: Ideal, i: int) -> Ideal:
    """(I : x_i^infinity) for homogeneous I via a reverse-lex basis with x_i last."""
    n = I.nvars
    perm = tuple(j for j in range(n) if j != i) + (i,)
    G = buchberger(I, OrderDescriptor("grevlex", (), perm))
    return Ideal(I.ring, [_divide_out_variable(g, i) for g in G.elements], I.laurent)


def saturate_variables(I: Ideal, names: Optional[Iterable[str]] = None) -> Ideal:
    """Saturation by the product of the given variables (default: all)."""
    idx = list(range(I.nvars)) if names is None else [I.ring.index(v) for v in names]
    base = Ideal(I.ring, [g.clear_denominators() if (I.laurent or g.laurent) else g
                          for g in I.generators], I.laurent)
    if base.is_zero():
        return base
    if base.is_homogeneous():
        J = base
        for i in idx:
            J = saturate_variable_homogeneous(J, i)
            if any(g.is_constant() for g in J.generators):
                return Ideal(I.ring, [Polynomial.constant(I.ring, 1)], I.laurent)
        G = buchberger(J, GREVLEX)
        return G.ideal()
    prod = Polynomial.constant(I.ring, 1)
    for i in idx:
        prod = prod * Polynomial.var(I.ring, I.ring[i])
    return saturate(base, prod)


def contains_monomial(I: Ideal) -> bool:
    """Whether I contains a monomial, i.e. (I : (x_1...x_n)^infinity) is the unit ideal."""
    gens = [g.clear_denominators() for g in I.generators]
    if not gens:
        return False
    if len(gens) == 1:
        return gens[0].is_monomial()
    if any(g.is_monomial() for g in gens):
        return True
    base = Ideal(I.ring, gens)
    if not base.is_homogeneous():
        base = homogenization(base)
    J = saturate_variables(base)
    return buchberger(J, GREVLEX).is_unit()


def degeneration_family(I: Ideal, w: Sequence, param: str = "t", tiebreak="grevlex") -> Ideal:
    """The Groebner degeneration: t^(-b) g(t^w x) over a w-refined basis of I.

    The fiber at t = 1 recovers I and the fiber at t = 0 is in_w(I).
    """
    wi = integral_weight(w)
    if not any(wi):
        return Ideal(I.ring + (param,), [g.change_ring(I.ring + (param,)) for g in I.generators], I.laurent)
    G = weighted_groebner_basis(I, tuple(Fraction(a) for a in w), tiebreak)
    out = []
    for g in G.elements:
        vals = {e: sum(a * b for a, b in zip(wi, e)) for e in g.terms}
        b = min(vals.values())
        t = {e + (vals[e] - b,): c for e, c in g.terms.items()}
        out.append(Polynomial._raw(I.ring + (param,), t, False).content_normalized())
    return Ideal(I.ring + (param,), out, I.laurent)


def minimal_generators(I: Ideal, candidates: Optional[Sequence[Polynomial]] = None) -> List[Polynomial]:
    """A minimal homogeneous generating set picked degree by degree."""
    if candidates is None:
        candidates = buchberger(I, GREVLEX).elements
    cands = sorted(candidates, key=lambda p: (p.degree(), [(-sum(e), e) for e, _ in p.sorted_terms()]))
    kept: List[Polynomial] = []
    for p in cands:
        if kept and buchberger(Ideal(I.ring, kept), GREVLEX).contains(p):
            continue
        kept.append(p)
    return kept


def is_binomial_ideal_basis(G: GroebnerBasis) -> bool:
    return all(len(g.terms) <= 2 for g in G.elements)


def is_prime_binomial(I: Ideal) -> str:
    """Return ``"prime"``, ``"not_prime"`` or ``"unknown"``.

    In a Laurent context the question is about the extension of I to the
    Laurent ring, so only the variable saturation matters.
    """
    if I.is_zero():
        return "prime"
    if contains_monomial(I):
        return "unknown"
    J = saturate_variables(I)
    if not I.laurent:
        base = Ideal(I.ring, [g.clear_denominators() if g.laurent else g for g in I.generators])
        if not ideals_equal(base, J):
            return "not_prime"
    G = buchberger(J, GREVLEX)
    if not is_binomial_ideal_basis(G):
        return "unknown"
    diffs = []
    for g in G.elements:
        if len(g.terms) == 1:
            return "unknown"
        a, b = list(g.terms)
        diffs.append([x - y for x, y in zip(a, b)])
    # over C a saturated lattice lets any coefficient character extend to all
    # of Z^n, so the lattice condition alone decides primality (x^2 + 1 is
    # prime over Q but is reported not_prime here)
    return "prime" if is_saturated(diffs) else "not_prime"
