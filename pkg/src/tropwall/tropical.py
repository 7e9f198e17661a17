"""Groebner cones and fans, tropical varieties, lineality spaces, toric primes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .grobner import (BudgetExceeded, GroebnerBasis, GroebnerRegionError, buchberger, contains_monomial,
                      homogenization, initial_form_weight, is_prime_binomial, saturate_variables)
from .orders import GREVLEX, OrderDescriptor, integral_weight
from .polycore import Ideal, Polynomial
from .polyhedra import Cone, Fan, verify_fan
from .polyhedra.linalg import primitive_int

DEFAULT_BUDGET = 10_000


class FanBudgetExceeded(BudgetExceeded):
    """Raised when a traversal exceeds its cone budget; carries the partial result."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


# Groebner cones

def _cone_from_marked_basis(G: GroebnerBasis, w: Optional[Sequence] = None) -> Cone:
    """Closure of the set of v whose initial forms on G agree with those at w.

    With ``w`` None the cone of the term order of G is returned.
    """
    n = len(G.ring)
    ineqs = set()
    eqs = set()
    wi = integral_weight(w) if w is not None else None
    for g, a in zip(G.elements, G.leads):
        wa = sum(x * y for x, y in zip(wi, a)) if wi is not None else None
        for b in g.terms:
            if b == a:
                continue
            d = tuple(primitive_int([y - x for x, y in zip(a, b)]))
            if wi is not None and sum(x * y for x, y in zip(wi, b)) == wa:
                eqs.add(d)
            else:
                ineqs.add(d)
    return Cone.from_hrep(sorted(ineqs), sorted(eqs), n)


def _check_region(I: Ideal, w) -> None:
    if I.is_homogeneous() or I.is_principal():
        return
    if any(Fraction(a) > 0 for a in w):
        raise GroebnerRegionError(
            "weight lies outside the Groebner region of a non-homogeneous ideal; homogenize the ideal first")


@dataclass
class GroebnerCone:
    cone: Cone
    weight: List[Fraction]
    initial_ideal: Ideal
    basis: Optional[GroebnerBasis] = None
    monomial_free: Optional[bool] = None
    prime: Optional[str] = None
    maximal: bool = False

    def to_json(self):
        d = self.cone.to_json()
        d["weight"] = [str(a) for a in self.weight]
        d["initial_ideal"] = [str(g) for g in self.initial_ideal.generators]
        d["monomial_free"] = self.monomial_free
        d["prime"] = self.prime
        d["maximal"] = self.maximal
        return d


def groebner_cone(I: Ideal, w: Sequence, tiebreak: str = "grevlex") -> GroebnerCone:
    """The closed Groebner cone of w: all v with in_v(I) = in_w(I), closed up."""
    w = [Fraction(a) for a in w]
    if len(w) != I.nvars:
        raise ValueError("weight has wrong dimension")
    _check_region(I, w)
    order = OrderDescriptor.weight(w, tiebreak)
    G = buchberger(_prepared(I), order)
    C = _cone_from_marked_basis(G, w)
    forms = [initial_form_weight(g, w) for g in G.elements]
    J = Ideal(I.ring, forms, I.laurent)
    return GroebnerCone(C, w, J, G, maximal=(C.dim == I.nvars))


def _prepared(I: Ideal) -> Ideal:
    if I.laurent or any(g.laurent for g in I.generators):
        J = Ideal(I.ring, [g.clear_denominators() for g in I.generators])
        return J
    return I


def initial_ideal_on_cone(G: GroebnerBasis, w) -> Ideal:
    """in_w(I) from a basis whose term-order cone contains w."""
    return Ideal(G.ring, [initial_form_weight(g, w) for g in G.elements])


# Groebner fan

@dataclass
class GroebnerFan:
    ideal: Ideal
    fan: Fan
    bases: Dict[tuple, GroebnerBasis]
    complete: bool = True

    @property
    def cones(self) -> List[Cone]:
        return self.fan.cones

    def basis_for(self, C: Cone) -> GroebnerBasis:
        return self.bases[C.key]

    def parent_of(self, F: Cone) -> Cone:
        for C in self.fan.cones:
            if C.contains_cone(F):
                return C
        raise ValueError("cone is not contained in the fan")

    def initial_ideal(self, F: Cone) -> Ideal:
        C = self.parent_of(F)
        return initial_ideal_on_cone(self.bases[C.key], F.relative_interior_point())

    def all_cones(self) -> List[Cone]:
        return self.fan.all_cones()


def _start_order(tiebreak: str) -> OrderDescriptor:
    return OrderDescriptor(tiebreak)


def groebner_fan(I: Ideal, budget: int = DEFAULT_BUDGET, tiebreak: str = "grevlex") -> GroebnerFan:
    """Facet-flip traversal of the Groebner fan (homogeneous or principal ideals)."""
    I = _prepared(I)
    n = I.nvars
    if not I.is_homogeneous() and not I.is_principal():
        raise GroebnerRegionError("the Groebner fan of a non-homogeneous ideal needs homogenization first")
    G0 = buchberger(I, _start_order(tiebreak))
    C0 = _cone_from_marked_basis(G0)
    bases = {C0.key: G0}
    seen = {C0.key: C0}
    queue = deque([C0])
    complete = True
    while queue:
        C = queue.popleft()
        for a, F in C.facet_cones():
            wf = F.relative_interior_point()
            order = OrderDescriptor(tiebreak, (tuple(wf), tuple(-x for x in a)))
            G = buchberger(I, order)
            D = _cone_from_marked_basis(G)
            if D.key in seen:
                continue
            if len(seen) >= budget:
                complete = False
                break
            seen[D.key] = D
            bases[D.key] = G
            queue.append(D)
        if not complete:
            break
    fan = Fan(list(seen.values()), n)
    result = GroebnerFan(I, fan, bases, complete)
    if not complete:
        raise FanBudgetExceeded(f"Groebner fan traversal stopped after {budget} cones", result)
    return result


def newton_polytope_fan(f: Polynomial) -> Fan:
    """Normal fan of the Newton polytope under the minimum convention (principal-ideal oracle)."""
    from .polyhedra import Polytope

    P = Polytope([list(e) for e in f.clear_denominators().terms])
    n = f.nvars
    cones = []
    for v in P.vertices:
        # w with v minimizing w over P: w.(u - v) >= 0 for every vertex u
        ineqs = [[u_i - v_i for u_i, v_i in zip(u, v)] for u in P.vertices if u != v]
        cones.append(Cone.from_hrep(ineqs, [], n))
    return Fan(cones, n)


# tropical varieties

@dataclass
class TropicalCone:
    cone: Cone
    weight: List[Fraction]
    initial_ideal: Ideal
    prime: str = "unknown"
    maximal: bool = False

    def to_json(self):
        d = self.cone.to_json()
        d["weight"] = [str(a) for a in self.weight]
        d["initial_ideal"] = [str(g) for g in self.initial_ideal.generators]
        d["monomial_free"] = True
        d["prime"] = self.prime
        d["maximal"] = self.maximal
        return d


@dataclass
class TropicalVariety:
    ideal: Ideal
    cones: List[TropicalCone]
    ambient: int
    lineality: List[Tuple[int, ...]] = field(default_factory=list)

    @property
    def fan(self) -> Fan:
        return Fan([c.cone for c in self.maximal_cones()], self.ambient)

    def maximal_cones(self) -> List[TropicalCone]:
        return [c for c in self.cones if c.maximal]

    def f_vector(self) -> List[int]:
        ld = len(self.lineality)
        counts: Dict[int, int] = {}
        for c in self.cones:
            counts[c.cone.dim - ld] = counts.get(c.cone.dim - ld, 0) + 1
        return [counts.get(d, 0) for d in range(max(counts) + 1)] if counts else []

    def rays(self) -> List[Tuple[int, ...]]:
        ld = len(self.lineality)
        return sorted({c.cone.rays[0] for c in self.cones if c.cone.dim == ld + 1})

    def dim(self) -> int:
        return max((c.cone.dim for c in self.cones), default=-1)

    def cone_containing(self, w) -> Optional[TropicalCone]:
        best = None
        for c in self.cones:
            if c.cone.contains(w) and (best is None or c.cone.dim < best.cone.dim):
                best = c
        return best

    def find(self, ray=None, cone: Optional[Cone] = None) -> Optional[TropicalCone]:
        for c in self.cones:
            if cone is not None and c.cone == cone:
                return c
            if ray is not None and c.cone.dim == len(self.lineality) + 1 and c.cone.rays \
                    and c.cone.rays[0] == tuple(primitive_int(c.cone.reduce_mod_lineality(ray))):
                return c
        return None

    def verify(self):
        return verify_fan(self.fan)

    def to_json(self):
        fan = self.fan.to_json()
        fan["format_version"] = 1
        fan["ring"] = list(self.ideal.ring)
        fan["f_vector"] = self.f_vector()
        fan["cones"] = [c.to_json() for c in self.cones]
        return fan


def _laurent_representative(I: Ideal) -> Ideal:
    """A polynomial ideal with the same extension to the Laurent ring, saturated by the variables."""
    base = Ideal(I.ring, [g.clear_denominators() for g in I.generators])
    if base.is_principal():
        return base
    return saturate_variables(base)


def tropicalize(I: Ideal, budget: int = DEFAULT_BUDGET, tiebreak: str = "grevlex",
                classify: bool = True) -> TropicalVariety:
    """trop(I): the cones of the Groebner fan whose initial ideal has no monomial.

    Non-homogeneous input is homogenized with an extra last coordinate and the
    result is sliced at weight 0 there; initial ideals are dehomogenized.
    """
    J = _laurent_representative(I)
    n = I.nvars
    homog = J.is_homogeneous()
    if homog or J.is_principal():
        work, sliced = J, False
    else:
        work, sliced = homogenization(J), True
    gf = groebner_fan(work, budget, tiebreak)
    found = _monomial_free_faces(gf)
    out: List[TropicalCone] = []
    for F, Jw in found:
        if sliced:
            m = work.nvars
            hz = [0] * m
            hz[-1] = 1
            Fs = F.intersect(Cone.from_hrep([], [hz], m))
            rays = [r[:-1] for r in Fs.rays]
            lin = [l[:-1] for l in Fs.lineality]
            if not rays and not lin:
                C = Cone([], [], n)
            else:
                C = Cone(rays, lin, n)
            h = work.ring[-1]
            gens = [g.dehomogenize(h) for g in buchberger(Jw, GREVLEX).elements]
            Jw = Ideal(I.ring, [g for g in gens if g])
        else:
            C = F
            Jw = Ideal(I.ring, Jw.generators)
        out.append(TropicalCone(C, C.relative_interior_point(), Jw))
    out = _dedupe_and_mark(out)
    if classify:
        for c in out:
            c.prime = is_prime_binomial(c.initial_ideal)
    lineality = []
    if out:
        lineality = list(min(out, key=lambda c: c.cone.dim).cone.lineality)
    return TropicalVariety(I, out, n, lineality)


def _dedupe_and_mark(cones: List[TropicalCone]) -> List[TropicalCone]:
    uniq: Dict[tuple, TropicalCone] = {}
    for c in cones:
        uniq.setdefault(c.cone.key, c)
    cones = sorted(uniq.values(), key=lambda c: (c.cone.dim, c.cone.key))
    for c in cones:
        c.maximal = not any(d.cone.dim > c.cone.dim and d.cone.contains_cone(c.cone) for d in cones)
    return cones


def _monomial_free_faces(gf: GroebnerFan) -> List[Tuple[Cone, Ideal]]:
    """Faces of the Groebner fan with monomial-free initial ideal, found bottom-up.

    A face containing a monomial forces every larger cone through it to
    contain one too, so cones with a failed facet are skipped untested.
    """
    faces: Dict[tuple, Tuple[Cone, Cone]] = {}
    for C in gf.fan.cones:
        for F in C.faces():
            faces.setdefault(F.key, (F, C))
    by_dim: Dict[int, List[Tuple[Cone, Cone]]] = {}
    for F, C in faces.values():
        by_dim.setdefault(F.dim, []).append((F, C))
    status: Dict[tuple, bool] = {}
    found: List[Tuple[Cone, Ideal]] = []
    for d in sorted(by_dim):
        any_pass = False
        for F, C in sorted(by_dim[d], key=lambda fc: fc[0].key):
            if any(not status.get(Fa.key, True) for _, Fa in F.facet_cones()):
                status[F.key] = False
                continue
            w = F.relative_interior_point()
            Jw = initial_ideal_on_cone(gf.bases[C.key], w)
            ok = not any(g.is_monomial() for g in Jw.generators) and not contains_monomial(Jw)
            status[F.key] = ok
            if ok:
                any_pass = True
                found.append((F, Jw))
        if not any_pass and d > min(by_dim):
            break
    return found


def lineality_space(I: Ideal, tiebreak: str = "grevlex") -> List[Tuple[int, ...]]:
    """Basis of the lineality space (common to all cones of the Groebner fan)."""
    I = _prepared(I)
    if not I.is_homogeneous() and not I.is_principal():
        raise GroebnerRegionError("lineality space requires a homogeneous ideal")
    G = buchberger(I, _start_order(tiebreak))
    return list(_cone_from_marked_basis(G).lineality)


def weight_in_trop(I: Ideal, w) -> bool:
    """Brute-force membership oracle: in_w(I) has no monomial."""
    from .grobner import initial_ideal

    J = _laurent_representative(I)
    return not contains_monomial(initial_ideal(J, w))


def toric_associated_prime(I0: Ideal):
    """(J, flag): J the variable saturation of I0, flag True when J is a prime binomial ideal.

    The flag is None when the saturation is not binomial (undecided).
    """
    J = saturate_variables(I0)
    G = buchberger(J, GREVLEX)
    if not all(len(g.terms) <= 2 for g in G.elements):
        return J, None
    status = is_prime_binomial(J)
    if status == "prime":
        return J, True
    if status == "not_prime":
        return J, False
    return J, None
