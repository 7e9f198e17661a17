"""Re-embedding a variety so that a non-prime tropical cone lifts to prime cones.

Binomials of the toric associated prime of in_C(I) that are missing from
in_C(I) are adjoined as new variables y_j = f_j.  The quotient ring is
unchanged, and the tropicalization of the new ideal is searched for prime
cones whose projection meets the relative interior of C.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .grobner import GREVLEX, buchberger, eliminate, ideal_contains, ideals_equal, initial_ideal, is_prime_binomial, minimal_generators
from .nokbody import WeightMatrix, no_body
from .polycore import Ideal, Polynomial
from .polyhedra import Cone, Polytope, are_adjacent, relint_meets
from .polyhedra.fan import project_cone
from .polyhedra.linalg import rank
from .tropical import DEFAULT_BUDGET, TropicalCone, TropicalVariety, _laurent_representative, toric_associated_prime, tropicalize

DEFAULT_DEPTH = 2


class ReembedError(ValueError):
    pass


class NotMultiplicityOne(ReembedError):
    pass


class DepthExhausted(ReembedError):
    pass


@dataclass
class Embedding:
    """I' over the extended ring, the adjoined binomials, and which coordinates map back."""

    original: Ideal
    ideal: Ideal
    binomials: List[Polynomial] = field(default_factory=list)
    new_variables: List[str] = field(default_factory=list)
    homogenizer: Optional[str] = None

    @property
    def keep(self) -> List[int]:
        return [self.ideal.ring.index(v) for v in self.original.ring]

    def variable_map(self) -> Dict[str, str]:
        return {y: str(f) for y, f in zip(self.new_variables, self.binomials)}

    def eliminated(self) -> Ideal:
        """I' intersected with the original polynomial ring."""
        extra = [v for v in self.ideal.ring if v not in self.original.ring]
        if not extra:
            return Ideal(self.original.ring, self.ideal.generators)
        J = eliminate(self.ideal, extra)
        return Ideal(self.original.ring, [g.change_ring(self.original.ring) for g in J.generators])

    def recovers_original(self) -> bool:
        return ideals_equal(self.eliminated(), Ideal(self.original.ring, self.original.generators))

    def project(self, C: Cone) -> Cone:
        return project_cone(C, self.keep)

    def to_json(self):
        return {
            "format_version": 1,
            "original_ring": list(self.original.ring),
            "ring": list(self.ideal.ring),
            "generators": [str(g) for g in self.ideal.generators],
            "binomials": [str(f) for f in self.binomials],
            "variable_map": self.variable_map(),
            "homogenizer": self.homogenizer,
            "projection": self.keep,
        }


@dataclass
class ReembedResult:
    embedding: Embedding
    trop: Optional[TropicalVariety]
    cones: List[TropicalCone]
    depth_used: int

    def to_json(self):
        d = self.embedding.to_json()
        d["depth_used"] = self.depth_used
        d["cones"] = [{"id": cone_id(c.cone), "rays": [list(r) for r in c.cone.rays],
                       "lineality": [list(l) for l in c.cone.lineality], "prime": c.prime} for c in self.cones]
        return d


def cone_id(C: Cone) -> str:
    """Canonical textual id of a cone (rays, then lineality)."""
    rays = ";".join(",".join(str(a) for a in r) for r in C.rays)
    lin = ";".join(",".join(str(a) for a in l) for l in C.lineality)
    return f"[{rays}|{lin}]"


def project_cone_check(Cp: Cone, C: Cone, keep: Optional[Sequence[int]] = None) -> bool:
    """True when the coordinate projection of Cp meets the relative interior of C."""
    keep = list(range(C.ambient)) if keep is None else list(keep)
    P = project_cone(Cp, keep)
    return relint_meets(P, C.facets, (), C.equations) is not None


def _cone_of(c) -> Cone:
    return c.cone if hasattr(c, "cone") else c


def _initial_on(I: Ideal, C: Cone) -> Ideal:
    J = _laurent_representative(I)
    return initial_ideal(J, C.relative_interior_point())


def _fresh_names(ring: Sequence[str], prefix: str, count: int) -> List[str]:
    out, i = [], 1
    while len(out) < count:
        name = f"{prefix}{i}"
        if name not in ring:
            out.append(name)
        i += 1
    return out


def missing_binomials(I: Ideal, C: Cone) -> List[Polynomial]:
    """Minimal generators of the toric associated prime of in_C(I) not lying in in_C(I)."""
    in_C = _initial_on(I, C)
    IT, flag = toric_associated_prime(in_C)
    if flag is not True:
        raise NotMultiplicityOne("in_C(I) has no unique toric associated prime of multiplicity one")
    G = buchberger(IT, GREVLEX)
    gens = minimal_generators(IT, G.elements) if IT.is_homogeneous() else list(G.elements)
    gens = sorted((g.content_normalized() for g in gens), key=str)
    return [g for g in gens if not ideal_contains(in_C, g)]


def extend(I: Ideal, binomials: Sequence[Polynomial]) -> Embedding:
    """I + <y_j - f_j>, homogenized as y_j h^(e-1) - f_j when I is homogeneous and deg f_j = e > 1."""
    if not binomials:
        return Embedding(I, I)
    ys = _fresh_names(I.ring, "y", len(binomials))
    homog = I.is_homogeneous()
    degs = [f.is_homogeneous()[1] if f.is_homogeneous()[0] else None for f in binomials]
    need_h = homog and any(d is not None and d > 1 for d in degs)
    h = _fresh_names(list(I.ring) + ys, "h", 1)[0] if need_h else None
    ring = tuple(I.ring) + tuple(ys) + ((h,) if h else ())
    gens = [g.change_ring(ring) for g in I.generators]
    for j, f in enumerate(binomials):
        fe = f.change_ring(ring)
        e = [0] * len(ring)
        e[ring.index(ys[j])] = 1
        if need_h and degs[j] and degs[j] > 1:
            e[ring.index(h)] = degs[j] - 1
        gens.append(Polynomial(ring, {tuple(e): 1}) - fe)
    return Embedding(I, Ideal(ring, gens, I.laurent), list(binomials), ys, h)


def _prime_lifts(T: TropicalVariety, C: Cone, keep) -> List[TropicalCone]:
    return [c for c in T.maximal_cones() if c.prime == "prime" and project_cone_check(c.cone, C, keep)]


def algorithm1(I: Ideal, C, depth: int = DEFAULT_DEPTH, budget: int = DEFAULT_BUDGET) -> ReembedResult:
    """Adjoin the missing binomials of in_C(I) until a prime cone projects into relint(C)."""
    C = _cone_of(C)
    if is_prime_binomial(_initial_on(I, C)) == "prime":
        emb = Embedding(I, I)
        return ReembedResult(emb, None, [TropicalCone(C, C.relative_interior_point(), _initial_on(I, C), "prime", True)], 0)
    return _search(I, C, None, depth, budget)


def algorithm2(I: Ideal, C1, C2, depth: int = DEFAULT_DEPTH, budget: int = DEFAULT_BUDGET) -> ReembedResult:
    """As algorithm1 for C1, but also require a prime cone over C2 adjacent to the lift of C1."""
    K1, K2 = _cone_of(C1), _cone_of(C2)
    if not are_adjacent(K1, K2):
        raise ReembedError("input cones are not adjacent")
    return _search(I, K1, K2, depth, budget)


def _search(I: Ideal, C: Cone, C2: Optional[Cone], depth: int, budget: int) -> ReembedResult:
    emb = Embedding(I, I)
    target = C
    for level in range(1, depth + 1):
        new = missing_binomials(emb.ideal, target)
        if not new:
            raise NotMultiplicityOne("no missing binomials; the cone cannot be repaired by re-embedding")
        emb = _compose(emb, new)
        T = tropicalize(emb.ideal, budget)
        keep = emb.keep
        lifts = _prime_lifts(T, C, keep)
        if C2 is None:
            if lifts:
                return ReembedResult(emb, T, lifts[:1], level)
        else:
            partners = _prime_lifts(T, C2, keep)
            for a in lifts:
                for b in partners:
                    if a.cone != b.cone and are_adjacent(a.cone, b.cone):
                        return ReembedResult(emb, T, [a, b], level)
        # recurse on a non-prime lift of C in the new embedding
        nonprime = [c for c in T.maximal_cones() if c.prime != "prime" and project_cone_check(c.cone, C, keep)]
        if not nonprime:
            break
        target = nonprime[0].cone
    raise DepthExhausted("no suitable prime cone found within the depth budget")


def _compose(emb: Embedding, new: Sequence[Polynomial]) -> Embedding:
    inner = extend(emb.ideal, new)
    h = emb.homogenizer or inner.homogenizer
    return Embedding(emb.original, inner.ideal, emb.binomials + list(new), emb.new_variables + inner.new_variables, h)


def dehomogenize_body(M, y_col: int, h_col: int, lineality: Optional[Sequence[Sequence]] = None) -> Polytope:
    """Body after merging the y and h columns into their halved sum."""
    M = M if isinstance(M, WeightMatrix) else WeightMatrix(M)
    if lineality is not None:
        v = [0] * M.n
        v[y_col], v[h_col] = 1, -1
        lin = [list(l) for l in lineality]
        if not lin or rank(lin + [v]) != rank(lin):
            raise ReembedError("e_y - e_h is not in the lineality space")
    cols = M.columns()
    merged = tuple(a + b for a, b in zip(cols[y_col], cols[h_col]))
    keep = [c for j, c in enumerate(cols) if j not in (y_col, h_col)] + [merged]
    return no_body([[c[i] for c in keep] for i in range(M.d)])
