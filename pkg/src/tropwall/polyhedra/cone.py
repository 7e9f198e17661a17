"""Rational polyhedral cones with both representations kept canonical."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .dd import hrep_to_vrep, vrep_to_hrep
from .linalg import dot, frac_vec, nullspace, primitive_int, rank, reduce_modulo, rref
from .lp import Infeasible, lp_optimize

IntVec = Tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


def _canonical_subspace(vectors, n) -> Tuple[List[IntVec], List[List[Fraction]], List[int]]:
    R, piv = rref(vectors) if vectors else ([], [])
    return [tuple(primitive_int(r)) for r in R], R, piv


def _canonical_mod(vectors, R, piv) -> List[IntVec]:
    out = set()
    for v in vectors:
        red = reduce_modulo(v, R, piv)
        if any(red):
            out.add(tuple(primitive_int(red)))
    return sorted(out)


class Cone:
    """pos(rays) + span(lineality) = {x : facets.x >= 0, equations.x = 0}.

    Rays are stored modulo the lineality space (reduced to vanish on the
    pivot columns of its echelon basis) as primitive integer vectors, which
    makes the representation unique; facet normals are reduced modulo the
    equation space in the same way.
    """

    __slots__ = ("ambient", "rays", "lineality", "facets", "equations",
                 "_lin_rref", "_eq_rref", "_hash", "_faces")

    def __init__(self, rays: Iterable[Sequence] = (), lineality: Iterable[Sequence] = (),
                 ambient: Optional[int] = None):
        rays = [frac_vec(r) for r in rays]
        lineality = [frac_vec(r) for r in lineality]
        n = ambient
        if n is None:
            if rays:
                n = len(rays[0])
            elif lineality:
                n = len(lineality[0])
            else:
                raise ValueError("ambient dimension required for the zero cone")
        for v in rays + lineality:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        facets, eqs = vrep_to_hrep(rays, lineality, n)
        self._finish_from_h(n, facets, eqs, rays_hint=rays)

    @classmethod
    def from_hrep(cls, ineqs: Iterable[Sequence] = (), equations: Iterable[Sequence] = (),
                  ambient: Optional[int] = None) -> "Cone":
        ineqs = [frac_vec(a) for a in ineqs]
        equations = [frac_vec(a) for a in equations]
        n = ambient
        if n is None:
            n = len(ineqs[0]) if ineqs else len(equations[0])
        for v in ineqs + equations:
            if len(v) != n:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {n}")
        rays, lin = hrep_to_vrep(ineqs, equations, n)
        self = cls.__new__(cls)
        self._finish_from_v(n, rays, lin, ineqs)
        return self

    # construction internals

    def _finish_from_h(self, n, facets, eqs, rays_hint):
        """facets irredundant, eqs spanning; recover canonical V-rep from the inputs."""
        self.ambient = n
        self.equations, eR, ep = _canonical_subspace(eqs, n)
        self._eq_rref = (eR, ep)
        self.facets = _canonical_mod(facets, eR, ep)
        lin = nullspace([list(a) for a in self.facets] + [list(e) for e in self.equations], n)
        self.lineality, lR, lp = _canonical_subspace(lin, n)
        self._lin_rref = (lR, lp)
        target = n - len(self.lineality) - 1
        cand = _canonical_mod(rays_hint, lR, lp)
        rays = []
        for r in cand:
            tight = [list(a) for a in self.facets if dot(a, r) == 0]
            if rank(tight + [list(e) for e in self.equations]) == target:
                rays.append(r)
        self.rays = rays
        self._hash = None
        self._faces = None

    def _finish_from_v(self, n, rays, lin, ineq_hint):
        self.ambient = n
        self.lineality, lR, lp = _canonical_subspace(lin, n)
        self._lin_rref = (lR, lp)
        self.rays = _canonical_mod(rays, lR, lp)
        span = [list(r) for r in self.rays] + [list(l) for l in self.lineality]
        eqs = nullspace(span, n) if span else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        self.equations, eR, ep = _canonical_subspace(eqs, n)
        self._eq_rref = (eR, ep)
        d = self.dim
        facets = []
        for a in _canonical_mod(ineq_hint, eR, ep):
            tight = [list(r) for r in self.rays if dot(a, r) == 0]
            if rank(tight + [list(l) for l in self.lineality]) == d - 1:
                facets.append(a)
        self.facets = facets
        self._hash = None
        self._faces = None

    # basic data

    @property
    def dim(self) -> int:
        return self.ambient - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    @property
    def key(self):
        return (self.ambient, tuple(self.lineality), tuple(self.rays))

    def __eq__(self, other):
        return isinstance(other, Cone) and self.key == other.key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key)
        return self._hash

    def __repr__(self):
        return f"Cone(rays={[list(r) for r in self.rays]}, lineality={[list(l) for l in self.lineality]})"

    def is_pointed(self) -> bool:
        return not self.lineality

    def contains(self, x) -> bool:
        x = frac_vec(x)
        return all(dot(e, x) == 0 for e in self.equations) and all(dot(a, x) >= 0 for a in self.facets)

    def contains_relint(self, x) -> bool:
        x = frac_vec(x)
        return all(dot(e, x) == 0 for e in self.equations) and all(dot(a, x) > 0 for a in self.facets)

    def contains_cone(self, other: "Cone") -> bool:
        return (all(self.contains(r) for r in other.rays)
                and all(self.contains(l) and self.contains([-a for a in l]) for l in other.lineality))

    def relative_interior_point(self) -> List[Fraction]:
        """Sum of the (reduced) rays plus the sum of the lineality basis."""
        p = [Fraction(0)] * self.ambient
        for v in list(self.rays) + list(self.lineality):
            p = [a + b for a, b in zip(p, v)]
        return p

    def inequalities(self) -> List[IntVec]:
        return list(self.facets)

    def reduce_mod_lineality(self, v) -> List[Fraction]:
        R, piv = self._lin_rref
        return reduce_modulo(v, R, piv)

    # faces

    def face(self, w) -> Optional["Cone"]:
        """face_w(C) = points of C maximizing w; None when w is unbounded on C."""
        w = frac_vec(w)
        if len(w) != self.ambient:
            raise DimensionMismatch("weight has wrong dimension")
        if any(dot(w, l) != 0 for l in self.lineality) or any(dot(w, r) > 0 for r in self.rays):
            return None
        return Cone([r for r in self.rays if dot(w, r) == 0], self.lineality, self.ambient)

    def _ray_sets(self):
        return [frozenset(i for i, r in enumerate(self.rays) if dot(a, r) == 0) for a in self.facets]

    def faces(self) -> List["Cone"]:
        """All nonempty faces (including the cone itself), sorted by dimension."""
        if self._faces is None:
            fsets = self._ray_sets()
            full = frozenset(range(len(self.rays)))
            seen = {full}
            todo = [full]
            while todo:
                S = todo.pop()
                for F in fsets:
                    T = S & F
                    if T not in seen:
                        seen.add(T)
                        todo.append(T)
            cones = []
            for S in seen:
                if S == full:
                    cones.append(self)
                else:
                    cones.append(Cone([self.rays[i] for i in sorted(S)], self.lineality, self.ambient))
            cones.sort(key=lambda c: (c.dim, c.key))
            self._faces = cones
        return list(self._faces)

    def facet_cones(self) -> List[Tuple[IntVec, "Cone"]]:
        """Pairs (inner facet normal, facet cone)."""
        out = []
        for a, S in zip(self.facets, self._ray_sets()):
            out.append((a, Cone([self.rays[i] for i in sorted(S)], self.lineality, self.ambient)))
        return out

    def intersect(self, other: "Cone") -> "Cone":
        if other.ambient != self.ambient:
            raise DimensionMismatch("cones live in different spaces")
        return Cone.from_hrep(list(self.facets) + list(other.facets),
                              list(self.equations) + list(other.equations), self.ambient)

    def is_face_of(self, other: "Cone") -> bool:
        """Whether self is a face of other."""
        if self.ambient != other.ambient or not other.contains_cone(self):
            return False
        p = self.relative_interior_point()
        tight = [a for a in other.facets if dot(a, p) == 0]
        # minimal face of other containing p
        for r in other.rays:
            if all(dot(a, r) == 0 for a in tight) and not self.contains(r):
                return False
        for l in other.lineality:
            if not (self.contains(l) and self.contains([-a for a in l])):
                return False
        return True

    def to_json(self) -> Dict:
        return {"rays": [list(r) for r in self.rays], "lineality": [list(l) for l in self.lineality],
                "ambient": self.ambient}

    @classmethod
    def from_json(cls, data) -> "Cone":
        return cls(data.get("rays", []), data.get("lineality", []), data.get("ambient"))


def intersect(C1: Cone, C2: Cone) -> Cone:
    return C1.intersect(C2)


def common_face(C1: Cone, C2: Cone) -> Cone:
    return C1.intersect(C2)


def are_adjacent(C1: Cone, C2: Cone) -> bool:
    """Same dimension d, and the intersection has dimension d-1 and is a face of both."""
    if C1.ambient != C2.ambient:
        raise DimensionMismatch("cones live in different spaces")
    if C1.dim != C2.dim:
        return False
    F = C1.intersect(C2)
    return F.dim == C1.dim - 1 and F.is_face_of(C1) and F.is_face_of(C2)


def relative_interior_point(C: Cone) -> List[Fraction]:
    return C.relative_interior_point()


def face_of(P, w):
    return P.face(w)


def relint_meets(C: Cone, ineqs_strict: Sequence[Sequence], ineqs: Sequence[Sequence] = (),
                 eqs: Sequence[Sequence] = ()) -> Optional[List[Fraction]]:
    """A point x in C with the extra strict/weak conditions, or None.

    Strict inequalities a.x > 0 are replaced by a.x >= 1, exact for cones.
    """
    n = C.ambient
    A = [(list(a), 0) for a in C.facets] + [(list(a), 0) for a in ineqs] + [(list(a), 1) for a in ineqs_strict]
    E = [(list(e), 0) for e in C.equations] + [(list(e), 0) for e in eqs]
    try:
        return lp_optimize([0] * n, A, E, nvars=n).point
    except Infeasible:
        return None
