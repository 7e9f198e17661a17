"""Rational polytopes, handled through their homogenization cone{(1, v)}."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import ceil, floor
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cone import Cone, DimensionMismatch
from .linalg import dot, frac_vec


class UnboundedError(ValueError):
    pass


class Polytope:
    """conv(vertices).  The homogenizing coordinate is placed first."""

    __slots__ = ("ambient", "cone", "vertices")

    def __init__(self, vertices: Iterable[Sequence]):
        pts = [frac_vec(v) for v in vertices]
        if not pts:
            raise ValueError("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise DimensionMismatch("points of different lengths")
        self._from_cone(n, Cone([[Fraction(1)] + p for p in pts], ambient=n + 1))

    @classmethod
    def from_hrep(cls, ineqs: Iterable[Tuple[Sequence, object]], eqs: Iterable[Tuple[Sequence, object]] = (),
                  ambient: Optional[int] = None) -> "Polytope":
        """{x : a.x >= b} for (a, b) in ineqs, {a.x = b} for eqs."""
        ineqs = [(frac_vec(a), Fraction(b)) for a, b in ineqs]
        eqs = [(frac_vec(a), Fraction(b)) for a, b in eqs]
        n = ambient if ambient is not None else len((ineqs or eqs)[0][0])
        H = [[-b] + a for a, b in ineqs] + [[Fraction(1)] + [Fraction(0)] * n]
        E = [[-b] + a for a, b in eqs]
        C = Cone.from_hrep(H, E, n + 1)
        self = cls.__new__(cls)
        self._from_cone(n, C)
        return self

    def _from_cone(self, n, C: Cone):
        if C.lineality or any(r[0] == 0 for r in C.rays):
            raise UnboundedError("polyhedron is unbounded")
        if not C.rays:
            raise ValueError("empty polytope")
        self.ambient = n
        self.cone = C
        self.vertices = sorted(tuple(Fraction(a, r[0]) for a in r[1:]) for r in C.rays)

    @property
    def dim(self) -> int:
        return self.cone.dim - 1

    @property
    def key(self):
        return (self.ambient, tuple(self.vertices))

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return "Polytope(" + str([[str(a) for a in v] for v in self.vertices]) + ")"

    def inequalities(self) -> List[Tuple[List[Fraction], Fraction]]:
        """Facets as (a, b) meaning a.x >= b."""
        return [(frac_vec(f[1:]), Fraction(-f[0])) for f in self.cone.facets]

    def equations(self) -> List[Tuple[List[Fraction], Fraction]]:
        return [(frac_vec(e[1:]), Fraction(-e[0])) for e in self.cone.equations]

    def contains(self, x) -> bool:
        return self.cone.contains([1] + list(x))

    def contains_relint(self, x) -> bool:
        return self.cone.contains_relint([1] + list(x))

    def face(self, w) -> "Polytope":
        """Points of P maximizing w."""
        w = frac_vec(w)
        if len(w) != self.ambient:
            raise DimensionMismatch("weight has wrong dimension")
        vals = [dot(w, v) for v in self.vertices]
        m = max(vals)
        return Polytope([v for v, x in zip(self.vertices, vals) if x == m])

    def faces(self) -> List["Polytope"]:
        out = []
        for F in self.cone.faces():
            if F.rays:
                out.append(Polytope([[Fraction(a, r[0]) for a in r[1:]] for r in F.rays]))
        return out

    def dilate(self, r) -> "Polytope":
        r = Fraction(r)
        return Polytope([[a * r for a in v] for v in self.vertices])

    def translate(self, t) -> "Polytope":
        return Polytope([[a + b for a, b in zip(v, t)] for v in self.vertices])

    def project(self, keep: Sequence[int]) -> "Polytope":
        return Polytope([[v[i] for i in keep] for v in self.vertices])

    def barycenter(self) -> List[Fraction]:
        k = len(self.vertices)
        return [sum(v[i] for v in self.vertices) / k for i in range(self.ambient)]

    def is_lattice(self) -> bool:
        return all(a.denominator == 1 for v in self.vertices for a in v)

    def lattice_points(self) -> List[Tuple[int, ...]]:
        """Integer points by bounding box scan plus membership test."""
        lo = [ceil(min(v[i] for v in self.vertices)) for i in range(self.ambient)]
        hi = [floor(max(v[i] for v in self.vertices)) for i in range(self.ambient)]
        eqs = self.equations()
        ineqs = self.inequalities()
        out = []
        for p in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
            if all(dot(a, p) == b for a, b in eqs) and all(dot(a, p) >= b for a, b in ineqs):
                out.append(tuple(p))
        return out

    def to_json(self) -> Dict:
        return {"vertices": [[_jnum(a) for a in v] for v in self.vertices]}

    @classmethod
    def from_json(cls, data) -> "Polytope":
        return cls([[Fraction(a) for a in v] for v in data["vertices"]])


def _jnum(a: Fraction):
    return a.numerator if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def lattice_points(P: Polytope):
    return P.lattice_points()
