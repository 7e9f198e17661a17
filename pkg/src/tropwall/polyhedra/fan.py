"""Finite polyhedral fans given by their maximal cones."""

from __future__ import annotations

from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from .cone import Cone, DimensionMismatch


class Fan:
    """A fan recorded by its maximal cones; faces are derived on demand."""

    def __init__(self, cones: Sequence[Cone], ambient: Optional[int] = None):
        cones = list(cones)
        if ambient is None:
            if not cones:
                raise ValueError("ambient dimension required for an empty fan")
            ambient = cones[0].ambient
        for c in cones:
            if c.ambient != ambient:
                raise DimensionMismatch("cones of different ambient dimension")
        self.ambient = ambient
        # drop cones that are faces of others, keep a deterministic order
        uniq = sorted(set(cones), key=lambda c: (-c.dim, c.key))
        maximal = []
        for c in uniq:
            if not any(c != m and c.is_face_of(m) for m in maximal):
                maximal.append(c)
        self.cones = sorted(maximal, key=lambda c: (-c.dim, c.key))

    @property
    def lineality(self) -> List[Tuple[int, ...]]:
        """Lineality space common to all cones."""
        if not self.cones:
            return []
        lin = set(self.cones[0].lineality)
        if all(set(c.lineality) == lin for c in self.cones):
            return list(self.cones[0].lineality)
        # fall back to the intersection of the lineality spaces
        common = self.cones[0]
        for c in self.cones[1:]:
            common = Cone([], common.lineality, self.ambient).intersect(Cone([], c.lineality, self.ambient))
        return list(common.lineality)

    @property
    def lineality_dim(self) -> int:
        return len(self.lineality)

    def all_cones(self) -> List[Cone]:
        seen = {}
        for c in self.cones:
            for f in c.faces():
                seen.setdefault(f.key, f)
        return sorted(seen.values(), key=lambda c: (c.dim, c.key))

    def f_vector(self) -> List[int]:
        """Number of cones by dimension modulo the common lineality, starting at 0."""
        ld = self.lineality_dim
        counts: Dict[int, int] = defaultdict(int)
        for c in self.all_cones():
            counts[c.dim - ld] += 1
        if not counts:
            return []
        return [counts[d] for d in range(max(counts) + 1)]

    def rays(self) -> List[Tuple[int, ...]]:
        out = set()
        for c in self.cones:
            out.update(c.rays)
        return sorted(out)

    def dim(self) -> int:
        return max((c.dim for c in self.cones), default=-1)

    def maximal_cones(self, pure_dim: Optional[int] = None) -> List[Cone]:
        if pure_dim is None:
            return list(self.cones)
        return [c for c in self.cones if c.dim == pure_dim]

    def find_cone(self, w) -> Optional[Cone]:
        """The smallest cone of the fan containing w."""
        best = None
        for c in self.all_cones():
            if c.contains(w) and (best is None or c.dim < best.dim):
                best = c
        return best

    def to_json(self) -> Dict:
        rays = self.rays()
        index = {r: i for i, r in enumerate(rays)}
        return {
            "ambient": self.ambient,
            "lineality": [list(l) for l in self.lineality],
            "rays": [list(r) for r in rays],
            "maximal_cones": [[index[r] for r in c.rays] for c in self.cones],
        }

    @classmethod
    def from_json(cls, data) -> "Fan":
        rays = data["rays"]
        lin = data.get("lineality", [])
        n = data["ambient"]
        return cls([Cone([rays[i] for i in idx], lin, n) for idx in data["maximal_cones"]], n)

    def __len__(self):
        return len(self.cones)

    def __iter__(self):
        return iter(self.cones)


def verify_fan(fan_or_cones, require_closed: bool = False) -> Tuple[bool, List[str]]:
    """Check that pairwise intersections are faces of both cones.

    With ``require_closed`` every such intersection must itself be listed
    among the given cones (the literal closure axiom for explicit cone lists).
    """
    cones = list(fan_or_cones.cones if isinstance(fan_or_cones, Fan) else fan_or_cones)
    problems = []
    keys = {c.key for c in cones}
    for i in range(len(cones)):
        for j in range(i + 1, len(cones)):
            A, B = cones[i], cones[j]
            F = A.intersect(B)
            if not F.is_face_of(A):
                problems.append(f"intersection of cones {i} and {j} is not a face of cone {i}")
            if not F.is_face_of(B):
                problems.append(f"intersection of cones {i} and {j} is not a face of cone {j}")
            if require_closed and F.key not in keys:
                problems.append(f"intersection of cones {i} and {j} is not in the collection")
    if require_closed:
        for i, c in enumerate(cones):
            for f in c.faces():
                if f.key not in keys:
                    problems.append(f"a face of cone {i} is not in the collection")
                    break
    return not problems, problems


def project_cone(C: Cone, keep: Sequence[int]) -> Cone:
    return Cone([[r[i] for i in keep] for r in C.rays], [[l[i] for i in keep] for l in C.lineality], len(keep))


def project(obj, keep: Sequence[int]):
    """Coordinate projection of a cone, polytope or fan."""
    from .polytope import Polytope

    if isinstance(obj, Cone):
        return project_cone(obj, keep)
    if isinstance(obj, Polytope):
        return obj.project(keep)
    if isinstance(obj, Fan):
        return Fan([project_cone(c, keep) for c in obj.cones], len(keep))
    raise TypeError(f"cannot project {type(obj).__name__}")


def quotient_coordinates(vectors, lineality, ambient: int):
    """Coordinates of vectors in the orthogonal complement of the lineality space."""
    from .linalg import dot, nullspace, solve

    comp = nullspace(lineality, ambient) if lineality else [[int(i == j) for j in range(ambient)] for i in range(ambient)]
    out = []
    # orthogonal projection onto comp, expressed in the basis comp
    G = [[dot(a, b) for b in comp] for a in comp]
    for v in vectors:
        rhs = [dot(a, v) for a in comp]
        out.append(solve(G, rhs) if comp else [])
    return out, comp
