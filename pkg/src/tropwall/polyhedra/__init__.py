"""Exact polyhedral geometry: cones, polytopes, fans and rational LP."""

from .cone import (Cone, DimensionMismatch, are_adjacent, common_face, face_of, intersect,
                   relative_interior_point, relint_meets)
from .dd import hrep_to_vrep, vrep_to_hrep
from .fan import Fan, project, quotient_coordinates, verify_fan
from .lp import Infeasible, LPError, LPResult, Unbounded, lp_optimize
from .polytope import Polytope, UnboundedError, lattice_points


def dd_convert(rays=None, lineality=(), ineqs=None, equations=(), ambient=None):
    """Convert between generator and inequality descriptions of a cone."""
    if rays is not None and ineqs is not None:
        raise ValueError("give either generators or inequalities, not both")
    if rays is not None:
        if not rays and not lineality and ambient is None:
            raise ValueError("empty input")
        C = Cone(rays, lineality, ambient)
        return {"ineqs": [list(a) for a in C.facets], "equations": [list(e) for e in C.equations]}
    if ineqs is None:
        raise ValueError("empty input")
    C = Cone.from_hrep(ineqs, equations, ambient)
    return {"rays": [list(r) for r in C.rays], "lineality": [list(l) for l in C.lineality]}


__all__ = [
    "Cone", "Polytope", "Fan", "DimensionMismatch", "UnboundedError", "Infeasible", "Unbounded",
    "LPError", "LPResult", "are_adjacent", "common_face", "face_of", "intersect",
    "relative_interior_point", "relint_meets", "hrep_to_vrep", "vrep_to_hrep", "project",
    "quotient_coordinates", "verify_fan", "lp_optimize", "lattice_points", "dd_convert",
]
