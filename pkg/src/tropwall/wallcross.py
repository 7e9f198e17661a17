"""Wall-crossing between Newton-Okounkov bodies of adjacent prime cones.

For adjacent prime cones C1, C2 with common facet C the weight matrices M1
and M2 share every row but the last.  Both bodies project onto the body of
M by dropping the last coordinate, and over each point x of that body the
fibers are segments [phi_i(x), psi_i(x)].  The ratio of fiber lengths is a
global constant kappa; the shift and flip maps rescale fibers by kappa.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .nokbody import WeightMatrix, no_body
from .polycore import Ideal
from .polyhedra import Cone, Infeasible, Polytope, are_adjacent, lp_optimize
from .polyhedra.linalg import rank

Affine = Tuple[Tuple[Fraction, ...], Fraction]  # h = coeffs . x + const


class WallCrossingError(ValueError):
    pass


def _cone_of(c) -> Cone:
    return c.cone if hasattr(c, "cone") else c


def _prime_flag(c) -> Optional[str]:
    return getattr(c, "prime", None)


def wall_rows(C: Cone) -> List[Tuple[Fraction, ...]]:
    """All-ones row, then lineality vectors, then rays of C, each kept when it raises the rank."""
    n = C.ambient
    rows: List[Tuple[Fraction, ...]] = [tuple(Fraction(1) for _ in range(n))]
    for v in list(C.lineality) + list(C.rays):
        cand = rows + [tuple(Fraction(a) for a in v)]
        if rank([list(r) for r in cand]) > len(rows):
            rows = cand
    if rank([list(r) for r in rows]) != C.dim:
        raise WallCrossingError("chosen rows do not span the common face")
    return rows


@dataclass
class Envelope:
    """Lower (kind 'lower') or upper envelope of a body over its projection."""

    kind: str
    forms: List[Affine]
    cells: List[Polytope]

    def __call__(self, x) -> Fraction:
        vals = [sum((a * b for a, b in zip(c, x)), Fraction(0)) + k for c, k in self.forms]
        return max(vals) if self.kind == "lower" else min(vals)

    def active(self, x) -> int:
        vals = [sum((a * b for a, b in zip(c, x)), Fraction(0)) + k for c, k in self.forms]
        target = max(vals) if self.kind == "lower" else min(vals)
        return vals.index(target)


def envelopes(body: Polytope) -> Tuple[Envelope, Envelope]:
    """phi and psi of a body in terms of its last coordinate, with their linearity cells."""
    lower_f, lower_c, upper_f, upper_c = [], [], [], []
    for a, b in body.inequalities():
        ah = a[-1]
        if ah == 0:
            continue
        coeffs = tuple(-x / ah for x in a[:-1])
        form = (coeffs, b / ah)
        facet = [v for v in body.vertices if sum((x * y for x, y in zip(a, v)), Fraction(0)) == b]
        cell = Polytope([v[:-1] for v in facet])
        if ah > 0:
            lower_f.append(form)
            lower_c.append(cell)
        else:
            upper_f.append(form)
            upper_c.append(cell)
    if not lower_f:
        # the body is flat in the last coordinate: it lies in an equation
        for a, b in body.equations():
            if a[-1] != 0:
                form = (tuple(-x / a[-1] for x in a[:-1]), b / a[-1])
                cell = body.project(list(range(body.ambient - 1)))
                return Envelope("lower", [form], [cell]), Envelope("upper", [form], [cell])
        raise WallCrossingError("body has no lower boundary in the last coordinate")
    return Envelope("lower", lower_f, lower_c), Envelope("upper", upper_f, upper_c)


def fiber_interval(body: Polytope, xi) -> Tuple[Fraction, Fraction]:
    """[min, max] of the last coordinate over the fiber of body above xi (two exact LPs)."""
    xi = [Fraction(a) for a in xi]
    m = body.ambient
    if len(xi) != m - 1:
        raise ValueError("point has wrong dimension")
    ineqs = [(a, b) for a, b in body.inequalities()]
    eqs = [(a, b) for a, b in body.equations()]
    fix = [([Fraction(int(i == j)) for j in range(m)], xi[i]) for i in range(m - 1)]
    direction = [0] * (m - 1) + [1]
    try:
        lo = lp_optimize(direction, ineqs, eqs + fix, maximize=False, nvars=m).value
        hi = lp_optimize(direction, ineqs, eqs + fix, maximize=True, nvars=m).value
    except Infeasible:
        raise ValueError("point is not in the projected body") from None
    return lo, hi


@dataclass
class WallSetup:
    ideal: Ideal
    C1: Cone
    C2: Cone
    C: Cone
    M: WeightMatrix
    M1: WeightMatrix
    M2: WeightMatrix
    delta1: Polytope
    delta2: Polytope
    delta: Polytope

    def projection_ok(self) -> bool:
        keep = list(range(self.M.d))
        return self.delta1.project(keep) == self.delta == self.delta2.project(keep)

    def with_last_rows(self, w1=None, w2=None) -> "WallSetup":
        rows = list(self.M.rows)
        M1 = WeightMatrix(rows + [tuple(w1)]) if w1 is not None else self.M1
        M2 = WeightMatrix(rows + [tuple(w2)]) if w2 is not None else self.M2
        return WallSetup(self.ideal, self.C1, self.C2, self.C, self.M, M1, M2,
                         no_body(M1), no_body(M2), self.delta)


def wall_setup(C1, C2, I: Ideal, require_prime: bool = True) -> WallSetup:
    """Weight matrices and bodies for two adjacent prime maximal cones of trop(I)."""
    K1, K2 = _cone_of(C1), _cone_of(C2)
    if K1 == K2:
        raise WallCrossingError("the two cones coincide")
    if not are_adjacent(K1, K2):
        raise WallCrossingError("cones are not adjacent")
    if require_prime:
        for c in (C1, C2):
            flag = _prime_flag(c)
            if flag is not None and flag != "prime":
                raise WallCrossingError("wall-crossing needs prime cones")
    if not I.is_homogeneous():
        raise WallCrossingError("wall-crossing needs a homogeneous ideal")
    C = K1.intersect(K2)
    rows = wall_rows(C)
    w1 = tuple(K1.relative_interior_point())
    w2 = tuple(K2.relative_interior_point())
    M = WeightMatrix(rows)
    M1 = WeightMatrix(rows + [w1])
    M2 = WeightMatrix(rows + [w2])
    return WallSetup(I, K1, K2, C, M, M1, M2, no_body(M1), no_body(M2), no_body(M))


@dataclass
class PLMap:
    kind: str
    kappa: Fraction
    phi1: Envelope
    psi1: Envelope
    phi2: Envelope
    psi2: Envelope
    cells: List[Tuple[Polytope, Tuple[int, int, int, int]]] = field(default_factory=list)

    def __call__(self, q):
        x, h = [Fraction(a) for a in q[:-1]], Fraction(q[-1])
        if self.kind == "shift":
            return tuple(x) + (self.kappa * (h - self.phi1(x)) + self.phi2(x),)
        return tuple(x) + (-self.kappa * (h - self.phi1(x)) + self.psi2(x),)

    def cell_formulas(self) -> List[Dict]:
        out = []
        for cell, (a, b, c, d) in self.cells:
            p1, q1, p2, q2 = self.phi1.forms[a], self.psi1.forms[b], self.phi2.forms[c], self.psi2.forms[d]
            if self.kind == "shift":
                # h' = kappa*h - kappa*phi1(x) + phi2(x)
                base = p2
                sign = 1
            else:
                base = q2
                sign = -1
            coeffs = [sign * -self.kappa * u + v for u, v in zip(p1[0], base[0])]
            const = sign * -self.kappa * p1[1] + base[1]
            out.append({
                "cell": cell.to_json(),
                "phi1": _aff_json(p1), "psi1": _aff_json(q1), "phi2": _aff_json(p2), "psi2": _aff_json(q2),
                "map": {"h_coefficient": str(sign * self.kappa), "x_coefficients": [str(a) for a in coeffs],
                        "constant": str(const)},
            })
        return out


def _aff_json(f: Affine):
    return {"coefficients": [str(a) for a in f[0]], "constant": str(f[1])}


def _refine(cells_lists: Sequence[Sequence[Polytope]]) -> List[Tuple[Polytope, Tuple[int, ...]]]:
    current: List[Tuple[Polytope, Tuple[int, ...]]] = [(None, ())]
    for cells in cells_lists:
        nxt = []
        for P, idx in current:
            for j, Q in enumerate(cells):
                if P is None:
                    nxt.append((Q, idx + (j,)))
                    continue
                try:
                    R = Polytope.from_hrep(P.inequalities() + Q.inequalities(), P.equations() + Q.equations(),
                                           P.ambient)
                except ValueError:
                    continue
                nxt.append((R, idx + (j,)))
        current = nxt
    return current


def _interior_point_with_fiber(setup: WallSetup, phi1, psi1) -> List[Fraction]:
    x = setup.delta.barycenter()
    if psi1(x) > phi1(x):
        return x
    for v in setup.delta.vertices:
        if psi1(v) > phi1(v):
            return list(v)
    raise WallCrossingError("all fibers of the first body are degenerate")


def kappa(setup: WallSetup, with_map: bool = False):
    """The fiber-length ratio, certified at every vertex of the common linearity refinement."""
    phi1, psi1 = envelopes(setup.delta1)
    phi2, psi2 = envelopes(setup.delta2)
    x0 = _interior_point_with_fiber(setup, phi1, psi1)
    k = (psi2(x0) - phi2(x0)) / (psi1(x0) - phi1(x0))
    if k <= 0:
        raise WallCrossingError("non-positive fiber ratio")
    cells = _refine([phi1.cells, psi1.cells, phi2.cells, psi2.cells])
    checked = set()
    for P, _ in cells:
        for v in P.vertices:
            if v in checked:
                continue
            checked.add(v)
            if k * (psi1(v) - phi1(v)) != psi2(v) - phi2(v):
                raise WallCrossingError(f"fiber ratio is not constant (fails at {[str(a) for a in v]})")
    if with_map:
        return k, (phi1, psi1, phi2, psi2), cells
    return k


def _maps(setup: WallSetup, kind: str, reverse: bool = False) -> PLMap:
    k, (phi1, psi1, phi2, psi2), cells = kappa(setup, with_map=True)
    if reverse:
        return PLMap(kind, 1 / k, phi2, psi2, phi1, psi1, [(P, (c, d, a, b)) for P, (a, b, c, d) in cells])
    return PLMap(kind, k, phi1, psi1, phi2, psi2, cells)


def shift_map(setup: WallSetup, reverse: bool = False) -> PLMap:
    return _maps(setup, "shift", reverse)


def flip_map(setup: WallSetup, reverse: bool = False) -> PLMap:
    return _maps(setup, "flip", reverse)


def apply_map(F: PLMap, q, source: Polytope):
    if not source.contains(q):
        raise ValueError("point is not in the source body")
    return F(q)


def fiber_length(body: Polytope, xi) -> Fraction:
    lo, hi = fiber_interval(body, xi)
    return hi - lo


def maps_to_json(setup: WallSetup) -> Dict:
    S = shift_map(setup)
    F = flip_map(setup)
    return {
        "format_version": 1,
        "kappa": str(S.kappa),
        "M": setup.M.to_json(), "M1": setup.M1.to_json(), "M2": setup.M2.to_json(),
        "delta1": setup.delta1.to_json(), "delta2": setup.delta2.to_json(), "delta": setup.delta.to_json(),
        "shift": S.cell_formulas(),
        "flip": F.cell_formulas(),
    }
