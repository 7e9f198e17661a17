"""Desk-scale golden checks with known answers, shared by the CLI verifier and the test suite.

Each check returns ``(ok, detail)``; ``detail`` is a short human-readable
summary of what was compared.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .grassmann import plucker_coords, plucker_ideal, plucker_ring
from .grobner import degeneration_family, ideals_equal
from .nokbody import ValuationUndefined, find_quasivaluation_witness, no_body, small_polynomials, weight_quasivaluation
from .polycore import Ideal, parse_polynomial
from .polyhedra import Polytope, are_adjacent
from .reembed import algorithm2, project_cone_check
from .toricideal import ToricData, hilbert_ehrhart_table, normalized_volume
from .tropical import groebner_fan, tropicalize
from .wallcross import fiber_interval, flip_map, kappa, shift_map, wall_setup

Result = Tuple[bool, str]

TWISTED_CUBIC = [[1, 1, 1, 1], [0, 1, 2, 3]]
QUADRIC = "x^2+x*y+x*z+z^2"
QUARTIC = "x^4+x^4*y-x^3*y+x^3*y^2+y"


def _ideal(text, ring) -> Ideal:
    return Ideal.from_text(text, tuple(ring))


def _same(I: Ideal, text: str) -> bool:
    return ideals_equal(I, _ideal(text, I.ring))


def check_plucker() -> Result:
    I = plucker_ideal(2, 4)
    expected = parse_polynomial("p12*p34 - p13*p24 + p14*p23", plucker_ring(2, 4))
    gens = I.generators
    ok_ideal = len(gens) == 1 and (gens[0] == expected or gens[0] == -expected)
    coords = plucker_coords([[4, 3, 2, 1], [1, 2, 3, 4]])
    ok_coords = coords == [5, 10, 15, 5, 10, 5]
    return ok_ideal and ok_coords, f"generators={[str(g) for g in gens]} coords={[str(c) for c in coords]}"


def check_groebner_fan() -> Result:
    I = _ideal(QUARTIC, ("x", "y"))
    gf = groebner_fan(I)
    maximal = gf.fan.maximal_cones()
    rays = sorted(gf.fan.rays())
    want_rays = sorted([(1, 4), (1, -3), (-1, 0), (-1, -1)])
    mono = {"y", "x^4", "x^3*y^2", "x^4*y"}
    binom = {(1, 4): "x^4+y", (1, -3): "x^3*y^2+y", (-1, 0): "x^4*y+x^4", (-1, -1): "x^4*y+x^3*y^2"}
    got_mono = set()
    for C in maximal:
        J = gf.initial_ideal(C)
        got_mono |= {m for m in mono if _same(J, m)}
    ok_bin = True
    for C in gf.fan.all_cones():
        if C.dim == 1:
            ok_bin &= _same(gf.initial_ideal(C), binom.get(C.rays[0], "1"))
    ok = len(maximal) == 4 and rays == want_rays and got_mono == mono and ok_bin
    return ok, f"maximal={len(maximal)} rays={rays} monomial_labels={len(got_mono)} binomial_labels_ok={ok_bin}"


def check_trop_toy() -> Result:
    I = _ideal("x+x*y+y", ("x", "y"))
    T = tropicalize(I)
    want = {(-1, 0): ("not_prime", "x+x*y"), (0, -1): ("not_prime", "x*y+y"), (1, 1): ("prime", "x+y")}
    got = {c.cone.rays[0]: c for c in T.maximal_cones()}
    ok = set(got) == set(want)
    for r, (flag, form) in want.items():
        c = got.get(r)
        ok = ok and c is not None and c.prime == flag and _same(c.initial_ideal, form)
    return ok, "rays=" + str(sorted(got)) + " flags=" + str([got[r].prime for r in sorted(got)])


def quadric_trop():
    return tropicalize(_ideal(QUADRIC, ("x", "y", "z")))


def check_quadric() -> Result:
    T = quadric_trop()
    ok_lin = [tuple(v) for v in T.lineality] == [(1, 1, 1)]
    rays = sorted(c.cone.rays[0] for c in T.maximal_cones())
    ok_rays = rays == sorted([(0, -2, -1), (0, 1, 0), (0, 0, 1)])
    C1 = T.find(ray=(0, -2, -1))
    ok_c1 = C1 is not None and C1.prime == "prime" and _same(C1.initial_ideal, "x*y+z^2")
    body = no_body([[1, 1, 1], [2, 0, 1]])
    ok_body = body.vertices == [(1, 0), (1, 2)]
    ok = ok_lin and ok_rays and ok_c1 and ok_body
    return ok, f"lineality={T.lineality} rays={rays} C1_prime={C1.prime if C1 else None} body={[[str(a) for a in v] for v in body.vertices]}"


def check_degeneration() -> Result:
    ring = ("x", "y", "z", "w")
    D = degeneration_family(_ideal("x*y+y*z-z*w", ring), (0, 1, 1, 0))
    want = _ideal("x*y+t*y*z-z*w", ring + ("t",))
    fiber = [g.specialize("t", 0) for g in D.generators]
    ok0 = ideals_equal(Ideal(fiber[0].ring, fiber), _ideal("x*y-z*w", fiber[0].ring))
    ok = ideals_equal(D, want) and ok0
    return ok, f"family={[str(g) for g in D.generators]}"


def check_hilbert_ehrhart() -> Result:
    rows = hilbert_ehrhart_table(TWISTED_CUBIC, 3)
    vol = normalized_volume(ToricData(TWISTED_CUBIC).polytope)
    ok = [h for _, h, _ in rows] == [1, 4, 7, 10] == [e for _, _, e in rows] and vol == 3
    return ok, f"table={rows} volume={vol}"


def check_gr25() -> Result:
    T = tropicalize(plucker_ideal(2, 5))
    fv = T.f_vector()
    ok = len(T.lineality) == 5 and fv[1:] == [10, 15] and all(c.prime == "prime" for c in T.maximal_cones())
    return ok, f"lineality_dim={len(T.lineality)} f_vector={fv}"


def _sample_in(P: Polytope, rng: random.Random):
    ws = [Fraction(rng.randint(0, 6)) for _ in P.vertices]
    if not any(ws):
        ws[0] = Fraction(1)
    s = sum(ws)
    return tuple(sum((w * v[i] for w, v in zip(ws, P.vertices)), Fraction(0)) / s for i in range(P.ambient))


def check_wallcross(samples: int = 50, seed: int = 0) -> Result:
    I = plucker_ideal(2, 4)
    T = tropicalize(I)
    mc = T.maximal_cones()
    rng = random.Random(seed)
    pairs = 0
    for i in range(len(mc)):
        for j in range(len(mc)):
            if i >= j or not are_adjacent(mc[i].cone, mc[j].cone):
                continue
            pairs += 1
            S = wall_setup(mc[i], mc[j], I)
            if not S.projection_ok():
                return False, "projection of bodies differs"
            k = kappa(S)
            S12, S21 = shift_map(S), shift_map(S, reverse=True)
            F12, F21 = flip_map(S), flip_map(S, reverse=True)
            for _ in range(samples):
                q = _sample_in(S.delta1, rng)
                a, b = S12(q), F12(q)
                if not (S.delta2.contains(a) and S.delta2.contains(b)):
                    return False, "image leaves the target body"
                if S21(a) != q or F21(b) != q:
                    return False, "maps are not mutually inverse"
                x = q[:-1]
                lo1, hi1 = fiber_interval(S.delta1, x)
                lo2, hi2 = fiber_interval(S.delta2, x)
                if hi2 - lo2 != k * (hi1 - lo1):
                    return False, "fiber lengths do not scale by kappa"
    return pairs == 3, f"adjacent_pairs={pairs} samples_per_pair={samples}"


def check_valuations(pairs: int = 100, seed: int = 0) -> Result:
    ring = ("x", "y", "z")
    I = _ideal(QUADRIC, ring)
    M = [[1, 1, 1], [2, 0, 1]]
    rng = random.Random(seed)
    pool = small_polynomials(ring, 2, coeffs=(1, -1, 2), max_terms=3)
    bad = done = 0
    while done < pairs:
        f, g = rng.choice(pool), rng.choice(pool)
        try:
            vf, vg, vfg = (weight_quasivaluation(M, I, p) for p in (f, g, f * g))
        except ValuationUndefined:
            continue
        done += 1
        if vfg != tuple(a + b for a, b in zip(vf, vg)):
            bad += 1
    H = _ideal("x*h+x*y+y*h", ("h", "x", "y"))
    w = find_quasivaluation_witness([[1, 1, 1], [0, -1, 0]], H)
    ok = bad == 0 and w is not None
    detail = f"multiplicativity_failures={bad}"
    if w:
        detail += f" witness=({w[0]}, {w[1]})"
    return ok, detail


def check_reembed() -> Result:
    I = _ideal("x+x*y+y", ("x", "y"))
    T = tropicalize(I)
    C1, C2 = T.find(ray=(-1, 0)), T.find(ray=(1, 1))
    R = algorithm2(I, C1, C2)
    E = R.embedding
    a, b = R.cones
    ok = (a.prime == b.prime == "prime" and are_adjacent(a.cone, b.cone)
          and project_cone_check(a.cone, C1.cone, E.keep) and project_cone_check(b.cone, C2.cone, E.keep)
          and E.recovers_original())
    # oracle: the new ideal tropicalized from scratch sees the same prime rays
    T1 = tropicalize(E.ideal)
    ok = ok and {c.cone.rays[0] for c in T1.maximal_cones() if c.prime == "prime"} >= {a.cone.rays[0], b.cone.rays[0]}
    return ok, f"added={[str(f) for f in E.binomials]} pair={[a.cone.rays, b.cone.rays]}"


CHECKS: Dict[int, Tuple[str, Callable[[], Result]]] = {
    1: ("Pluecker ideal and coordinates", check_plucker),
    2: ("Groebner fan of x^4+x^4y-x^3y+x^3y^2+y", check_groebner_fan),
    3: ("tropicalization of x+xy+y", check_trop_toy),
    4: ("quadric tropicalization and NO body", check_quadric),
    5: ("Groebner degeneration", check_degeneration),
    6: ("Hilbert function equals Ehrhart polynomial", check_hilbert_ehrhart),
    7: ("trop Gr(2,5) against tree count", check_gr25),
    8: ("wall-crossing on Gr(2,4)", check_wallcross),
    9: ("valuation versus quasi-valuation", check_valuations),
    10: ("re-embedding toy", check_reembed),
}


def run_all(skip=()) -> List[Tuple[int, str, bool, str, float]]:
    out = []
    for k, (name, fn) in CHECKS.items():
        if k in skip:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, reported as such
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append((k, name, ok, detail, time.perf_counter() - t0))
    return out
