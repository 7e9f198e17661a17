"""Double description conversion between inequality and generator forms of cones."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .linalg import dot, frac_vec, independent_rows, inverse, matmul, nullspace, primitive_int, rank, transpose


def _pointed_extreme_rays(C: List[List[Fraction]], r: int) -> List[List[Fraction]]:
    """Extreme rays of the pointed cone {z in Q^r : C z >= 0}, where rank C = r."""
    if r == 0:
        return []
    seed = independent_rows(C)
    assert len(seed) == r
    D = [C[i] for i in seed]
    Dinv = inverse(D)
    rays = [list(col) for col in zip(*Dinv)]
    # tight sets as bitmasks over processed constraint positions
    order = seed + [i for i in range(len(C)) if i not in seed]
    tight = []
    for k, ray in enumerate(rays):
        mask = 0
        for pos in range(r):
            if pos != k:
                mask |= 1 << pos
        tight.append(mask)
    for pos in range(r, len(order)):
        c = C[order[pos]]
        vals = [dot(c, ray) for ray in rays]
        plus = [i for i, v in enumerate(vals) if v > 0]
        minus = [i for i, v in enumerate(vals) if v < 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        if not minus:
            for i in zero:
                tight[i] |= 1 << pos
            continue
        new_rays = []
        new_tight = []
        for i in plus:
            new_rays.append(rays[i])
            new_tight.append(tight[i])
        for i in zero:
            new_rays.append(rays[i])
            new_tight.append(tight[i] | (1 << pos))
        # adjacency: common tight set not contained in any third ray's tight set
        candidates = plus + zero + minus
        for p in plus:
            for q in minus:
                common = tight[p] & tight[q]
                if bin(common).count("1") < r - 2:
                    continue
                ok = True
                for o in candidates:
                    if o != p and o != q and (tight[o] & common) == common:
                        ok = False
                        break
                if not ok:
                    continue
                vp, vq = vals[p], vals[q]
                nr = [vp * a - vq * b for a, b in zip(rays[q], rays[p])]
                new_rays.append([Fraction(a) for a in primitive_int(nr)])
                new_tight.append(common | (1 << pos))
        rays, tight = new_rays, new_tight
    return rays


def hrep_to_vrep(ineqs: Sequence[Sequence], eqs: Sequence[Sequence], n: int
                 ) -> Tuple[List[List[int]], List[List[Fraction]]]:
    """Rays (primitive integer) and a lineality basis of {A x >= 0, E x = 0}."""
    eqs = [frac_vec(e) for e in eqs if any(e)]
    ineqs = [frac_vec(a) for a in ineqs if any(a)]
    N = nullspace(eqs, n) if eqs else [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    k = len(N)
    if k == 0:
        return [], []
    Nt = transpose(N)  # n x k, x = Nt y
    B = [[dot(a, [Nt[i][j] for i in range(n)]) for j in range(k)] for a in ineqs]
    B = [row for row in B if any(row)]
    lin_y = nullspace(B, k) if B else [[Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    lineality = [[dot(Nt[i], y) for i in range(n)] for y in lin_y]
    r = rank(B) if B else 0
    if r == 0:
        return [], lineality
    W_rows = [B[i] for i in independent_rows(B)]  # r x k; y = W^T z
    C = matmul(B, transpose(W_rows))  # m x r
    zrays = _pointed_extreme_rays(C, r)
    rays = []
    for z in zrays:
        y = [sum(W_rows[t][j] * z[t] for t in range(r)) for j in range(k)]
        x = [dot(Nt[i], y) for i in range(n)]
        rays.append(primitive_int(x))
    return rays, lineality


def vrep_to_hrep(rays: Sequence[Sequence], lineality: Sequence[Sequence], n: int
                 ) -> Tuple[List[List[int]], List[List[Fraction]]]:
    """Facet normals (a.x >= 0, irredundant) and an equation basis of pos(rays) + span(lineality)."""
    # the dual cone {a : a.r >= 0, a.l = 0}: its rays are facet normals, its lineality the equations
    return hrep_to_vrep(rays, lineality, n)
