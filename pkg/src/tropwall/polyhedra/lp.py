"""Exact two-phase simplex with Bland's rule."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


class LPError(ValueError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass
class LPResult:
    value: Fraction
    point: List[Fraction]


def _pivot(T, basis, r, c):
    piv = T[r][c]
    if piv != 1:
        T[r] = [a / piv for a in T[r]]
    row = T[r]
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], row)]
    basis[r] = c


def _run(T, basis, allowed: int):
    """Minimize using the last row of T as reduced-cost row; columns < allowed may enter."""
    m = len(T) - 1
    while True:
        z = T[m]
        enter = next((j for j in range(allowed) if z[j] < 0), None)
        if enter is None:
            return
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(T, basis, best[1], enter)


def simplex_standard(A: Sequence[Sequence], b: Sequence, c: Sequence) -> Tuple[Fraction, List[Fraction]]:
    """Minimize c.y subject to A y = b, y >= 0."""
    m = len(A)
    n = len(c)
    rows = []
    rhs = []
    for i in range(m):
        r = [Fraction(a) for a in A[i]]
        bi = Fraction(b[i])
        if bi < 0:
            r = [-a for a in r]
            bi = -bi
        rows.append(r)
        rhs.append(bi)
    # phase 1 tableau: [A | I | b], cost row = -(sum of rows) on the A part
    T = []
    for i in range(m):
        T.append(rows[i] + [Fraction(int(i == k)) for k in range(m)] + [rhs[i]])
    z = [Fraction(0)] * (n + m + 1)
    for i in range(m):
        for j in range(n):
            z[j] -= rows[i][j]
        z[-1] -= rhs[i]
    T.append(z)
    basis = [n + i for i in range(m)]
    _run(T, basis, n + m)
    if T[m][-1] != 0:
        raise Infeasible("constraints are infeasible")
    # drive artificials out of the basis
    keep = []
    for i in range(m):
        if basis[i] >= n:
            j = next((j for j in range(n) if T[i][j] != 0), None)
            if j is None:
                continue  # redundant row
            _pivot(T, basis, i, j)
        keep.append(i)
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # phase 2 cost row
    cost = [Fraction(a) for a in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        if cost[bv]:
            f = cost[bv]
            cost = [a - f * r for a, r in zip(cost, T[i])]
    T.append(cost)
    _run(T, basis, n)
    y = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        y[bv] = T[i][-1]
    value = sum((Fraction(a) * v for a, v in zip(c, y)), Fraction(0))
    return value, y


def lp_optimize(direction: Sequence, ineqs: Sequence[Tuple[Sequence, object]] = (),
                eqs: Sequence[Tuple[Sequence, object]] = (), maximize: bool = True,
                nvars: Optional[int] = None) -> LPResult:
    """Optimize direction.x over {x : a.x >= b for (a,b) in ineqs, a.x == b for (a,b) in eqs}.

    Variables are free.  Raises :class:`Infeasible` or :class:`Unbounded`.
    """
    n = nvars if nvars is not None else len(direction)
    k = len(ineqs)
    # y = (x_plus, x_minus, slack)
    A = []
    b = []
    for idx, (a, rhs) in enumerate(ineqs):
        a = [Fraction(v) for v in a]
        A.append(a + [-v for v in a] + [Fraction(-1) if j == idx else Fraction(0) for j in range(k)])
        b.append(Fraction(rhs))
    for a, rhs in eqs:
        a = [Fraction(v) for v in a]
        A.append(a + [-v for v in a] + [Fraction(0)] * k)
        b.append(Fraction(rhs))
    d = [Fraction(v) for v in direction]
    if maximize:
        d = [-v for v in d]
    c = d + [-v for v in d] + [Fraction(0)] * k
    if not A:
        if any(direction):
            raise Unbounded("objective is unbounded")
        return LPResult(Fraction(0), [Fraction(0)] * n)
    val, y = simplex_standard(A, b, c)
    x = [y[i] - y[n + i] for i in range(n)]
    value = sum((Fraction(a) * v for a, v in zip(direction, x)), Fraction(0))
    return LPResult(value, x)


def feasible_point(ineqs=(), eqs=(), nvars: int = 0) -> Optional[List[Fraction]]:
    try:
        return lp_optimize([0] * nvars, ineqs, eqs, nvars=nvars).point
    except Infeasible:
        return None
