"""Integer lattice helpers: kernels, Hermite/Smith forms, saturation tests."""

from __future__ import annotations

from math import gcd
from typing import List, Sequence


def _ext_gcd(a: int, b: int):
    # returns (g, x, y) with a*x + b*y = g >= 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def primitive(v: Sequence[int]) -> List[int]:
    g = 0
    for a in v:
        g = gcd(g, int(a))
    if g == 0:
        return [0] * len(v)
    return [int(a) // g for a in v]


def integer_kernel(A: Sequence[Sequence[int]], n: int | None = None) -> List[List[int]]:
    """A basis of the lattice {u in Z^n : A u = 0}.

    Column operations on the stacked matrix [A; I] bring A to echelon form;
    the identity part of the columns whose A-part vanished spans the kernel.
    """
    rows = [list(map(int, r)) for r in A]
    if n is None:
        n = len(rows[0]) if rows else 0
    m = len(rows)
    # columns as lists: top m entries from A, bottom n from identity
    cols = [[rows[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(n)] for j in range(n)]
    pivot_col = 0
    for i in range(m):
        # eliminate row i among columns pivot_col..n-1
        while True:
            nz = [j for j in range(pivot_col, n) if cols[j][i] != 0]
            if len(nz) <= 1:
                break
            # combine the two columns with the smallest entries
            nz.sort(key=lambda j: abs(cols[j][i]))
            a, b = nz[0], nz[1]
            g, x, y = _ext_gcd(cols[a][i], cols[b][i])
            ua, ub = cols[a][i] // g, cols[b][i] // g
            new_a = [x * p + y * q for p, q in zip(cols[a], cols[b])]
            new_b = [-ub * p + ua * q for p, q in zip(cols[a], cols[b])]
            cols[a], cols[b] = new_a, new_b
        nz = [j for j in range(pivot_col, n) if cols[j][i] != 0]
        if nz:
            j = nz[0]
            cols[pivot_col], cols[j] = cols[j], cols[pivot_col]
            pivot_col += 1
    basis = [c[m:] for c in cols[pivot_col:]]
    return [_size_reduce(v, basis) for v in basis] if basis else []


def _size_reduce(v, basis):
    return v


def lll_reduce(basis: List[List[int]]) -> List[List[int]]:
    """Plain exact LLL (delta = 3/4); keeps kernel bases small."""
    from fractions import Fraction

    b = [list(v) for v in basis if any(v)]
    k = len(b)
    if k <= 1:
        return b

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gram_schmidt():
        bstar = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(dot(b[i], bstar[j])) / dot(bstar[j], bstar[j]) if dot(bstar[j], bstar[j]) else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
        return bstar, mu

    bstar, mu = gram_schmidt()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                bstar, mu = gram_schmidt()
        lhs = dot(bstar[i], bstar[i])
        rhs = (Fraction(3, 4) - mu[i][i - 1] ** 2) * dot(bstar[i - 1], bstar[i - 1])
        if lhs >= rhs:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            bstar, mu = gram_schmidt()
            i = max(i - 1, 1)
    return b


def hermite_rows(B: Sequence[Sequence[int]]) -> List[List[int]]:
    """Row-style Hermite normal form of the row lattice of B (zero rows dropped)."""
    M = [list(map(int, r)) for r in B if any(r)]
    if not M:
        return []
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(M)) if M[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[p] = M[p], M[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if r < len(M) and M[r][c] != 0:
            if M[r][c] < 0:
                M[r] = [-a for a in M[r]]
            for i in range(r):
                q = M[i][c] // M[r][c]
                if q:
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
            r += 1
            if r == len(M):
                break
    return [row for row in M if any(row)]


def smith_invariants(B: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero invariant factors of an integer matrix."""
    M = [list(map(int, r)) for r in B]
    if not M or not M[0]:
        return []
    m, n = len(M), len(M[0])
    inv = []
    t = 0
    while t < min(m, n):
        nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        M[t], M[pi] = M[pi], M[t]
        for row in M:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    M[i] = [a - q * b for a, b in zip(M[i], M[t])]
                    if M[i][t]:
                        changed = True
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    for row in M:
                        row[j] -= q * row[t]
                    if M[t][j]:
                        changed = True
            if not changed:
                # pivot must divide the rest of the submatrix
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if M[i][j] % M[t][t]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                M[t] = [a + b for a, b in zip(M[t], M[bad])]
                changed = True
            if changed:
                nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                      if M[i][j] and (i == t or j == t)]
                _, pi, pj = min(nz)
                M[t], M[pi] = M[pi], M[t]
                for row in M:
                    row[t], row[pj] = row[pj], row[t]
        inv.append(abs(M[t][t]))
        t += 1
    return inv


def is_saturated(B: Sequence[Sequence[int]]) -> bool:
    """True iff the lattice spanned by the rows of B equals (span_Q B) meet Z^n."""
    rows = [r for r in B if any(r)]
    if not rows:
        return True
    return all(d == 1 for d in smith_invariants(rows))


def lattice_index(B: Sequence[Sequence[int]]) -> int:
    """Index of the row lattice of B inside its saturation."""
    out = 1
    for d in smith_invariants([r for r in B if any(r)]):
        out *= d
    return out


def solve_integer(B: Sequence[Sequence[int]], p: Sequence[int]):
    """Integer coefficients y with sum_i y_i B[i] = p, or None."""
    k = len(B)
    if k == 0:
        return [] if not any(p) else None
    n = len(p)
    # kernel of [B^T | -p] with last coordinate 1
    A = [[B[i][j] for i in range(k)] + [-int(p[j])] for j in range(n)]
    ker = integer_kernel(A, k + 1)
    # find combination with last coordinate exactly +-1
    lasts = [v[-1] for v in ker]
    g = 0
    for a in lasts:
        g = gcd(g, a)
    if g != 1:
        return None
    # extended gcd over the last coordinates
    coeffs = [0] * len(ker)
    acc = 0
    for idx, a in enumerate(lasts):
        if a == 0:
            continue
        if acc == 0:
            acc = a
            coeffs = [0] * len(ker)
            coeffs[idx] = 1
            continue
        gg, x, y = _ext_gcd(acc, a)
        coeffs = [c * x for c in coeffs]
        coeffs[idx] += y
        acc = gg
    sol = [sum(c * v[i] for c, v in zip(coeffs, ker)) for i in range(k + 1)]
    if sol[-1] == -1:
        sol = [-a for a in sol]
    return sol[:k]


def in_lattice(B: Sequence[Sequence[int]], p: Sequence[int]) -> bool:
    return solve_integer(B, p) is not None
