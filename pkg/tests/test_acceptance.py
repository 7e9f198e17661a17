"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are also collected and repeated in the terminal summary, so they
appear in the output of ``pytest -v`` without ``-s``.
"""

import time

import pytest

from tropwall.golden import CHECKS

# seconds allowed per criterion
LIMITS = {1: 1, 2: 5, 3: 1, 4: 5, 5: 1, 6: 5, 7: 600, 8: 120, 9: 60, 10: 60}

LINES = []


def report(k, name, ok, detail, seconds, limit):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {name} [{seconds:.2f}s / limit {limit}s] {detail}"
    LINES.append(line)
    print(line)


@pytest.mark.parametrize("k", sorted(CHECKS))
def test_criterion(k):
    name, fn = CHECKS[k]
    t0 = time.perf_counter()
    ok, detail = fn()
    seconds = time.perf_counter() - t0
    in_time = seconds < LIMITS[k]
    report(k, name, ok and in_time, detail if in_time else f"{detail} (over time)", seconds, LIMITS[k])
    assert ok, detail
    assert in_time, f"took {seconds:.1f}s, limit {LIMITS[k]}s"


@pytest.mark.long
def test_criterion_11_gr36():
    from tropwall.grassmann import plucker_ideal, plucker_ring
    from tropwall.polycore import parse_polynomial
    from tropwall.reembed import extend
    from tropwall.tropical import tropicalize

    t0 = time.perf_counter()
    I = plucker_ideal(3, 6)
    T = tropicalize(I, budget=10**7)
    mc = T.maximal_cones()
    ok_trop = len(T.lineality) == 6 and T.dim() - 6 == 4 and len(mc) == 1035
    f = parse_polynomial("p126*p345 + p124*p356", plucker_ring(3, 6))
    E = extend(I, [f])
    T1 = tropicalize(E.ideal, budget=10**7)
    ok_new = len(T1.lineality) == 7 and T1.f_vector() == [1, 78, 692, 1790, 1337]
    detail = f"maximal={len(mc)} lineality={len(T.lineality)} new_f_vector={T1.f_vector()} new_lineality={len(T1.lineality)}"
    report(11, "trop Gr(3,6) and its re-embedding", ok_trop and ok_new, detail, time.perf_counter() - t0, "none")
    assert ok_trop and ok_new, detail
