"""Exit criteria for the toolkit.

Every criterion is exact (integer equality); one PASS/FAIL line per criterion is
printed in the pytest terminal summary, or to stdout when this file is run as a
script.
"""

import itertools
import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from crepant_kit.cohomology import bott_cohomology, cech_cohomology_oracle, pushforward_vanishing
from crepant_kit.crepancy import canonical_of_total_space, discrepancy
from crepant_kit.group_rep import CyclicAction, covariant_hilbert, molien_series
from crepant_kit.sod import (ExceptionalCollection, euler_matrix, exceptional_collection_check,
                             kuznetsov_sod_check, validate_pushforward_ext)
from crepant_kit.tilting import hom_hilbert, skew_hom_hilbert

RESULTS: dict[int, tuple[bool, str, float]] = {}
TIME_BUDGET_S = 60.0
SIX_PAIRS = [(2, 2), (4, 2), (3, 3), (6, 3), (4, 4), (6, 2)]
DIVISOR_PAIRS = [(n, d) for n in range(2, 13) for d in range(2, n + 1) if n % d == 0]


def criterion_1():
    compared, bad = 0, []
    for n in (2, 3, 4):
        for k in range(-8, 9):
            closed, cech = bott_cohomology(n, k), cech_cohomology_oracle(n, k)
            compared += len(closed)
            if closed != cech:
                bad.append((n, k, closed, cech))
    ok = not bad and compared == 153
    return ok, f"{compared} cohomology dimensions compared, {len(bad)} mismatches"


def criterion_2():
    compared, bad = 0, []
    for d in range(1, 7):
        for n in range(1, 5):
            for weights in itertools.product(range(d), repeat=n):
                action = CyclicAction(d, weights)
                for chi in action.characters():
                    compared += 1
                    if molien_series(action, chi, 12) != covariant_hilbert(action, chi, 12):
                        bad.append((d, weights, chi.index))
    return not bad, f"{compared} (action, character) series to degree 12, {len(bad)} mismatches"


def criterion_3():
    tested, bad = 0, []
    for n, d in DIVISOR_PAIRS:
        for j in range(1 - d, d):
            tested += 1
            if not pushforward_vanishing(n, d, j):
                bad.append((n, d, j))
    return not bad, f"{tested} (n, d, j) with 2 <= d | n <= 12, |j| <= d-1; {len(bad)} failures"


def criterion_4():
    bad = []
    for n, d in SIX_PAIRS:
        for a in range(d):
            for b in range(d):
                if skew_hom_hilbert(n, d, a, b, 20) != hom_hilbert(n, d, a, b, 20):
                    bad.append((n, d, a, b))
    return not bad, f"six (n, d) pairs, all (a, b), fiber degree <= 20; {len(bad)} mismatches"


def criterion_5():
    bad = []
    for n, d in SIX_PAIRS:
        r = kuznetsov_sod_check(n, d)
        if not (r.passed and n == (n // d - 1) * d + d):
            bad.append((n, d))
        if d == n and not (r.block_count == 0 and r.statement == "T_0 = D^b(X̃)"):
            bad.append((n, d, "crepant case"))
    return not bad, f"semi-orthogonality, T_0-orthogonality and K0 for six pairs; {bad or 'ok'}"


def criterion_6():
    bad = []
    for n, d in DIVISOR_PAIRS:
        a = discrepancy(n, d).value
        blocks = kuznetsov_sod_check(n, d).block_count
        if a != Fraction(n, d) - 1 or a != blocks:
            bad.append((n, d, a, blocks))
        if (a == 0) != (d == n) or (canonical_of_total_space(n, d) == 0) != (d == n):
            bad.append((n, d, "crepant iff d = n"))
    if discrepancy(4, 2).value != 1:
        bad.append((4, 2, "C^4/Z_2"))
    return not bad, f"{len(DIVISOR_PAIRS)} divisor pairs; discrepancy(4, 2) = {discrepancy(4, 2).value}"


def criterion_7():
    bad = []
    for n in range(2, 9):
        C = ExceptionalCollection.beilinson(n)
        E = euler_matrix(C)
        if not (exceptional_collection_check(C) and E.size == n
                and E.is_unit_upper_triangular() and E.determinant() == 1):
            bad.append(n)
    return not bad, f"Beilinson collections on P^1..P^7; failures {bad}"


def criterion_8():
    bad = validate_pushforward_ext(ns=(2, 3), ds=(2, 3), bound=4)
    return not bad, f"{2 * 2 * 81} (n, d, a, b) compared with the Koszul oracle; {len(bad)} mismatches"


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "crepant_kit", *args],
                          capture_output=True, text=True)


def criterion_9():
    args = ("analyze", "--n", "4", "--d", "2", "--max-degree", "10", "--format", "json")
    a, b = _cli(*args), _cli(*args)

    def without_timing(out):
        return "\n".join(l for l in out.splitlines() if not l.lstrip().startswith('"elapsed_ms"'))

    same = a.returncode == b.returncode == 0 and without_timing(a.stdout) == without_timing(b.stdout)
    same = same and "elapsed_ms" in json.loads(a.stdout)
    bad = []
    for n in range(1, 7):
        for d in range(1, 5):
            code = _cli("analyze", "--n", str(n), "--d", str(d), "--max-degree", "3").returncode
            if code != (0 if n % d == 0 else 1):
                bad.append((n, d, code))
    for argv in (("--n", "0", "--d", "2"), ("--n", "2", "--d", "0"), ("--n", "2", "--d", "2",
                                                                      "--weights", "1,2")):
        code = _cli("analyze", *argv, "--max-degree", "3").returncode
        if code != 2:
            bad.append((argv, code))
    return same and not bad, f"byte-identical modulo timing: {same}; exit-code mismatches: {bad}"


CRITERIA = {
    1: ("cohomology oracle equivalence", criterion_1),
    2: ("Molien oracle equivalence", criterion_2),
    3: ("pushforward vanishing sweep", criterion_3),
    4: ("tilting equivalence shadow", criterion_4),
    5: ("SOD structure", criterion_5),
    6: ("crepancy", criterion_6),
    7: ("exceptional collection suite", criterion_7),
    8: ("pushforward Ext vs Koszul oracle", criterion_8),
    9: ("CLI determinism and exit codes", criterion_9),
}


def _run(number):
    name, fn = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    RESULTS[number] = (ok, f"{name}: {detail}", time.perf_counter() - start)
    return ok, detail


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = _run(number)
    assert ok, detail


def test_time_budget():
    if len(RESULTS) != len(CRITERIA):
        pytest.skip("budget is only meaningful after every criterion ran")
    total = sum(t for _, _, t in RESULTS.values())
    assert total < TIME_BUDGET_S, f"{total:.1f}s"


def summary_lines():
    lines = []
    for number in sorted(RESULTS):
        ok, text, seconds = RESULTS[number]
        lines.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number} ({seconds:.2f}s) {text}")
    if RESULTS:
        lines.append(f"total {sum(t for _, _, t in RESULTS.values()):.2f}s "
                     f"(budget {TIME_BUDGET_S:.0f}s)")
    return lines


if __name__ == "__main__":
    for number in sorted(CRITERIA):
        _run(number)
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _, _ in RESULTS.values()) else 1)
