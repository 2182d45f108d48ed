"""Command-line front end: ``crepant-kit analyze`` and ``crepant-kit molien``.

Exit codes: 0 every check passed, 1 some check failed or the Gorenstein
hypothesis is violated, 2 usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import __version__
from .cohomology import pushforward_vanishing
from .crepancy import canonical_of_total_space, discrepancy
from .group_rep import CyclicAction, covariant_hilbert, is_gorenstein, molien_series
from .sod import kuznetsov_sod_check
from .tilting import descent_line_bundles, tilting_check

SCHEMA = "crepant-kit.report/1"
PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"


class UsageError(ValueError):
    pass


@dataclass
class Check:
    name: str
    status: str
    summary: str
    data: dict = field(default_factory=dict)
    witness: object = None

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status,
               "data": {"summary": self.summary, **self.data}}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class InstanceReport:
    command: str
    input: dict
    checks: list
    verdict: str
    elapsed_ms: float = 0.0
    version: str = __version__

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict == "pass" else 1

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": self.command,
            "input": self.input,
            "checks": [c.as_dict() for c in self.checks],
            "verdict": self.verdict,
            "version": self.version,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self, *, include_timing: bool = True) -> str:
        data = self.as_dict()
        if not include_timing:
            data.pop("elapsed_ms")
        return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def to_text(self, *, color: bool = False) -> str:
        colors = {PASS: "\x1b[32m", FAIL: "\x1b[31m", SKIP: "\x1b[33m"}
        head = ", ".join(f"{k}={v}" for k, v in self.input.items())
        lines = [f"crepant-kit {self.version}  {self.command}  {head}", "",
                 f"{'CHECK':<22}{'STATUS':<8}DETAIL", "-" * 72]
        for c in self.checks:
            status = f"{c.status:<8}"
            if color:
                status = f"{colors[c.status]}{c.status}\x1b[0m" + " " * (8 - len(c.status))
            lines.append(f"{c.name:<22}{status}{c.summary}")
        lines += ["-" * 72, f"verdict: {self.verdict}   ({self.elapsed_ms:.1f} ms)", ""]
        return "\n".join(lines)


def _threads() -> int:
    raw = os.environ.get("CREPANT_KIT_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise UsageError(f"CREPANT_KIT_THREADS must be an integer, got {raw!r}")
    return os.cpu_count() or 1


def _run_all(jobs: list[Callable[[], Check]]) -> list[Check]:
    # Results come back in submission order, so the report is deterministic.
    with ThreadPoolExecutor(max_workers=min(_threads(), len(jobs))) as pool:
        return list(pool.map(lambda f: f(), jobs))


# --- analyze ---------------------------------------------------------------

def _check_gorenstein(action: CyclicAction) -> Check:
    cert = is_gorenstein(action)
    verdict = "Gorenstein" if cert else "not Gorenstein"
    summary = f"{verdict} ({cert.branch}); sum of weights = {cert.weight_sum_mod_d} mod {cert.d}"
    return Check("gorenstein", PASS if cert else FAIL, summary, cert.as_dict())


def _check_canonical(n: int, d: int) -> Check:
    if n < 2:
        return Check("canonical_bundle", SKIP, "n = 1: the quotient is a smooth curve, no E")
    twist = canonical_of_total_space(n, d)
    disc = discrepancy(n, d, strict=False)
    ok = twist == -d * disc.value and (twist == 0) == (d == n)
    return Check("canonical_bundle", PASS if ok else FAIL,
                 f"omega = t^*O({twist}); trivial iff d = n",
                 {"omega_total_space_twist": twist, "trivial": twist == 0})


def _check_discrepancy(n: int, d: int, gorenstein: bool) -> Check:
    if n < 2:
        return Check("discrepancy", SKIP, "n = 1: no exceptional divisor")
    disc = discrepancy(n, d, strict=False)
    data = {**disc.as_dict(), "crepant": disc.gorenstein and disc.value == 0}
    if not gorenstein:
        return Check("discrepancy", FAIL,
                     f"a = {disc.value} (fractional, non-Gorenstein)", data)
    blocks = kuznetsov_sod_check(n, d).block_count
    ok = disc.value == n // d - 1 == blocks
    data["sod_blocks"] = blocks
    verb = "crepant blow-up" if disc.value == 0 else "not crepant"
    return Check("discrepancy", PASS if ok else FAIL,
                 f"a = {disc.value} = n/d - 1 = #SOD blocks; {verb}", data)


def _skipped(name: str, n: int, d: int) -> Check:
    return Check(name, SKIP, f"requires d | n (d={d}, n={n})",
                 {"reason": "hypothesis-violated: d does not divide n"})


def _check_descent(n: int, d: int) -> Check:
    data = descent_line_bundles(n, d)
    twists = sorted(x.image_twist for x in data)
    ok = twists == list(range(1 - d, 1))
    return Check("descent", PASS if ok else FAIL,
                 "chi_j -> t^*O(-j), twists " + ", ".join(map(str, sorted(twists, reverse=True))),
                 {"data": [x.as_dict() for x in data]})


def _check_tilting(n: int, d: int, M: int) -> Check:
    rep = tilting_check(n, d, M)
    parts = [f"Ext>0 {'vanish' if rep.ext_vanishing else 'NONZERO'}",
             f"Hilbert {'match' if rep.hilbert_match else 'MISMATCH'} to fiber degree {M}",
             f"K0 {rep.summands}/{rep.k0_rank}"]
    witness = rep.hilbert_mismatch or (rep.ext_failures[0] if rep.ext_failures else None)
    return Check("tilting", PASS if rep else FAIL, "; ".join(parts), rep.as_dict(), witness)


def _check_sod(n: int, d: int) -> Check:
    rep = kuznetsov_sod_check(n, d)
    summary = f"{rep.statement}; K0: {rep.k0['identity']}"
    witness = rep.semiorthogonality_witness or rep.t0_witness
    return Check("sod", PASS if rep else FAIL, summary, rep.as_dict(), witness)


def _check_vanishing(n: int, d: int) -> Check:
    results = []
    for j in range(1 - d, d):
        # both sign conventions for the twist; the range is symmetric
        for twist in (j, -j):
            results.append(pushforward_vanishing(n, d, twist))
    failures = [r.as_dict() for r in results if not r]
    summary = f"R^i q_* t^*O(j) = 0 for i > 0, |j| <= {d - 1}"
    if failures:
        summary = f"{len(failures)} twist(s) with higher direct images"
    return Check("pushforward_vanishing", FAIL if failures else PASS, summary,
                 {"twists": list(range(1 - d, d))}, failures[0] if failures else None)


def _check_invariants(action: CyclicAction, N: int) -> Check:
    mismatches = []
    for chi in action.characters():
        a, b = covariant_hilbert(action, chi, N), molien_series(action, chi, N)
        if a != b:
            mismatches.append({"character": chi.index, "degree": a.first_mismatch(b)})
    return Check("molien_agreement", FAIL if mismatches else PASS,
                 f"monomial count = Molien average for {action.d} character(s), degree <= {N}",
                 {}, mismatches[0] if mismatches else None)


def _parse_weights(raw: str | None) -> list[int] | None:
    if raw is None:
        return None
    try:
        return [int(x) for x in raw.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--weights must be comma-separated integers, got {raw!r}")


def analyze(n: int, d: int, max_degree: int, weights: list[int] | None = None) -> InstanceReport:
    if n < 1 or d < 1 or max_degree < 0:
        raise UsageError("need n >= 1, d >= 1, max_degree >= 0")
    if weights is not None:
        if len(weights) != n:
            raise UsageError(f"{len(weights)} weights given for n={n}")
        if not CyclicAction(d, weights).is_scalar:
            raise UsageError("analyze handles the scalar action only (all weights 1 mod d)")
    start = time.perf_counter()
    action = CyclicAction.scalar(n, d)
    gorenstein = n % d == 0
    jobs: list[Callable[[], Check]] = [
        lambda: _check_gorenstein(action),
        lambda: _check_canonical(n, d),
        lambda: _check_discrepancy(n, d, gorenstein),
    ]
    if gorenstein:
        jobs += [lambda: _check_descent(n, d),
                 lambda: _check_tilting(n, d, max_degree),
                 lambda: _check_sod(n, d)]
    else:
        jobs += [lambda: _skipped("descent", n, d),
                 lambda: _skipped("tilting", n, d),
                 lambda: _skipped("sod", n, d)]
    jobs += [lambda: _check_vanishing(n, d),
             lambda: _check_invariants(action, max_degree)]
    checks = _run_all(jobs)
    if not gorenstein:
        verdict = "hypothesis-violated"
    elif all(c.status in (PASS, SKIP) for c in checks):
        verdict = "pass"
    else:
        verdict = "fail"
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return InstanceReport("analyze", {"n": n, "d": d, "weights": [1 % d] * n,
                                      "max_degree": max_degree},
                          checks, verdict, elapsed)


def molien(d: int, weights: list[int], max_degree: int) -> InstanceReport:
    if d < 1 or max_degree < 0 or not weights:
        raise UsageError("need d >= 1, max_degree >= 0 and at least one weight")
    start = time.perf_counter()
    action = CyclicAction(d, weights)
    checks = []
    for chi in action.characters():
        cov = covariant_hilbert(action, chi, max_degree)
        mol = molien_series(action, chi, max_degree)
        k = cov.first_mismatch(mol)
        checks.append(Check(
            f"series[{chi}]", PASS if k is None else FAIL,
            "(" + ",".join(map(str, cov.coefficients)) + ")",
            {"character": chi.index, "coefficients": list(cov.coefficients),
             "molien": list(mol.coefficients), "agreement": k is None},
            None if k is None else {"degree": k, "count": cov[k], "molien": mol[k]}))
    cert = is_gorenstein(action)
    # the certificate is informational here: a non-Gorenstein action is not a failure
    checks.append(Check("gorenstein", PASS,
                        f"{'Gorenstein' if cert else 'not Gorenstein'}: {cert.branch}; "
                        f"sum w = {sum(action.weights)} = {cert.weight_sum_mod_d} mod {d}",
                        cert.as_dict()))
    verdict = "pass" if all(c.status == PASS for c in checks) else "fail"
    elapsed = round((time.perf_counter() - start) * 1000, 3)
    return InstanceReport("molien", {"d": d, "weights": list(action.weights),
                                     "max_degree": max_degree}, checks, verdict, elapsed)


# --- argument handling -----------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crepant-kit",
                                description="Exact checks for C^n/Z_d and its blow-up.")
    p.add_argument("--version", action="version", version=f"crepant-kit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--max-degree", type=int, required=True)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--output", help="write the report here instead of stdout")
        sp.add_argument("--color", action="store_true", help="ANSI colors in text output")

    a = sub.add_parser("analyze", help="full verification suite for the scalar action")
    a.add_argument("--n", type=int, required=True)
    a.add_argument("--d", type=int, required=True)
    a.add_argument("--weights", help="w1,w2,...; must describe the scalar action")
    common(a)

    m = sub.add_parser("molien", help="isotypic Hilbert series of a diagonal action")
    m.add_argument("--d", type=int, required=True)
    m.add_argument("--weights", help="w1,w2,...")
    m.add_argument("--n", type=int, help="scalar action on C^n when --weights is omitted")
    common(m)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        weights = _parse_weights(args.weights)
        if args.command == "analyze":
            report = analyze(args.n, args.d, args.max_degree, weights)
        else:
            if weights is None:
                if args.n is None:
                    raise UsageError("molien needs --weights or --n")
                weights = [1] * args.n
            elif args.n is not None and args.n != len(weights):
                raise UsageError(f"--n={args.n} disagrees with {len(weights)} weights")
            report = molien(args.d, weights, args.max_degree)
    except (UsageError, ValueError) as exc:
        print(f"crepant-kit: error: {exc}", file=sys.stderr)
        return 2
    text = report.to_json() if args.format == "json" else report.to_text(color=args.color)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
