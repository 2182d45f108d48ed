"""Canonical-bundle bookkeeping for the blow-up of C^n/Z_d at the origin.

Everything is expressed through pullbacks t^* O(k) on X = Tot(O_{P^{n-1}}(-d)),
using O_X(E) = t^* O(-d).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .group_rep import CyclicAction, det_character, is_gorenstein


class NonGorensteinError(ValueError):
    """d does not divide n; carries the fractional discrepancy anyway."""

    def __init__(self, message: str, result: "Discrepancy"):
        super().__init__(message)
        self.result = result


def canonical_of_total_space(n: int, d: int) -> int:
    """Twist k with omega_X = t^* O(k).

    omega_X = t^*(omega_{P^{n-1}} (x) L^dual) for L = O(-d), so k = -n + d.
    """
    if n < 2 or d < 1:
        raise ValueError(f"need n >= 2 and d >= 1, got n={n}, d={d}")
    return d - n


@dataclass(frozen=True)
class Discrepancy:
    value: Fraction
    gorenstein: bool
    trace: tuple[str, ...]

    def as_dict(self) -> dict:
        return {"value": str(self.value), "gorenstein": self.gorenstein,
                "trace": list(self.trace)}


def discrepancy(n: int, d: int, *, strict: bool = True) -> Discrepancy:
    """Coefficient a in K_X = q^* K + a E.

    With ``strict`` (default) a non-divisor pair raises NonGorensteinError; the
    computed fraction is attached to the exception.  Pass ``strict=False`` to get
    the flagged value back instead.
    """
    omega = canonical_of_total_space(n, d)
    a = Fraction(omega, -d)
    trace = (
        f"omega_X = t^*O({omega})",
        f"O_X(E) = t^*O({-d})",
        f"t^*O({omega}) = O_X(a E) = t^*O(-a*{d}), so a = ({omega})/({-d}) = {a}",
    )
    result = Discrepancy(a, n % d == 0, trace)
    if strict and not result.gorenstein:
        raise NonGorensteinError(
            f"d={d} does not divide n={n}: discrepancy {a} is fractional, "
            "C^n/Z_d is not Gorenstein", result)
    return result


def weak_crepancy_hypothesis(action: CyclicAction) -> bool:
    """omega_V equivariantly locally trivial, i.e. trivial determinant character."""
    return det_character(action).is_trivial


@dataclass(frozen=True)
class CanonicalReport:
    n: int
    d: int
    omega_total_space_twist: int
    discrepancy: Fraction
    gorenstein: bool
    crepant_blowup: bool
    equivariantly_trivial_canonical: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n, "d": self.d,
            "omega_total_space_twist": self.omega_total_space_twist,
            "discrepancy": str(self.discrepancy),
            "gorenstein": self.gorenstein,
            "crepant_blowup": self.crepant_blowup,
            "equivariantly_trivial_canonical": self.equivariantly_trivial_canonical,
        }


def canonical_report(n: int, d: int) -> CanonicalReport:
    action = CyclicAction.scalar(n, d)
    disc = discrepancy(n, d, strict=False)
    return CanonicalReport(
        n=n, d=d,
        omega_total_space_twist=canonical_of_total_space(n, d),
        discrepancy=disc.value,
        gorenstein=bool(is_gorenstein(action)),
        crepant_blowup=disc.gorenstein and disc.value == 0,
        equivariantly_trivial_canonical=weak_crepancy_hypothesis(action),
    )
