"""Exact arithmetic with d-th roots of unity.

Elements of Z[zeta_d] are handled as integer vectors over 1, zeta, ..., zeta^(d-1),
i.e. as elements of the group ring Z[x]/(x^d - 1).  Multiplying by a power of
zeta is a cyclic shift.  To read off the value at a *primitive* root, reduce
modulo the cyclotomic polynomial Phi_d.
"""

from __future__ import annotations

from functools import lru_cache


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # Coefficient lists are low-degree first; den must be monic.
    num = list(num)
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    dd = len(den) - 1
    quot = [0] * max(len(num) - dd, 1)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    rem = num[:dd] if dd else []
    return quot, rem


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_d, lowest degree first.

    Built from x^d - 1 = prod_{e | d} Phi_e by exact division.
    """
    if d < 1:
        raise ValueError("d must be positive")
    poly = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(e)))
            if any(rem):
                raise ArithmeticError("inexact cyclotomic division")
    return tuple(_trim(poly))


def shift(vec: list[int], k: int) -> list[int]:
    """Multiply a group-ring element by zeta^k."""
    d = len(vec)
    k %= d
    if k == 0:
        return list(vec)
    return vec[-k:] + vec[:-k]


def add_into(acc: list[int], vec: list[int]) -> None:
    for i, v in enumerate(vec):
        acc[i] += v


def reduce_primitive(vec: list[int]) -> list[int]:
    """Canonical form in Z[zeta] for zeta a primitive d-th root of unity.

    Returns the remainder modulo Phi_d, of length deg Phi_d = phi(d).
    """
    d = len(vec)
    phi = list(cyclotomic_polynomial(d))
    _, rem = _poly_divmod(list(vec), phi)
    return rem if rem else [0]


def as_rational_integer(vec: list[int]) -> int:
    """Value of a group-ring element at a primitive root, which must be in Z."""
    rem = reduce_primitive(vec)
    if any(rem[1:]):
        raise ArithmeticError(f"element {vec} is not a rational integer in Z[zeta_{len(vec)}]")
    return rem[0]
