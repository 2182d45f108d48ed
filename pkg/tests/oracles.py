"""Brute-force reference computations, kept independent of the package code."""

import itertools
from math import comb


def monomials(n, k):
    """All exponent vectors of total degree k in n variables."""
    for cut in itertools.combinations(range(k + n - 1), n - 1):
        prev, exps = -1, []
        for c in cut + (k + n - 1,):
            exps.append(c - prev - 1)
            prev = c
        yield tuple(exps)


def enumerate_covariants(d, weights, chi, N):
    n = len(weights)
    return tuple(
        sum(1 for a in monomials(n, k) if sum(x * w for x, w in zip(a, weights)) % d == chi % d)
        for k in range(N + 1)
    )


def h0(n, k):
    """Global sections of O(k) on P^{n-1}: monomials of degree k."""
    return 0 if k < 0 else sum(1 for _ in monomials(n, k))


def binom_poly(x, r):
    # C(x, r) through the symmetric-function identity C(x, r) = (-1)^r C(r - x - 1, r)
    if x >= 0:
        return comb(x, r)
    return (-1) ** r * comb(r - x - 1, r)
