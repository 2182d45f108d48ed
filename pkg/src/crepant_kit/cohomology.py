"""Line-bundle cohomology on P^{n-1} and on X = Tot(O(-d)) over it.

Conventions
-----------
``n`` is always the number of homogeneous coordinates, so the base is P^{n-1}.
On the total space, t_* t^* O(j) = sum_{m >= 0} O(j + m d); ``m`` is called the
fiber degree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .linalg import exact_rank


class ResourceLimitError(RuntimeError):
    """The brute-force window would exceed the configured size."""


@dataclass(frozen=True)
class ProjSpace:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"P^(n-1) needs n >= 1, got {self.n}")

    @property
    def dim(self) -> int:
        return self.n - 1


@dataclass(frozen=True)
class LineBundle:
    twist: int


@dataclass(frozen=True)
class TotalSpaceBundle:
    """t^* O(twist) on Tot(O_{P^{n-1}}(-d))."""

    n: int
    d: int
    twist: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise ValueError("n and d must be positive")


@dataclass(frozen=True)
class CohomologyTable:
    """Entries (i, m) -> dimension, for 0 <= i < n and 0 <= m <= max_fiber_degree."""

    n: int
    max_fiber_degree: int
    entries: dict

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries[key]

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.entries[(i, m)] for m in range(self.max_fiber_degree + 1))

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.n)]

    def as_dict(self) -> dict:
        return {"n": self.n, "max_fiber_degree": self.max_fiber_degree, "rows": self.rows()}


def _n(P) -> int:
    n = P.n if isinstance(P, ProjSpace) else int(P)
    if n < 1:
        raise ValueError(f"P^(n-1) needs n >= 1, got {n}")
    return n


def _k(L) -> int:
    return L.twist if isinstance(L, LineBundle) else int(L)


def binomial_polynomial(x: int, r: int) -> int:
    """C(x, r) as the degree-r polynomial x(x-1)...(x-r+1)/r!, valid for any integer x."""
    num = 1
    for i in range(r):
        num *= x - i
    den = 1
    for i in range(2, r + 1):
        den *= i
    return num // den


def euler_characteristic(P, L) -> int:
    """chi(P^{n-1}, O(k)) = C(k+n-1, n-1) as a polynomial in k."""
    n, k = _n(P), _k(L)
    return binomial_polynomial(k + n - 1, n - 1)


def bott_cohomology(P, L) -> tuple[int, ...]:
    """(h^0, ..., h^{n-1}) of O(k) on P^{n-1}, closed form."""
    n, k = _n(P), _k(L)
    if n == 1:
        return (1,)
    h = [0] * n
    if k >= 0:
        h[0] = comb(k + n - 1, n - 1)
    if k <= -n:
        h[n - 1] = comb(-k - 1, n - 1)
    return tuple(h)


# --- Cech oracle ---------------------------------------------------------

DEFAULT_MAX_WEIGHTS = 2_000_000


@lru_cache(maxsize=None)
def _cech_pieces(n: int, negative: frozenset) -> tuple[int, ...]:
    """Cohomology of the Cech complex restricted to one torus weight.

    A Laurent monomial of weight a is a section over U_I (I = charts where the
    coordinates are inverted) iff every negative exponent sits in I, so the
    cochains in degree p are the (p+1)-subsets I containing ``negative``.  The
    differential is the usual alternating sum of restrictions.
    """
    cochains = [
        [I for I in itertools.combinations(range(n), p + 1) if negative.issubset(I)]
        for p in range(n)
    ]
    ranks = []
    for p in range(n - 1):
        src, tgt = cochains[p], cochains[p + 1]
        if not src or not tgt:
            ranks.append(0)
            continue
        col = {I: c for c, I in enumerate(src)}
        mat = [[0] * len(src) for _ in tgt]
        for r, J in enumerate(tgt):
            for pos in range(len(J)):
                face = J[:pos] + J[pos + 1:]
                c = col.get(face)
                if c is not None:
                    mat[r][c] += (-1) ** pos
        ranks.append(exact_rank(mat))
    dims = []
    for p in range(n):
        rank_out = ranks[p] if p < n - 1 else 0
        rank_in = ranks[p - 1] if p > 0 else 0
        dims.append(len(cochains[p]) - rank_out - rank_in)
    return tuple(dims)


def _weights_with_sum(n: int, total: int, lo: int, hi: int):
    if n == 1:
        if lo <= total <= hi:
            yield (total,)
        return
    for a in range(lo, hi + 1):
        rest = total - a
        if (n - 1) * lo <= rest <= (n - 1) * hi:
            for tail in _weights_with_sum(n - 1, rest, lo, hi):
                yield (a,) + tail


def cech_window(n: int, k: int) -> int:
    """Half-width W of the exponent box [-W, W]^n scanned by the oracle."""
    return abs(k) + n


def cech_cohomology_oracle(P, L, *, window: int | None = None,
                           max_weights: int = DEFAULT_MAX_WEIGHTS) -> tuple[int, ...]:
    """Cech cohomology of O(k) on the standard affine cover of P^{n-1}.

    Every torus weight in the exponent box is visited, the Cech complex in that
    weight is assembled as integer matrices, and exact ranks are summed.
    """
    n, k = _n(P), _k(L)
    W = cech_window(n, k) if window is None else int(window)
    size = (2 * W + 1) ** (n - 1)
    if size > max_weights:
        raise ResourceLimitError(
            f"Cech window for n={n}, k={k} has ~{size} weights (limit {max_weights})"
        )
    total = [0] * n
    for a in _weights_with_sum(n, k, -W, W):
        neg = frozenset(i for i, e in enumerate(a) if e < 0)
        for p, h in enumerate(_cech_pieces(n, neg)):
            total[p] += h
    return tuple(total)


# --- total space ----------------------------------------------------------

def total_space_cohomology(B: TotalSpaceBundle, M: int) -> CohomologyTable:
    """Fiber-graded pieces h^i(P^{n-1}, O(j + m d)) of H^i(X, t^* O(j)), m <= M."""
    if M < 0:
        raise ValueError(f"fiber truncation must be nonnegative, got {M}")
    entries = {}
    for m in range(M + 1):
        h = bott_cohomology(B.n, B.twist + m * B.d)
        for i in range(B.n):
            entries[(i, m)] = h[i]
    return CohomologyTable(B.n, M, entries)


@dataclass(frozen=True)
class VanishingResult:
    """Whether R^i q_* t^* O(twist) vanishes for all i > 0."""

    n: int
    d: int
    twist: int
    vanishes: bool
    witness: tuple[int, int] | None = None  # smallest offending (i, m)

    def __bool__(self) -> bool:
        return self.vanishes

    def as_dict(self) -> dict:
        return {"n": self.n, "d": self.d, "twist": self.twist,
                "vanishes": self.vanishes,
                "witness": None if self.witness is None else list(self.witness)}


def pushforward_vanishing(n: int, d: int, j: int) -> VanishingResult:
    """Exact test of h^{i>0}(O(j + m d)) = 0 for every m >= 0.

    Only h^{n-1} can be nonzero in positive degree, and only for twists <= -n.
    Twists grow with m, so the worst case is m = 0 and the test is j >= 1 - n.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    if n == 1 or j > -n:
        return VanishingResult(n, d, j, True)
    return VanishingResult(n, d, j, False, (n - 1, 0))
