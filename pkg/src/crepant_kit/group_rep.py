"""Diagonal cyclic actions on C^n and their character-level invariant theory.

The generator of Z/d acts on the coordinate x_i by zeta^{w_i}.  A monomial x^a
then transforms by the character with index sum(a_i * w_i) mod d; this is the
sign convention used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import cyclotomic


@dataclass(frozen=True)
class CyclicAction:
    d: int
    weights: tuple[int, ...]

    def __init__(self, d: int, weights: Iterable[int]):
        d = int(d)
        if d < 1:
            raise ValueError(f"group order must be positive, got {d}")
        w = tuple(int(x) % d for x in weights)
        if not w:
            raise ValueError("need at least one coordinate")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "weights", w)

    @classmethod
    def scalar(cls, n: int, d: int) -> "CyclicAction":
        """The generator acts as zeta times the identity on C^n."""
        return cls(d, [1] * n)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def is_scalar(self) -> bool:
        return all(w == 1 % self.d for w in self.weights)

    def characters(self) -> list["Character"]:
        return [Character(j, self.d) for j in range(self.d)]


@dataclass(frozen=True)
class Character:
    index: int
    d: int

    def __init__(self, index: int, d: int):
        if d < 1:
            raise ValueError(f"group order must be positive, got {d}")
        object.__setattr__(self, "d", int(d))
        object.__setattr__(self, "index", int(index) % int(d))

    def __add__(self, other: "Character") -> "Character":
        if other.d != self.d:
            raise ValueError("characters of different groups")
        return Character(self.index + other.index, self.d)

    def __neg__(self) -> "Character":
        return Character(-self.index, self.d)

    @property
    def is_trivial(self) -> bool:
        return self.index == 0

    def __str__(self) -> str:
        return f"chi_{self.index}"


@dataclass(frozen=True)
class HilbertSeries:
    """Truncated graded dimensions c_0..c_N."""

    coefficients: tuple[int, ...]
    truncation: int

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.coefficients) != self.truncation + 1:
            raise ValueError(
                f"{len(self.coefficients)} coefficients for truncation {self.truncation}"
            )
        if any(c < 0 for c in self.coefficients):
            raise ValueError("graded dimensions must be nonnegative")

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def first_mismatch(self, other: "HilbertSeries") -> int | None:
        for k, (a, b) in enumerate(zip(self.coefficients, other.coefficients)):
            if a != b:
                return k
        if len(self) != len(other):
            return min(len(self), len(other))
        return None


def _coerce_character(action: CyclicAction, chi: Character | int) -> Character:
    if isinstance(chi, Character):
        if chi.d != action.d:
            raise ValueError(f"character of Z/{chi.d} used with a Z/{action.d} action")
        return chi
    return Character(chi, action.d)


def _check_truncation(N: int) -> int:
    N = int(N)
    if N < 0:
        raise ValueError(f"truncation must be nonnegative, got {N}")
    return N


def covariant_hilbert(action: CyclicAction, chi: Character | int, N: int) -> HilbertSeries:
    """Count monomials of each degree k <= N lying in the chi-isotypic piece.

    The count is a direct tally, refined by degree and character: variables
    are adjoined one at a time and every exponent of the new variable is
    accounted for (prefix-sum form of the enumeration).
    """
    chi = _coerce_character(action, chi)
    N = _check_truncation(N)
    d = action.d
    # table[k][r] = #monomials of degree k in the variables seen so far, character r
    table = [[0] * d for _ in range(N + 1)]
    table[0][0] = 1
    for w in action.weights:
        new = [[0] * d for _ in range(N + 1)]
        for k in range(N + 1):
            row, prev = new[k], new[k - 1] if k else None
            for r in range(d):
                row[r] = table[k][r] + (prev[(r - w) % d] if prev else 0)
        table = new
    return HilbertSeries(tuple(table[k][chi.index] for k in range(N + 1)), N)


def molien_series(action: CyclicAction, chi: Character | int, N: int) -> HilbertSeries:
    """Isotypic Hilbert series by Molien averaging over the group.

    Computes (1/d) sum_j zeta^{-j chi} prod_i 1/(1 - zeta^{j w_i} t) with every
    coefficient held in Z[zeta] as a group-ring vector, so the result is exact.
    """
    chi = _coerce_character(action, chi)
    N = _check_truncation(N)
    d = action.d
    totals = [[0] * d for _ in range(N + 1)]
    for j in range(d):
        # power series of prod_i 1/(1 - zeta^{j w_i} t), coefficients in Z[zeta]
        series = [[0] * d for _ in range(N + 1)]
        series[0][0] = 1
        for w in action.weights:
            step = (j * w) % d
            for k in range(1, N + 1):
                cyclotomic.add_into(series[k], cyclotomic.shift(series[k - 1], step))
        twist = (-j * chi.index) % d
        for k in range(N + 1):
            cyclotomic.add_into(totals[k], cyclotomic.shift(series[k], twist))
    coeffs = []
    for k in range(N + 1):
        value = cyclotomic.as_rational_integer(totals[k])
        q, r = divmod(value, d)
        if r:
            raise ArithmeticError(f"Molien average not integral at degree {k}: {value}/{d}")
        coeffs.append(q)
    return HilbertSeries(tuple(coeffs), N)


def det_character(action: CyclicAction) -> Character:
    """Character by which the generator acts on the volume form dx_1 ^ ... ^ dx_n."""
    return Character(sum(action.weights), action.d)


def pseudo_reflections(action: CyclicAction) -> list[int]:
    """Group elements g^j (j != 0) that fix a hyperplane pointwise."""
    d = action.d
    out = []
    for j in range(1, d):
        moved = sum(1 for w in action.weights if (j * w) % d)
        if moved == 1:
            out.append(j)
    return out


@dataclass(frozen=True)
class GorensteinCertificate:
    gorenstein: bool
    branch: str
    weight_sum_mod_d: int
    d: int
    n: int
    pseudo_reflections: tuple[int, ...] = field(default_factory=tuple)
    note: str = ""

    def __bool__(self) -> bool:
        return self.gorenstein

    def as_dict(self) -> dict:
        return {
            "gorenstein": self.gorenstein,
            "branch": self.branch,
            "weight_sum_mod_d": self.weight_sum_mod_d,
            "d": self.d,
            "n": self.n,
            "pseudo_reflections": list(self.pseudo_reflections),
            "note": self.note,
        }


def is_gorenstein(action: CyclicAction) -> GorensteinCertificate:
    """Gorenstein test for C^n / (Z/d).

    Scalar actions use d | n.  Other diagonal actions use triviality of the
    determinant character, which is an extrapolation and is labelled as such.
    """
    wsum = sum(action.weights) % action.d
    refl = tuple(pseudo_reflections(action))
    if action.is_scalar:
        ok = action.n % action.d == 0
        branch = "scalar action, d | n test"
        note = ""
    else:
        ok = wsum == 0
        branch = "diagonal action, determinant character test"
        note = "extrapolated: criterion only established for scalar actions"
    if refl:
        note = (note + "; " if note else "") + (
            "group contains pseudo-reflections; determinant test not claimed valid"
        )
    return GorensteinCertificate(ok, branch, wsum, action.d, action.n, refl, note)
