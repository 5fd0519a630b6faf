"""Weights of the coefficients of the cubic F = sum alpha_ijk x^i y^j z^k.

With x, y, z sections of O(1) + aL, O(1) + bL and O(1), the coefficient
alpha_ijk of an anticanonical cubic is a section of c1(B) + wL * L where
wL = (a + b) - i*a - j*b. A coefficient is forced to vanish when minus its
weight, K_B + (-wL) L, is ample, which we only know for -wL >= n0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chow import BaseDivisor, BundlePair
from .surface import BaseSurface

# x^3, x^2y, xy^2, y^3, x^2z, xyz, y^2z, xz^2, yz^2, z^3
MONOMIALS: tuple[tuple[int, int, int], ...] = (
    (3, 0, 0),
    (2, 1, 0),
    (1, 2, 0),
    (0, 3, 0),
    (2, 0, 1),
    (1, 1, 1),
    (0, 2, 1),
    (1, 0, 2),
    (0, 1, 2),
    (0, 0, 3),
)
Z_FREE = MONOMIALS[:4]


class CoefficientStatus(str, enum.Enum):
    CERTIFIED_ZERO = "CertifiedZero"
    POSSIBLY_NONZERO = "PossiblyNonzero"


@dataclass(frozen=True)
class MonomialWeight:
    """Weight c1(B) + wL * L of the coefficient of x^i y^j z^k."""

    i: int
    j: int
    k: int
    wL: int

    @property
    def monomial(self) -> str:
        parts = []
        for var, e in zip("xyz", (self.i, self.j, self.k)):
            if e:
                parts.append(var if e == 1 else f"{var}^{e}")
        return "".join(parts)

    @property
    def divisor(self) -> BaseDivisor:
        return BaseDivisor(l=self.wL, c1=1)

    def __str__(self) -> str:
        if self.wL == 0:
            return "c1(B)"
        sign = "+" if self.wL > 0 else "-"
        mag = abs(self.wL)
        return f"c1(B) {sign} {'' if mag == 1 else mag}L"


def _check_exponents(i: int, j: int, k: int) -> None:
    if min(i, j, k) < 0 or i + j + k != 3:
        raise ValueError(f"({i}, {j}, {k}) is not the exponent vector of a cubic monomial")


def weight(i: int, j: int, k: int, pair: BundlePair | tuple[int, int]) -> MonomialWeight:
    _check_exponents(i, j, k)
    a, b = pair
    return MonomialWeight(i, j, k, (a + b) - i * a - j * b)


def coefficient_status(i: int, j: int, k: int, pair: BundlePair | tuple[int, int], surface: BaseSurface) -> CoefficientStatus:
    w = weight(i, j, k, pair)
    if -w.wL >= surface.n0:
        return CoefficientStatus.CERTIFIED_ZERO
    return CoefficientStatus.POSSIBLY_NONZERO


def weight_table(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> list[tuple[MonomialWeight, CoefficientStatus]]:
    return [(weight(*m, pair), coefficient_status(*m, pair, surface)) for m in MONOMIALS]


def section_margin(pair: BundlePair | tuple[int, int]) -> int:
    """-wL of x^3, i.e. 2a - b."""
    a, b = pair
    return 2 * a - b


def section_guaranteed(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> bool:
    """alpha_300 vanishes, so (1:0:0) is a section of X -> B."""
    return section_margin(pair) >= surface.n0


def reducibility_margin(pair: BundlePair | tuple[int, int]) -> int:
    a, b = pair
    return min(2 * a - b, a, b, 2 * b - a)


def reducibility_certified(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> bool:
    """All z-free coefficients vanish, so F = z * f and X is reducible."""
    return reducibility_margin(pair) >= surface.n0


def weierstrass_discriminant_weight(surface: BaseSurface) -> BaseDivisor:
    """Class of the discriminant 4 alpha_102^3 + 27 alpha_003^2 = 0.

    alpha_102 and alpha_003 are sections of F^4 and F^6, and the
    fundamental line bundle F has c1(F) = c1(B) for a Calabi-Yau total
    space; the discriminant is a section of F^12.
    """
    return BaseDivisor(l=0, c1=12)
