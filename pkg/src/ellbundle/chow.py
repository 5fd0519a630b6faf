"""Exact intersection arithmetic on Z = P(L^a + L^b + O_B) over a surface B.

A class on Z is written on the basis 1, xi, xi^2 with coefficients pulled
back from B. Base classes are kept in collapsed form:

* codimension 0: a rational multiple of the fundamental class ``"1"``;
* codimension 1: a combination of ``"L"`` and ``"c1"`` (c1 = c1(B));
* codimension 2: a rational multiple of the point class ``"pt"``, i.e. the
  degree on B.

Products of two base divisors are collapsed through the intersection
matrix [[L^2, c1.L], [c1.L, c1^2]] and c2(B) enters as ``c2 * pt``. Powers
xi^3 and higher are eliminated with the Grothendieck relation

    xi^3 = -(a + b) L xi^2 - ab L^2 xi,

which holds because c3(L^a + L^b + O) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union

from .surface import BaseSurface

Scalar = Union[int, Fraction]

BASE_CODIM = {"1": 0, "L": 1, "c1": 1, "pt": 2}
_BASIS_ORDER = {"1": 0, "L": 1, "c1": 2, "pt": 3}
MAX_CODIM = 4


class DefectError(RuntimeError):
    """Two independent computations that must agree did not."""


class BundlePair(NamedTuple):
    """Exponents of E = L^a + L^b + O_B."""

    a: int
    b: int

    @property
    def is_normalized(self) -> bool:
        return self.a >= self.b >= 0

    @classmethod
    def normalize(cls, alpha: int, beta: int) -> BundlePair:
        """Twist L^alpha + L^beta + O by L^-min and reorder so that a >= b >= 0.

        Both bundles have the same projectivization.
        """
        low = min(alpha, beta, 0)
        a, b, c = sorted((alpha - low, beta - low, -low), reverse=True)
        # exactly one of the shifted exponents is 0
        assert c == 0
        return cls(a, b)


@dataclass(frozen=True)
class BaseDivisor:
    """A divisor class l*L + c*c1(B) on the base."""

    l: Fraction
    c1: Fraction

    def __init__(self, l: Scalar = 0, c1: Scalar = 0):
        object.__setattr__(self, "l", Fraction(l))
        object.__setattr__(self, "c1", Fraction(c1))

    def __add__(self, other: BaseDivisor) -> BaseDivisor:
        return BaseDivisor(self.l + other.l, self.c1 + other.c1)

    def __neg__(self) -> BaseDivisor:
        return BaseDivisor(-self.l, -self.c1)

    def __sub__(self, other: BaseDivisor) -> BaseDivisor:
        return self + (-other)

    def __rmul__(self, k: Scalar) -> BaseDivisor:
        return BaseDivisor(k * self.l, k * self.c1)

    def dot(self, other: BaseDivisor, surface: BaseSurface) -> Fraction:
        s = surface
        return (
            self.l * other.l * s.L2
            + (self.l * other.c1 + self.c1 * other.l) * s.c1L
            + self.c1 * other.c1 * s.c1sq
        )

    def self_intersection(self, surface: BaseSurface) -> Fraction:
        return self.dot(self, surface)

    def degree(self, surface: BaseSurface) -> Fraction:
        """Degree against the polarization L."""
        return self.dot(BaseDivisor(1, 0), surface)

    def __str__(self) -> str:
        return _format_linear([(self.l, "L"), (self.c1, "c1(B)")])


Key = tuple[int, str]


@dataclass(frozen=True)
class ChowClass:
    """A class of pure codimension on Z, on the basis xi^k * (base class).

    ``terms`` holds ((k, basis), coefficient) with k in 0..2, sorted and
    without zero coefficients, so equality is structural.
    """

    codim: int
    terms: tuple[tuple[Key, Fraction], ...] = ()

    @classmethod
    def build(cls, codim: int, coeffs: Mapping[Key, Scalar] | Iterable[tuple[Key, Scalar]]) -> ChowClass:
        if not 0 <= codim <= MAX_CODIM:
            raise ValueError(f"codimension {codim} outside 0..{MAX_CODIM}")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Key, Fraction] = {}
        for (k, basis), value in items:
            if basis not in BASE_CODIM:
                raise ValueError(f"unknown base class {basis!r}")
            if not 0 <= k <= 2:
                raise ValueError(f"xi^{k} is not reduced; build classes through ChowRing")
            if k + BASE_CODIM[basis] != codim:
                raise ValueError(f"term xi^{k}*{basis} has codim {k + BASE_CODIM[basis]}, expected {codim}")
            value = value if type(value) is Fraction else Fraction(value)
            prev = acc.get((k, basis))
            acc[(k, basis)] = value if prev is None else prev + value
        terms = tuple(
            sorted(((key, v) for key, v in acc.items() if v != 0), key=lambda kv: (-kv[0][0], _BASIS_ORDER[kv[0][1]]))
        )
        return cls(codim, terms)

    # named constructors
    @classmethod
    def zero(cls, codim: int) -> ChowClass:
        return cls.build(codim, {})

    @classmethod
    def one(cls) -> ChowClass:
        return cls.build(0, {(0, "1"): 1})

    @classmethod
    def xi(cls, power: int = 1) -> ChowClass:
        return cls.build(power, {(power, "1"): 1})

    @classmethod
    def divisor(cls, l: Scalar = 0, c1: Scalar = 0, xi_power: int = 0) -> ChowClass:
        """(l L + c1 c1(B)) * xi^xi_power."""
        return cls.build(xi_power + 1, {(xi_power, "L"): l, (xi_power, "c1"): c1})

    @classmethod
    def point(cls, degree: Scalar, xi_power: int = 0) -> ChowClass:
        """A base codimension-2 class of the given degree, times xi^xi_power."""
        return cls.build(xi_power + 2, {(xi_power, "pt"): degree})

    def as_dict(self) -> dict[Key, Fraction]:
        return dict(self.terms)

    def coefficient(self, xi_power: int) -> Fraction | BaseDivisor | None:
        """Coefficient of xi^xi_power: a scalar (base codim 0 or 2), a BaseDivisor, or None."""
        base_codim = self.codim - xi_power
        if not 0 <= xi_power <= 2 or not 0 <= base_codim <= 2:
            return None
        d = self.as_dict()
        if base_codim == 1:
            return BaseDivisor(d.get((xi_power, "L"), 0), d.get((xi_power, "c1"), 0))
        basis = "1" if base_codim == 0 else "pt"
        return d.get((xi_power, basis), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same_codim(self, other: ChowClass) -> None:
        if self.codim != other.codim:
            raise ValueError(f"cannot add classes of codim {self.codim} and {other.codim}")

    def __add__(self, other: ChowClass) -> ChowClass:
        if not isinstance(other, ChowClass):
            return NotImplemented
        self._check_same_codim(other)
        return ChowClass.build(self.codim, list(self.terms) + list(other.terms))

    def __neg__(self) -> ChowClass:
        return ChowClass.build(self.codim, [(k, -v) for k, v in self.terms])

    def __sub__(self, other: ChowClass) -> ChowClass:
        return self + (-other)

    def __mul__(self, k: Scalar) -> ChowClass:
        if isinstance(k, ChowClass):
            raise TypeError("products of classes depend on (a, b) and B; use ChowRing.mul or mul()")
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        return ChowClass.build(self.codim, [(key, k * v) for key, v in self.terms])

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (k, basis), v in self.terms:
            xi = "" if k == 0 else "xi" if k == 1 else f"xi^{k}"
            base = {"1": "", "L": "L", "c1": "c1(B)", "pt": "pt"}[basis]
            parts.append((v, "*".join(p for p in (base, xi) if p) or "1"))
        return _format_linear(parts)


def _format_linear(parts: list[tuple[Fraction, str]]) -> str:
    out = ""
    for v, sym in parts:
        if v == 0:
            continue
        mag = abs(v)
        if sym == "1":
            body = str(mag)
        else:
            body = sym if mag == 1 else f"{mag}*{sym}"
        if out:
            out += f" {'-' if v < 0 else '+'} {body}"
        else:
            out = f"-{body}" if v < 0 else body
    return out or "0"


class ChowRing:
    """Multiplication and degree in A*(Z) for fixed (a, b) and (B, L)."""

    def __init__(self, pair: BundlePair | tuple[int, int], surface: BaseSurface):
        self.pair = BundlePair(*pair)
        self.surface = surface
        s = surface
        # base divisor products collapse to multiples of the point class
        self._div_product = {
            ("L", "L"): Fraction(s.L2),
            ("L", "c1"): Fraction(s.c1L),
            ("c1", "L"): Fraction(s.c1L),
            ("c1", "c1"): Fraction(s.c1sq),
        }

    def _base_mul(self, x: str, y: str) -> tuple[str, Fraction] | None:
        if x == "1":
            return y, Fraction(1)
        if y == "1":
            return x, Fraction(1)
        if x == "pt" or y == "pt":
            return None
        return "pt", self._div_product[(x, y)]

    def _reduce(self, k: int, basis: str, coeff: Fraction, out: dict[Key, Fraction]) -> None:
        """Accumulate coeff * xi^k * basis into ``out`` with xi-powers at most 2."""
        if k <= 2:
            out[(k, basis)] = out.get((k, basis), Fraction(0)) + coeff
            return
        a, b = self.pair
        # xi^k B = xi^(k-1) * (-(a+b) L B)  +  xi^(k-2) * (-ab L^2 B)
        lb = self._base_mul("L", basis)
        if lb is not None and a + b != 0:
            self._reduce(k - 1, lb[0], -(a + b) * lb[1] * coeff, out)
        # L^2 * B survives only for B = 1
        if basis == "1" and a * b != 0:
            self._reduce(k - 2, "pt", -a * b * self.surface.L2 * coeff, out)

    def mul(self, *factors: ChowClass) -> ChowClass:
        if not factors:
            return ChowClass.one()
        result = factors[0]
        for f in factors[1:]:
            result = self._mul2(result, f)
        return result

    def _mul2(self, x: ChowClass, y: ChowClass) -> ChowClass:
        codim = x.codim + y.codim
        if codim > MAX_CODIM:
            raise ValueError(f"product has codimension {codim} > {MAX_CODIM}")
        out: dict[Key, Fraction] = {}
        for (k1, b1), v1 in x.terms:
            for (k2, b2), v2 in y.terms:
                prod = self._base_mul(b1, b2)
                if prod is None:
                    continue
                basis, factor = prod
                self._reduce(k1 + k2, basis, v1 * v2 * factor, out)
        return ChowClass.build(codim, out)

    def power(self, x: ChowClass, n: int) -> ChowClass:
        return self.mul(*([x] * n)) if n > 0 else ChowClass.one()

    def degree(self, x: ChowClass) -> Fraction:
        return degree(x)

    # frequently used classes
    def xi(self) -> ChowClass:
        return ChowClass.xi()

    def c1_ambient(self) -> ChowClass:
        a, b = self.pair
        return ChowClass.xi() * 3 + ChowClass.divisor(l=a + b, c1=1)


def mul(x: ChowClass, y: ChowClass, pair: BundlePair | tuple[int, int], surface: BaseSurface) -> ChowClass:
    """Product of two classes in the Chow ring of Z, fully reduced."""
    return ChowRing(pair, surface).mul(x, y)


def degree(x: ChowClass, surface: BaseSurface | None = None) -> Fraction:
    """Degree of a codimension-4 class.

    The push-forward to B kills every term except xi^2 * beta, which goes
    to beta; base degrees are already collapsed into the ``pt``
    coefficient, so ``surface`` is accepted only for call-site symmetry.
    """
    if x.codim != MAX_CODIM:
        raise ValueError(f"degree needs a codimension-4 class, got codimension {x.codim}")
    return x.as_dict().get((2, "pt"), Fraction(0))


def pushforward(x: ChowClass) -> Fraction | BaseDivisor:
    """p_* to B: xi^2 beta -> beta, lower xi-powers -> 0."""
    if x.codim < 2:
        return Fraction(0)
    base = x.coefficient(2)
    return base if base is not None else Fraction(0)


# -- total classes -------------------------------------------------------

Total = tuple[ChowClass, ...]


def total(*parts: ChowClass) -> Total:
    """Assemble a mixed-degree class, indexed by codimension 0..4."""
    slots = [ChowClass.zero(c) for c in range(MAX_CODIM + 1)]
    for p in parts:
        slots[p.codim] = slots[p.codim] + p
    return tuple(slots)


def total_mul(ring: ChowRing, x: Total, y: Total) -> Total:
    slots = [ChowClass.zero(c) for c in range(MAX_CODIM + 1)]
    for i, xi_ in enumerate(x):
        if xi_.is_zero():
            continue
        for j, yj in enumerate(y):
            if i + j > MAX_CODIM or yj.is_zero():
                continue
            slots[i + j] = slots[i + j] + ring.mul(xi_, yj)
    return tuple(slots)


def relative_tangent_total(ring: ChowRing) -> Total:
    """c(T_{Z|B}) = (1 + xi + aL)(1 + xi + bL)(1 + xi) from the Euler sequence."""
    a, b = ring.pair
    one, xi = ChowClass.one(), ChowClass.xi()
    factors = [
        total(one, xi + ChowClass.divisor(l=a)),
        total(one, xi + ChowClass.divisor(l=b)),
        total(one, xi),
    ]
    out = factors[0]
    for f in factors[1:]:
        out = total_mul(ring, out, f)
    return out


@lru_cache(maxsize=4096)
def chern_ambient(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> tuple[ChowClass, ChowClass, ChowClass, ChowClass]:
    """c1..c4 of Z, expanded from c(T_{Z|B}) * p^* c(B) in the ring."""
    ring = ChowRing(pair, surface)
    base = total(ChowClass.one(), ChowClass.divisor(c1=1), ChowClass.point(surface.c2))
    c = total_mul(ring, relative_tangent_total(ring), base)
    return c[1], c[2], c[3], c[4]


def chern_ambient_closed_form(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> tuple[ChowClass, ChowClass, ChowClass, ChowClass]:
    """The four Chern classes of Z written out term by term."""
    a, b = pair
    s = surface
    X, D, P = ChowClass.xi, ChowClass.divisor, ChowClass.point
    c1 = D(c1=1) + D(l=a + b) + 3 * X()
    c2 = (
        P(a * b * s.L2)
        + P((a + b) * s.c1L)
        + D(l=2 * (a + b), xi_power=1)
        + D(c1=3, xi_power=1)
        + P(s.c2)
        + 3 * X(2)
    )
    c3 = P(2 * (a + b) * s.c1L, xi_power=1) + D(c1=3, xi_power=2) + P(3 * s.c2, xi_power=1)
    c4 = P(3 * s.c2, xi_power=2)
    return c1, c2, c3, c4


@lru_cache(maxsize=4096)
def chern_cy(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> tuple[ChowClass, ChowClass]:
    """Ambient representatives (psi2, psi3) of c2(X), c3(X) for X in |-K_Z|.

    c(X) = i^*(c(Z) / (1 + c1(Z))); the quotient is expanded as a truncated
    geometric series. The codimension-1 part vanishes identically.
    """
    ring = ChowRing(pair, surface)
    c1, c2, c3, c4 = chern_ambient(pair, surface)
    cz = total(ChowClass.one(), c1, c2, c3, c4)
    inv = [ChowClass.one()]
    for n in range(1, MAX_CODIM + 1):
        inv.append(ring.mul(inv[-1], -c1))
    quotient = total_mul(ring, cz, total(*inv))
    if not quotient[1].is_zero():
        raise DefectError(f"c1(X) should vanish, got {quotient[1]}")
    return quotient[2], quotient[3]


def chern_cy_closed_form(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> tuple[ChowClass, ChowClass]:
    a, b = pair
    s = surface
    X, D, P = ChowClass.xi, ChowClass.divisor, ChowClass.point
    psi2 = 3 * X(2) + D(l=2 * (a + b), c1=3, xi_power=1) + P((a + b) * s.c1L + a * b * s.L2 + s.c2)
    psi3 = D(c1=-9, xi_power=2) - P(
        2 * (a * a - a * b + b * b) * s.L2 + 6 * (a + b) * s.c1L + 3 * s.c1sq, xi_power=1
    )
    return psi2, psi3


def euler_closed_form(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> int:
    a, b = pair
    return -6 * (a * a - a * b + b * b) * surface.L2 - 18 * surface.c1sq


def euler_characteristic(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> int:
    """chi_top of a smooth anticanonical X, checked against deg(psi3 * c1(Z))."""
    value = euler_closed_form(pair, surface)
    ring = ChowRing(pair, surface)
    _, psi3 = chern_cy(pair, surface)
    via_ring = degree(ring.mul(psi3, ring.c1_ambient()))
    if via_ring != value:
        raise DefectError(f"chi_top mismatch for {tuple(pair)}: closed form {value}, ring {via_ring}")
    return value


def section_class(pair: BundlePair | tuple[int, int]) -> ChowClass:
    """Class in Z of the section {y = z = 0}: (xi + bL) * xi."""
    _, b = pair
    return ChowClass.xi(2) + ChowClass.divisor(l=b, xi_power=1)


def conic_residual_closed_form(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> int:
    """a(a - b)L^2 + (b - 2a)c1.L + c1^2."""
    a, b = pair
    s = surface
    return a * (a - b) * s.L2 + (b - 2 * a) * s.c1L + s.c1sq


def friedman_residual(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> int:
    """c2(X).[S] - (chi_top(S) - K_S^2) for the section S = {y = z = 0}.

    Zero is necessary for a smooth Calabi-Yau X containing S. Evaluated both
    through the ring and through the closed quadratic; a mismatch raises
    DefectError.
    """
    ring = ChowRing(pair, surface)
    psi2, _ = chern_cy(pair, surface)
    via_ring = degree(ring.mul(psi2, section_class(pair))) - (surface.c2 - surface.c1sq)
    closed = conic_residual_closed_form(pair, surface)
    if via_ring != closed:
        raise DefectError(f"residual mismatch for {tuple(pair)}: ring {via_ring}, closed form {closed}")
    return closed


def restrict_to_section(x: ChowClass, pair: BundlePair | tuple[int, int], surface: BaseSurface) -> Fraction | BaseDivisor:
    """Pull a class of codim <= 2 back to S = {y = z = 0}, identified with B.

    On S the coordinate x is nowhere zero, so (xi + aL)|_S = 0.
    """
    a, _ = pair
    if x.codim > 2:
        raise ValueError("S is a surface; classes above codimension 2 restrict to 0")
    if x.codim == 1:
        out = BaseDivisor()
        for (k, basis), v in x.terms:
            if k == 1:
                out = out + v * BaseDivisor(l=-a)
            else:
                out = out + v * (BaseDivisor(l=1) if basis == "L" else BaseDivisor(c1=1))
        return out
    if x.codim == 0:
        return x.as_dict().get((0, "1"), Fraction(0))
    total_deg = Fraction(0)
    minus_aL = BaseDivisor(l=-a)
    for (k, basis), v in x.terms:
        if k == 2:
            total_deg += v * minus_aL.self_intersection(surface)
        elif k == 1:
            div = BaseDivisor(l=1) if basis == "L" else BaseDivisor(c1=1)
            total_deg += v * minus_aL.dot(div, surface)
        else:
            total_deg += v
    return total_deg


@dataclass(frozen=True)
class SectionInvariants:
    c1_normal: BaseDivisor
    S_cubed: int
    c2X_dot_S: int

    @property
    def fundamental_class(self) -> BaseDivisor:
        """c1 of the fundamental line bundle, minus c1 of the normal bundle of S."""
        return -self.c1_normal


def section_invariants(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> SectionInvariants:
    a, b = pair
    # N_{S|X} = N_{S|Z} - N_{X|Z}|_S with N_{S|Z} = O(xi + bL) + O(xi)
    normal = ChowClass.xi() * 2 + ChowClass.divisor(l=b) - ChowRing(pair, surface).c1_ambient()
    c1_normal = restrict_to_section(normal, pair, surface)
    s_cubed = c1_normal.self_intersection(surface)
    psi2, _ = chern_cy(pair, surface)
    c2x_s = restrict_to_section(psi2, pair, surface)
    residual = friedman_residual(pair, surface)
    if c2x_s != surface.c2 - surface.c1sq + residual:
        raise DefectError(f"c2(X).S mismatch for {tuple(pair)}: {c2x_s}")
    if s_cubed != surface.c1sq:
        raise DefectError(f"S^3 = {s_cubed} differs from K_B^2 = {surface.c1sq}")
    return SectionInvariants(c1_normal, int(s_cubed), int(c2x_s))
