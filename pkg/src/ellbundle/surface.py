"""Numerical profile of a polarized surface (B, L).

Everything downstream only needs four intersection numbers of the base,
the ampleness threshold ``n0`` and, in the proportional case, the ratio
``r/s`` with ``r L == s c1(B)`` numerically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Any


class SurfaceError(ValueError):
    """Surface data is malformed or fails a numeric identity."""


@dataclass(frozen=True)
class BaseSurface:
    """Intersection-theoretic data of B together with the ample class L.

    ``c1L`` is c1(B).L, ``c1sq`` is c1(B)^2 = K_B^2 and ``c2`` the
    topological Euler number of B. ``n0`` is the least n such that
    nL + K_B is ample for every larger n as well; it is trusted, not computed.
    """

    L2: int
    c1L: int
    c1sq: int
    c2: int
    n0: int
    proportionality: tuple[int, int] | None = None
    name: str = "surface"

    def __post_init__(self) -> None:
        for key in ("L2", "c1L", "c1sq", "c2", "n0"):
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, int):
                raise SurfaceError(f"{key} must be an integer, got {value!r}")
        if self.proportionality is not None:
            rs = tuple(self.proportionality)
            if len(rs) != 2 or any(isinstance(v, bool) or not isinstance(v, int) for v in rs):
                raise SurfaceError(f"proportionality must be a pair of integers, got {rs!r}")
            object.__setattr__(self, "proportionality", rs)

    @property
    def hodge_gap(self) -> int:
        """(c1.L)^2 - c1^2 L^2; non-negative for genuine surface data."""
        return self.c1L * self.c1L - self.c1sq * self.L2

    def resolved_proportionality(self) -> tuple[int, int] | None:
        """Stored (r, s), or the one forced by equality in the Hodge inequality."""
        if self.proportionality is not None:
            return self.proportionality
        if self.hodge_gap != 0 or self.L2 <= 0:
            return None
        q = Fraction(self.c1L, self.L2)
        return (q.numerator, q.denominator)

    def ratio(self) -> Fraction | None:
        """The exact rational r/s = c1.L / L^2 when L and c1(B) are proportional."""
        rs = self.resolved_proportionality()
        if rs is None:
            return None
        r, s = rs
        return Fraction(r, s)

    def integral_ratio(self) -> int | None:
        """m = r/s when it is a non-negative integer, else None."""
        q = self.ratio()
        if q is None or q.denominator != 1 or q < 0:
            return None
        return int(q)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "L2": self.L2,
            "c1L": self.c1L,
            "c1sq": self.c1sq,
            "c2": self.c2,
            "n0": self.n0,
        }
        if self.proportionality is not None:
            out["proportionality"] = list(self.proportionality)
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BaseSurface:
        allowed = {"name", "L2", "c1L", "c1sq", "c2", "n0", "proportionality"}
        unknown = set(data) - allowed
        if unknown:
            raise SurfaceError(f"unknown keys in surface descriptor: {sorted(unknown)}")
        missing = {"L2", "c1L", "c1sq", "c2", "n0"} - set(data)
        if missing:
            raise SurfaceError(f"missing keys in surface descriptor: {sorted(missing)}")
        prop = data.get("proportionality")
        if prop is not None:
            if not isinstance(prop, (list, tuple)):
                raise SurfaceError("proportionality must be a list [r, s]")
            prop = tuple(prop)
        name = data.get("name", "surface")
        if not isinstance(name, str):
            raise SurfaceError("name must be a string")
        return cls(
            L2=data["L2"],
            c1L=data["c1L"],
            c1sq=data["c1sq"],
            c2=data["c2"],
            n0=data["n0"],
            proportionality=prop,
            name=name,
        )


def load_surface(path: str | Path) -> BaseSurface:
    """Read a JSON surface descriptor."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SurfaceError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise SurfaceError(f"{path}: descriptor must be a JSON object")
    return BaseSurface.from_dict(data)


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[str, ...] = ()
    # Facts that do not make the data invalid but are worth reporting.
    warnings: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(surface: BaseSurface) -> ValidationResult:
    """Check the numeric identities any genuine (B, L) must satisfy.

    Violations are returned, never raised. Each message starts with the
    name of the failed identity (``ample``, ``hodge``, ``noether``,
    ``threshold``, ``proportionality``).
    """
    bad: list[str] = []
    warn: list[str] = []
    s = surface
    if s.L2 < 1:
        bad.append(f"ample: L^2 = {s.L2} must be >= 1")
    if s.n0 < 1:
        bad.append(f"threshold: n0 = {s.n0} must be >= 1")
    if s.hodge_gap < 0:
        bad.append(
            f"hodge: (c1.L)^2 = {s.c1L ** 2} < c1^2 * L^2 = {s.c1sq * s.L2}"
        )
    if (s.c1sq + s.c2) % 12 != 0:
        bad.append(f"noether: c1^2 + c2 = {s.c1sq + s.c2} is not divisible by 12")

    if s.proportionality is not None:
        r, sd = s.proportionality
        if sd <= 0:
            bad.append(f"proportionality: s = {sd} must be positive")
        elif gcd(r, sd) != 1:
            bad.append(f"proportionality: ({r}, {sd}) is not in lowest terms")
        if sd * s.c1L != r * s.L2:
            bad.append(f"proportionality: s*c1.L = {sd * s.c1L} != r*L^2 = {r * s.L2}")
        if r * s.c1L != sd * s.c1sq:
            bad.append(f"proportionality: r*c1.L = {r * s.c1L} != s*c1^2 = {sd * s.c1sq}")
        if s.hodge_gap != 0:
            bad.append("proportionality: stated, but (c1.L)^2 != c1^2 L^2")

    # Proportional case: nL + K_B == (n - r/s) L numerically, so n0 is forced.
    q = s.ratio() if not bad else None
    if q is not None:
        expected = max(1, (q.numerator // q.denominator) + 1)
        if s.n0 != expected:
            warn.append(
                f"threshold: with L proportional to c1(B) (r/s = {q}) the ampleness "
                f"threshold is {expected}, but n0 = {s.n0} was given"
            )
    return ValidationResult(tuple(bad), tuple(warn))


def require_valid(surface: BaseSurface) -> BaseSurface:
    result = validate(surface)
    if not result.ok:
        raise SurfaceError(f"invalid surface {surface.name!r}: " + "; ".join(result.violations))
    return surface


def preset_projective_plane(d: int) -> BaseSurface:
    """B = P^2 polarized by L = d * (line)."""
    if d < 1:
        raise SurfaceError(f"d must be >= 1, got {d}")
    n0 = 4 if d == 1 else 2 if d in (2, 3) else 1
    g = gcd(3, d)
    return BaseSurface(
        L2=d * d,
        c1L=3 * d,
        c1sq=9,
        c2=3,
        n0=n0,
        proportionality=(3 // g, d // g),
        name=f"P2, L={d}l",
    )


def preset_del_pezzo_submultiple(k: int, m: int) -> BaseSurface:
    """del Pezzo surface of degree k with m L == -K_B numerically."""
    if not 1 <= k <= 9:
        raise SurfaceError(f"del Pezzo degree must lie in 1..9, got {k}")
    if m < 1:
        raise SurfaceError(f"m must be >= 1, got {m}")
    if k % (m * m) != 0:
        raise SurfaceError(f"m^2 = {m * m} does not divide K^2 = {k}; L^2 would not be integral")
    return BaseSurface(
        L2=k // (m * m),
        c1L=k // m,
        c1sq=k,
        c2=12 - k,
        n0=m + 1,
        proportionality=(m, 1),
        name=f"dP{k}, L=-K/{m}",
    )


PRESETS = {
    "p2": preset_projective_plane,
    "delpezzo": preset_del_pezzo_submultiple,
}
