"""Finite list of pairs (a, b) that can carry a Calabi-Yau elliptic fibration.

The pairs come from two sources:

* the small region 2a - b < n0, where x^3 may survive and no section is
  certified;
* the integral points of the conic
  a(a - b)L^2 + (b - 2a)c1.L + c1^2 = 0, found by factoring
  (L^2 a - c1.L)(L^2 (a - b) - c1.L) = D when D = (c1.L)^2 - c1^2 L^2 > 0,
  or on the two lines a = m, b = a - m when D = 0 and m = c1.L / L^2 is a
  non-negative integer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterator

from sympy import divisors

from . import cubic
from .chow import BundlePair, euler_characteristic, friedman_residual
from .reference import compare_with_reference
from .surface import BaseSurface, SurfaceError, require_valid, validate

PROV_SMALL = "small region"
PROV_LINE_A = "line a=m"
PROV_LINE_B = "line b=a-m"
PROV_WEIERSTRASS = "weierstrass pair (3m,2m)"


class PairStatus(str, enum.Enum):
    UNKNOWN_SECTION = "UnknownSection"
    CANDIDATE = "CandidateCalabiYau"
    FAILS = "FailsNecessaryCondition"
    REDUCIBLE = "CertifiedReducible"


class Branch(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE_INTEGRAL = "reducible-integral"
    REDUCIBLE_NON_INTEGRAL = "reducible-non-integral"


@dataclass(frozen=True)
class WeightEntry:
    i: int
    j: int
    k: int
    wL: int
    status: cubic.CoefficientStatus

    @property
    def monomial(self) -> str:
        return cubic.MonomialWeight(self.i, self.j, self.k, self.wL).monomial

    def to_dict(self) -> dict[str, Any]:
        return {"monomial": self.monomial, "i": self.i, "j": self.j, "k": self.k,
                "wL": self.wL, "status": self.status.value}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> WeightEntry:
        return cls(d["i"], d["j"], d["k"], d["wL"], cubic.CoefficientStatus(d["status"]))


@dataclass(frozen=True)
class PairRecord:
    a: int
    b: int
    status: PairStatus
    euler: int
    residual: int
    weights: tuple[WeightEntry, ...]
    provenance: tuple[str, ...]

    @property
    def pair(self) -> BundlePair:
        return BundlePair(self.a, self.b)

    def to_dict(self) -> dict[str, Any]:
        return {
            "a": self.a,
            "b": self.b,
            "status": self.status.value,
            "euler": self.euler,
            "residual": self.residual,
            "provenance": list(self.provenance),
            "weights": [w.to_dict() for w in self.weights],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> PairRecord:
        return cls(
            a=d["a"],
            b=d["b"],
            status=PairStatus(d["status"]),
            euler=d["euler"],
            residual=d["residual"],
            weights=tuple(WeightEntry.from_dict(w) for w in d["weights"]),
            provenance=tuple(d["provenance"]),
        )


@dataclass(frozen=True)
class Counts:
    small_region_exact: int
    paper_small_bound: int
    conic_points: int
    paper_conic_bound: int | None
    total: int
    paper_total_bound: int | None

    def to_dict(self) -> dict[str, Any]:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Counts:
        return cls(**d)


@dataclass(frozen=True)
class EnumerationReport:
    surface: BaseSurface
    D: int
    branch: Branch
    m: int | None
    pairs: tuple[PairRecord, ...]
    counts: Counts
    notes: tuple[str, ...] = field(default=())

    def pair_set(self) -> set[tuple[int, int]]:
        return {(p.a, p.b) for p in self.pairs}

    def by_status(self, status: PairStatus) -> list[tuple[int, int]]:
        return [(p.a, p.b) for p in self.pairs if p.status is status]

    def record(self, a: int, b: int) -> PairRecord | None:
        for p in self.pairs:
            if (p.a, p.b) == (a, b):
                return p
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            "surface": self.surface.to_dict(),
            "D": self.D,
            "branch": self.branch.value,
            "m": self.m,
            "pairs": [p.to_dict() for p in self.pairs],
            "counts": self.counts.to_dict(),
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> EnumerationReport:
        return cls(
            surface=BaseSurface.from_dict(d["surface"]),
            D=d["D"],
            branch=Branch(d["branch"]),
            m=d["m"],
            pairs=tuple(PairRecord.from_dict(p) for p in d["pairs"]),
            counts=Counts.from_dict(d["counts"]),
            notes=tuple(d["notes"]),
        )


def hodge_discriminant(surface: BaseSurface) -> int:
    """D = (c1.L)^2 - c1^2 L^2; zero exactly when the conic splits into lines."""
    d = surface.hodge_gap
    if d < 0:
        raise SurfaceError(f"Hodge inequality fails for {surface.name!r}: D = {d} < 0")
    return d


def _n0(surface_or_n0: BaseSurface | int) -> int:
    n0 = surface_or_n0.n0 if isinstance(surface_or_n0, BaseSurface) else surface_or_n0
    if n0 < 1:
        raise ValueError(f"n0 must be >= 1, got {n0}")
    return n0


def small_region(surface_or_n0: BaseSurface | int) -> list[BundlePair]:
    """All a >= b >= 0 with 2a - b < n0, in lexicographic order."""
    n0 = _n0(surface_or_n0)
    out = []
    # 2a - b >= a, so a < n0
    for a in range(n0):
        for b in range(max(0, 2 * a - n0 + 1), a + 1):
            out.append(BundlePair(a, b))
    return out


def _irreducible_points(surface: BaseSurface) -> Iterator[tuple[BundlePair, int]]:
    D = hodge_discriminant(surface)
    if D <= 0:
        raise ValueError("divisor enumeration needs D > 0; the conic is reducible")
    L2, c1L = surface.L2, surface.c1L
    for pos in divisors(D):
        for d in (pos, -pos):
            d_dual = D // d
            if (d + c1L) % L2 or (d - d_dual) % L2:
                continue
            a, b = (d + c1L) // L2, (d - d_dual) // L2
            if a >= b >= 0:
                yield BundlePair(a, b), d


def conic_points_irreducible(surface: BaseSurface) -> list[BundlePair]:
    """Octant integral points of the conic, via the divisors d of D (both signs)."""
    return sorted({p for p, _ in _irreducible_points(surface)})


def _reducible_points(surface: BaseSurface) -> Iterator[tuple[BundlePair, str]]:
    if hodge_discriminant(surface) != 0:
        raise ValueError("line enumeration needs D = 0")
    if surface.ratio() is None:
        raise SurfaceError("D = 0 but no proportionality data is available")
    m = surface.integral_ratio()
    if m is None:
        return
    for b in range(m + 1):
        yield BundlePair(m, b), PROV_LINE_A
    # beyond b = 2m every z-free coefficient is forced to vanish
    for b in range(2 * m + 1):
        yield BundlePair(m + b, b), PROV_LINE_B


def conic_points_reducible(surface: BaseSurface) -> list[BundlePair]:
    """Points on a = m and b = a - m (0 <= b <= 2m) when m = r/s is a natural number."""
    return sorted({p for p, _ in _reducible_points(surface)})


def classify_pair(pair: BundlePair | tuple[int, int], surface: BaseSurface) -> PairStatus:
    pair = BundlePair(*pair)
    if not pair.is_normalized:
        raise ValueError(f"{tuple(pair)} is not in the octant a >= b >= 0; see BundlePair.normalize")
    if not cubic.section_guaranteed(pair, surface):
        return PairStatus.UNKNOWN_SECTION
    if cubic.reducibility_certified(pair, surface):
        return PairStatus.REDUCIBLE
    if friedman_residual(pair, surface) == 0:
        return PairStatus.CANDIDATE
    return PairStatus.FAILS


def make_record(pair: BundlePair | tuple[int, int], surface: BaseSurface, provenance: tuple[str, ...] = ()) -> PairRecord:
    pair = BundlePair(*pair)
    weights = tuple(
        WeightEntry(w.i, w.j, w.k, w.wL, st) for w, st in cubic.weight_table(pair, surface)
    )
    return PairRecord(
        a=pair.a,
        b=pair.b,
        status=classify_pair(pair, surface),
        euler=euler_characteristic(pair, surface),
        residual=friedman_residual(pair, surface),
        weights=weights,
        provenance=provenance,
    )


# -- counting ------------------------------------------------------------

def count_small_exact(n0: int) -> int:
    """Number of a >= b >= 0 with 2a - b < n0."""
    if n0 < 1:
        raise ValueError(f"n0 must be >= 1, got {n0}")
    if n0 % 2 == 0:
        return n0 * (n0 + 2) // 4
    return ((n0 + 1) // 2) ** 2


def paper_small_bound(n0: int) -> int:
    """Published closed form for the small-region count (odd case overcounts)."""
    if n0 % 2 == 0:
        return n0 * (n0 + 2) // 4
    return (n0 * n0 + 4 * n0 - 1) // 4


def paper_total_bound(m: int) -> int:
    """Published closed form for the whole list when m L == -K_B (even case overcounts)."""
    if m % 2 == 0:
        return (m * m + 18 * m + 4) // 4
    return (m * m + 16 * m + 3) // 4


def count_total_exact(m: int) -> int:
    """Small region for n0 = m + 1 plus the 3m further points on the two lines."""
    return count_small_exact(m + 1) + 3 * m


@dataclass(frozen=True)
class PaperBounds:
    n: int
    small: int
    small_exact: int
    total_delpezzo: int
    total_exact: int

    @property
    def small_matches(self) -> bool:
        return self.small == self.small_exact

    @property
    def total_matches(self) -> bool:
        return self.total_delpezzo == self.total_exact


def count_paper_bounds(n: int) -> PaperBounds:
    """Both published closed forms at ``n``, read as n0 for the small region
    and as m for the del Pezzo total, next to the exact counts."""
    if n < 1:
        raise ValueError(f"input must be >= 1, got {n}")
    return PaperBounds(
        n=n,
        small=paper_small_bound(n),
        small_exact=count_small_exact(n),
        total_delpezzo=paper_total_bound(n),
        total_exact=count_total_exact(n),
    )


# -- driver --------------------------------------------------------------

def enumerate_all(surface: BaseSurface) -> EnumerationReport:
    require_valid(surface)
    D = hodge_discriminant(surface)
    notes: list[str] = list(validate(surface).warnings)
    provenance: dict[BundlePair, list[str]] = {}

    def tag(pair: BundlePair, label: str) -> None:
        labels = provenance.setdefault(pair, [])
        if label not in labels:
            labels.append(label)

    small = small_region(surface)
    for p in small:
        tag(p, PROV_SMALL)

    m = None
    if D > 0:
        branch = Branch.IRREDUCIBLE
        conic = set()
        for p, d in _irreducible_points(surface):
            conic.add(p)
            tag(p, f"divisor d={d}")
        paper_conic = None
        paper_total = None
    else:
        m = surface.integral_ratio()
        conic = set()
        if m is None:
            branch = Branch.REDUCIBLE_NON_INTEGRAL
            paper_conic = 0
            paper_total = paper_small_bound(surface.n0)
        else:
            branch = Branch.REDUCIBLE_INTEGRAL
            for p, label in _reducible_points(surface):
                conic.add(p)
                tag(p, label)
            tag(BundlePair(3 * m, 2 * m), PROV_WEIERSTRASS)
            paper_conic = 3 * m + 1
            paper_total = paper_total_bound(m)

    records = tuple(make_record(p, surface, tuple(provenance[p])) for p in sorted(provenance))
    counts = Counts(
        small_region_exact=len(small),
        paper_small_bound=paper_small_bound(surface.n0),
        conic_points=len(conic),
        paper_conic_bound=paper_conic,
        total=len(records),
        paper_total_bound=paper_total,
    )

    if counts.paper_small_bound != counts.small_region_exact:
        notes.append(
            f"small-region closed form gives {counts.paper_small_bound} for n0 = {surface.n0}, "
            f"lattice count is {counts.small_region_exact} (off by {counts.paper_small_bound - counts.small_region_exact})"
        )
    if paper_conic is not None and paper_conic != counts.conic_points:
        notes.append(f"line count 3m+1 = {paper_conic} differs from {counts.conic_points} points found")
    if paper_total is not None and paper_total != counts.total:
        notes.append(
            f"closed-form total gives {paper_total}, enumeration finds {counts.total} "
            f"(off by {paper_total - counts.total})"
        )
    if m is not None:
        w = next(r for r in records if (r.a, r.b) == (3 * m, 2 * m))
        notes.append(f"({3 * m}, {2 * m}) carries the Weierstrass models over B (E = omega_B^-3 + omega_B^-2 + O_B), status {w.status.value}")

    notes.extend(compare_with_reference(surface, {(r.a, r.b) for r in records}))
    return EnumerationReport(surface, D, branch, m, records, counts, tuple(notes))
