"""Brute-force scan of the octant, independent of the divisor and line enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import cubic
from .chow import conic_residual_closed_form
from .enumeration import Branch, EnumerationReport, PROV_SMALL, PROV_WEIERSTRASS
from .surface import BaseSurface

DEFAULT_BOX = 200


def scan_box(box: int = DEFAULT_BOX):
    for a in range(box + 1):
        for b in range(a + 1):
            yield a, b


def brute_force_conic(surface: BaseSurface, box: int = DEFAULT_BOX) -> set[tuple[int, int]]:
    """Pairs 0 <= b <= a <= box on the conic."""
    return {p for p in scan_box(box) if conic_residual_closed_form(p, surface) == 0}


def brute_force_survivors(surface: BaseSurface, box: int = DEFAULT_BOX) -> set[tuple[int, int]]:
    """Conic points with a certified section and no forced factorization."""
    return {
        p
        for p in brute_force_conic(surface, box)
        if cubic.section_guaranteed(p, surface) and not cubic.reducibility_certified(p, surface)
    }


def _conic_part(report: EnumerationReport) -> set[tuple[int, int]]:
    """Pairs the report took from the conic rather than only from the small region."""
    out = set()
    for p in report.pairs:
        if any(tag not in (PROV_SMALL, PROV_WEIERSTRASS) for tag in p.provenance):
            out.add((p.a, p.b))
    return out


@dataclass
class OracleResult:
    box: int
    ok: bool = True
    problems: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.problems.append(msg)

    def to_dict(self) -> dict[str, Any]:
        return {"box": self.box, "ok": self.ok, "problems": list(self.problems)}

    def summary(self) -> str:
        if self.ok:
            return f"oracle agreement: ok (scan box 0 <= b <= a <= {self.box})"
        return f"oracle agreement: FAILED (box {self.box}): " + "; ".join(self.problems)


def verify_report(report: EnumerationReport, box: int = DEFAULT_BOX) -> OracleResult:
    surface = report.surface
    result = OracleResult(box)
    conic = brute_force_conic(surface, box)
    claimed = {p for p in _conic_part(report) if p[0] <= box}
    listed = report.pair_set()

    if report.branch is Branch.IRREDUCIBLE:
        if claimed != conic:
            result.fail(
                f"divisor enumeration {sorted(claimed)} != brute-force conic {sorted(conic)}"
            )
    else:
        stray = claimed - conic
        if stray:
            result.fail(f"pairs reported on the conic but off it: {sorted(stray)}")
        if report.branch is Branch.REDUCIBLE_NON_INTEGRAL and conic:
            result.fail(f"no integral conic points expected, brute force found {sorted(conic)}")

    missing = brute_force_survivors(surface, box) - listed
    if missing:
        result.fail(f"section-guaranteed, non-reducible conic points not listed: {sorted(missing)}")

    for rec in report.pairs:
        if (rec.a, rec.b) in claimed and rec.residual != 0:
            result.fail(f"({rec.a}, {rec.b}) is listed on the conic with residual {rec.residual}")
    return result
