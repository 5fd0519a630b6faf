"""Serialization of enumeration reports: JSON, CSV and a plain-text table."""

from __future__ import annotations

import csv
import io
import json
from typing import Any

from .enumeration import EnumerationReport, PairRecord, PairStatus
from .oracle import OracleResult

FORMATS = ("text", "json", "csv")

CSV_FIELDS = ["a", "b", "status", "euler", "residual", "provenance", "weights"]

_STATUS_COLUMNS = (
    (PairStatus.UNKNOWN_SECTION, "no certified section"),
    (PairStatus.CANDIDATE, "candidate CY"),
    (PairStatus.FAILS, "residual != 0"),
    (PairStatus.REDUCIBLE, "F = z*f"),
)


def report_to_json(report: EnumerationReport, oracle: OracleResult | None = None) -> str:
    doc: dict[str, Any] = report.to_dict()
    if oracle is not None:
        doc["oracle"] = oracle.to_dict()
    return json.dumps(doc, indent=2) + "\n"


def report_from_json(text: str) -> EnumerationReport:
    doc = json.loads(text)
    doc.pop("oracle", None)
    return EnumerationReport.from_dict(doc)


def _weights_cell(rec: PairRecord) -> str:
    return "|".join(f"{w.monomial}:{w.wL}:{w.status.value}" for w in rec.weights)


def report_to_csv(report: EnumerationReport) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in report.pairs:
        writer.writerow(
            {
                "a": rec.a,
                "b": rec.b,
                "status": rec.status.value,
                "euler": rec.euler,
                "residual": rec.residual,
                "provenance": ";".join(rec.provenance),
                "weights": _weights_cell(rec),
            }
        )
    return buf.getvalue()


def pairs_from_csv(text: str) -> list[tuple[int, int, str]]:
    return [(int(r["a"]), int(r["b"]), r["status"]) for r in csv.DictReader(io.StringIO(text))]


def _fmt_pairs(pairs: list[tuple[int, int]]) -> str:
    return ", ".join(f"({a}, {b})" for a, b in pairs) or "-"


def report_to_text(report: EnumerationReport, oracle: OracleResult | None = None) -> str:
    s = report.surface
    lines = [
        f"surface   {s.name}: L^2={s.L2} c1.L={s.c1L} c1^2={s.c1sq} c2={s.c2} n0={s.n0}"
        + (f" r/s={s.ratio()}" if s.ratio() is not None else ""),
        f"D         {report.D}   (c1.L)^2 - c1^2 L^2",
        f"branch    {report.branch.value}" + (f"  m={report.m}" if report.m is not None else ""),
        "",
        "summary by status",
    ]
    width = max(len(label) for _, label in _STATUS_COLUMNS)
    for status, label in _STATUS_COLUMNS:
        lines.append(f"  {label:<{width}}  {_fmt_pairs(report.by_status(status))}")

    lines += ["", "pairs"]
    header = f"  {'a':>4} {'b':>4}  {'status':<24} {'chi_top':>8} {'residual':>9}  provenance"
    lines.append(header)
    lines.append("  " + "-" * (len(header) - 2))
    for rec in report.pairs:
        lines.append(
            f"  {rec.a:>4} {rec.b:>4}  {rec.status.value:<24} {rec.euler:>8} {rec.residual:>9}  "
            + "; ".join(rec.provenance)
        )

    c = report.counts
    lines += [
        "",
        "counts",
        f"  small region        {c.small_region_exact}   (closed form {c.paper_small_bound})",
        f"  conic points        {c.conic_points}"
        + (f"   (closed form {c.paper_conic_bound})" if c.paper_conic_bound is not None else ""),
        f"  total               {c.total}"
        + (f"   (closed form {c.paper_total_bound})" if c.paper_total_bound is not None else ""),
    ]
    if report.notes:
        lines += ["", "notes"] + [f"  - {n}" for n in report.notes]
    if oracle is not None:
        lines += ["", oracle.summary()]
    return "\n".join(lines) + "\n"


def emit_report(report: EnumerationReport, fmt: str = "text", oracle: OracleResult | None = None) -> str:
    if fmt == "json":
        return report_to_json(report, oracle)
    if fmt == "csv":
        return report_to_csv(report)
    if fmt == "text":
        return report_to_text(report, oracle)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
