"""Command-line front end.

Exit codes: 0 success, 1 invalid surface data, 2 bad usage, 3 internal
defect (two independent computations disagree), 4 output not writable.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .chow import DefectError
from .enumeration import enumerate_all
from .oracle import DEFAULT_BOX, verify_report
from .report import FORMATS, emit_report
from .surface import (
    BaseSurface,
    SurfaceError,
    load_surface,
    preset_del_pezzo_submultiple,
    preset_projective_plane,
)

log = logging.getLogger("ellbundle")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_DEFECT = 3
EXIT_IO = 4

_INLINE = ("l2", "c1l", "c1sq", "c2", "n0")


@dataclass
class RunConfig:
    preset: str | None = None
    preset_args: dict[str, int] = field(default_factory=dict)
    inline: dict[str, int] | None = None
    inputs: list[Path] = field(default_factory=list)
    fmt: str = "text"
    figure: Path | None = None
    output: Path | None = None
    verify: bool = False
    scan_box: int = DEFAULT_BOX
    name: str = "surface"

    def sources(self) -> int:
        return sum([self.preset is not None, self.inline is not None, bool(self.inputs)])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ellbundle",
        description="Enumerate the pairs (a, b) for which anticanonical hypersurfaces of "
        "P(L^a + L^b + O_B) can be Calabi-Yau elliptic fibrations over a polarized surface (B, L).",
    )
    src = p.add_argument_group("surface (choose one source)")
    src.add_argument("--preset", choices=["p2", "delpezzo"], help="built-in surface family")
    src.add_argument("--d", type=int, help="p2: L = d * line")
    src.add_argument("--k", type=int, help="delpezzo: degree K^2")
    src.add_argument("--m", type=int, help="delpezzo: m L = -K")
    src.add_argument("--l2", type=int, help="L^2")
    src.add_argument("--c1l", type=int, help="c1(B).L")
    src.add_argument("--c1sq", type=int, help="c1(B)^2")
    src.add_argument("--c2", type=int, help="c2(B), the Euler number of B")
    src.add_argument("--n0", type=int, help="least n with nL + K_B ample for all larger n")
    src.add_argument("--r", type=int, help="proportionality r L == s c1(B)")
    src.add_argument("--s", type=int, help="proportionality r L == s c1(B)")
    src.add_argument("--name", default="surface", help="label for inline surfaces")
    src.add_argument("--input", nargs="+", type=Path, metavar="JSON", help="surface descriptor file(s)")

    out = p.add_argument_group("output")
    out.add_argument("--format", choices=FORMATS, default="text")
    out.add_argument("--output", type=Path, help="write the report here (a directory for several inputs)")
    out.add_argument("--figure", type=Path, help="write an SVG of the octant (a directory for several inputs)")
    out.add_argument("--verify", action="store_true", help="cross-check against a brute-force scan")
    out.add_argument("--scan-box", type=int, default=DEFAULT_BOX, help="brute-force scan bound on a")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def config_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    cfg = RunConfig(fmt=args.format, figure=args.figure, output=args.output,
                    verify=args.verify, scan_box=args.scan_box)
    if args.preset:
        cfg.preset = args.preset
        keys = ("d",) if args.preset == "p2" else ("k", "m")
        for key in keys:
            if getattr(args, key) is None:
                parser.error(f"--preset {args.preset} needs --{key}")
            cfg.preset_args[key] = getattr(args, key)
    given = [k for k in _INLINE if getattr(args, k) is not None]
    if given:
        missing = [k for k in _INLINE if getattr(args, k) is None]
        if missing:
            parser.error("inline surface needs " + ", ".join(f"--{k}" for k in missing))
        cfg.inline = {k: getattr(args, k) for k in _INLINE}
        if (args.r is None) != (args.s is None):
            parser.error("--r and --s go together")
        if args.r is not None:
            cfg.inline["r"], cfg.inline["s"] = args.r, args.s
        cfg.name = args.name
    if args.input:
        cfg.inputs = list(args.input)
    if cfg.sources() != 1:
        parser.error("give exactly one surface source: --preset, inline numbers, or --input")
    if cfg.scan_box < 1:
        parser.error("--scan-box must be positive")
    return cfg


def resolve_surfaces(cfg: RunConfig) -> list[BaseSurface]:
    if cfg.preset == "p2":
        return [preset_projective_plane(cfg.preset_args["d"])]
    if cfg.preset == "delpezzo":
        return [preset_del_pezzo_submultiple(cfg.preset_args["k"], cfg.preset_args["m"])]
    if cfg.inline is not None:
        v = cfg.inline
        prop = (v["r"], v["s"]) if "r" in v else None
        return [BaseSurface(L2=v["l2"], c1L=v["c1l"], c1sq=v["c1sq"], c2=v["c2"], n0=v["n0"],
                            proportionality=prop, name=cfg.name)]
    return [load_surface(p) for p in cfg.inputs]


def _atomic_write(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _target(base: Path | None, index: int, source: Path | None, suffix: str, many: bool) -> Path | None:
    if base is None:
        return None
    if not many:
        return base
    base.mkdir(parents=True, exist_ok=True)
    stem = source.stem if source is not None else f"surface{index}"
    return base / f"{stem}.{suffix}"


def run(cfg: RunConfig, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        surfaces = resolve_surfaces(cfg)
    except (SurfaceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    many = len(surfaces) > 1
    status = EXIT_OK
    for idx, surface in enumerate(surfaces):
        source = cfg.inputs[idx] if cfg.inputs else None
        try:
            report = enumerate_all(surface)
            oracle = verify_report(report, cfg.scan_box) if cfg.verify else None
        except SurfaceError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = max(status, EXIT_INVALID)
            continue
        except DefectError as exc:
            print(f"internal defect: {exc}", file=sys.stderr)
            return EXIT_DEFECT

        text = emit_report(report, cfg.fmt, oracle)
        suffix = {"text": "txt", "json": "json", "csv": "csv"}[cfg.fmt]
        try:
            out_path = _target(cfg.output, idx, source, suffix, many)
            if out_path is None:
                stdout.write(text)
            else:
                _atomic_write(out_path, text)
            fig_path = _target(cfg.figure, idx, source, "svg", many)
            if fig_path is not None:
                from .figure import render_figure  # matplotlib is slow to import

                tmp = fig_path.with_name(f".{fig_path.name}.tmp")
                render_figure(report, tmp)
                os.replace(tmp, fig_path)
        except OSError as exc:
            print(f"error: cannot write output: {exc}", file=sys.stderr)
            return EXIT_IO

        if oracle is not None:
            if cfg.fmt == "csv" or out_path is not None:
                print(oracle.summary(), file=sys.stderr)
            if not oracle.ok:
                return EXIT_DEFECT
    return status


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    cfg = config_from_args(args, parser)
    log.debug("config: %s", cfg)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
