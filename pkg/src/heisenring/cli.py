"""Command-line front end.

Calls the same service layer as the HTTP app, entirely in process. Output is
deterministic: a given RunConfig always produces byte-identical text.

Exit codes: 0 success, 1 argument error, 2 reproduction or verification
failure, 3 internal numerical error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import service
from .eigensolver import ConvergenceError

COMMANDS = ("spectrum", "concurrence", "threshold", "ghz", "fig1", "tables", "verify")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; identical configs must yield identical output."""

    command: str
    n_values: tuple[int, ...] = ()
    t_min: float = 0.0
    t_max: float = 0.0
    steps: int = 0
    fmt: str = "table"
    exhaustive_ghz: bool = False
    out: str | None = None


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; the contract reserves 2 for
    # failed reproduction checks, so remap usage errors to 1.
    def error(self, message: str):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_n(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if lo > hi:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected INT or A..B, got {text!r}"
        ) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="heisenring",
        description="Thermal entanglement of the antiferromagnetic Heisenberg ring.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add_command(
        name: str,
        help_text: str,
        n_default: str | None = None,
        grid: tuple[float, float, int] | None = None,
    ) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if n_default is not None:
            p.add_argument(
                "--n",
                type=_parse_n,
                default=_parse_n(n_default),
                metavar="INT|A..B",
                help=f"qubit count or inclusive range (default {n_default})",
            )
        if grid is not None:
            t_min, t_max, steps = grid
            p.add_argument("--t-min", type=float, default=t_min, dest="t_min")
            p.add_argument("--t-max", type=float, default=t_max, dest="t_max")
            p.add_argument("--steps", type=int, default=steps)
        p.add_argument(
            "--format", choices=("csv", "json", "table"), default="table", dest="fmt"
        )
        p.add_argument("--out", default=None, metavar="PATH", help="write output to a file")
        return p

    add_command("spectrum", "energy levels and degeneracies", n_default="4")
    add_command(
        "concurrence",
        "thermal pair concurrence over a temperature grid",
        n_default="4",
        grid=(0.02, 5.0, 100),
    )
    add_command("threshold", "temperature where pair entanglement vanishes", n_default="2..11")
    ghz = add_command("ghz", "ground-state GHZ fidelity", n_default="2..11")
    ghz.add_argument(
        "--exhaustive-ghz",
        action="store_true",
        dest="exhaustive_ghz",
        help="search every GHZ pair instead of only the alternating one",
    )
    add_command(
        "fig1",
        "four-qubit fidelity and concurrence curves",
        grid=(service.FIG_T_MIN, service.FIG_T_MAX, service.FIG_STEPS),
    )
    add_command("tables", "reproduce all reference tables and report deviations")
    add_command("verify", "run every oracle-equivalence suite")
    return parser


def parse_args(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    return RunConfig(
        command=ns.command,
        n_values=getattr(ns, "n", ()),
        t_min=getattr(ns, "t_min", 0.0),
        t_max=getattr(ns, "t_max", 0.0),
        steps=getattr(ns, "steps", 0),
        fmt=ns.fmt,
        exhaustive_ghz=getattr(ns, "exhaustive_ghz", False),
        out=ns.out,
    )


def _csv_cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    return str(value)


def _table_cell(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return "%.10g" % value
    return str(value)


def _render_csv(header: list[str], rows: list[list[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(cell) for cell in row])
    return buffer.getvalue()


def _render_table(
    header: list[str], rows: list[list[object]], footer: str | None = None
) -> str:
    cells = [[_table_cell(cell) for cell in row] for row in rows]
    widths = [
        max(len(name), *(len(row[i]) for row in cells)) if cells else len(name)
        for i, name in enumerate(header)
    ]
    lines = [
        "  ".join(name.ljust(widths[i]) for i, name in enumerate(header)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in cells:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    if footer is not None:
        lines.append(footer)
    return "\n".join(lines) + "\n"


def _render_json(payload: object) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _render(
    config: RunConfig,
    header: list[str],
    rows: list[list[object]],
    payload: object,
    footer: str | None = None,
) -> str:
    if config.fmt == "csv":
        return _render_csv(header, rows)
    if config.fmt == "json":
        return _render_json(payload)
    return _render_table(header, rows, footer)


def _run_spectrum(config: RunConfig) -> tuple[str, int]:
    reports = [service.spectrum_report(n) for n in config.n_values]
    rows = [
        [report.n, level.energy, level.multiplicity]
        for report in reports
        for level in report.levels
    ]
    payload = [report.model_dump() for report in reports]
    return _render(config, ["n", "energy", "multiplicity"], rows, payload), 0


def _run_concurrence(config: RunConfig) -> tuple[str, int]:
    reports = [
        service.thermal_series(n, config.t_min, config.t_max, config.steps)
        for n in config.n_values
    ]
    rows = [
        [series.n, p.temperature, p.log_z, p.internal_energy, p.concurrence]
        for series in reports
        for p in series.points
    ]
    payload = [series.model_dump() for series in reports]
    header = ["n", "temperature", "log_z", "internal_energy", "concurrence"]
    return _render(config, header, rows, payload), 0


def _run_threshold(config: RunConfig) -> tuple[str, int]:
    reports = [service.threshold_report(n) for n in config.n_values]
    rows = [[r.n, r.t_threshold, r.bracket_width] for r in reports]
    payload = [r.model_dump() for r in reports]
    return _render(config, ["n", "t_threshold", "bracket_width"], rows, payload), 0


def _run_ghz(config: RunConfig) -> tuple[str, int]:
    reports = [service.ghz_report(n, config.exhaustive_ghz) for n in config.n_values]
    rows = [
        [
            r.n,
            r.ket_a,
            r.ket_b,
            "+" if r.sign > 0 else "-",
            r.fidelity,
            r.neel_fidelity,
            r.beats_neel,
            r.certified_below,
        ]
        for r in reports
    ]
    payload = [r.model_dump() for r in reports]
    header = [
        "n",
        "ket_a",
        "ket_b",
        "sign",
        "fidelity",
        "neel_fidelity",
        "beats_neel",
        "certified_below",
    ]
    return _render(config, header, rows, payload), 0


def _run_fig1(config: RunConfig) -> tuple[str, int]:
    curve = service.fidelity_curve(config.t_min, config.t_max, config.steps)
    rows = [
        [
            p.temperature,
            p.fidelity,
            p.fidelity_analytic,
            p.concurrence,
            p.concurrence_analytic,
        ]
        for p in curve.points
    ]
    header = [
        "temperature",
        "fidelity",
        "fidelity_analytic",
        "concurrence",
        "concurrence_analytic",
    ]
    footer = "fidelity_threshold = %.10g" % curve.fidelity_threshold
    return _render(config, header, rows, curve.model_dump(), footer), 0


def _run_tables(config: RunConfig) -> tuple[str, int]:
    report = service.tables_report()
    rows = [
        [
            row.block,
            row.key,
            row.computed,
            row.reference,
            row.deviation,
            row.tolerance,
            row.ok,
            row.note,
        ]
        for row in report.rows
    ]
    header = ["block", "key", "computed", "reference", "deviation", "tolerance", "ok", "note"]
    misses = sum(1 for row in report.rows if not row.ok)
    footer = "all rows within tolerance" if report.ok else f"{misses} row(s) out of tolerance"
    text = _render(config, header, rows, report.model_dump(), footer)
    return text, 0 if report.ok else 2


def _run_verify(config: RunConfig) -> tuple[str, int]:
    report = service.verification_report()
    rows = [[c.name, c.tolerance, c.worst, c.ok] for c in report.checks]
    header = ["check", "tolerance", "worst", "ok"]
    footer = "all checks passed" if report.ok else "verification FAILED"
    text = _render(config, header, rows, report.model_dump(), footer)
    return text, 0 if report.ok else 2


_RUNNERS = {
    "spectrum": _run_spectrum,
    "concurrence": _run_concurrence,
    "threshold": _run_threshold,
    "ghz": _run_ghz,
    "fig1": _run_fig1,
    "tables": _run_tables,
    "verify": _run_verify,
}


def run(config: RunConfig) -> tuple[str, int]:
    """Execute a parsed invocation; returns (output text, exit code)."""
    try:
        return _RUNNERS[config.command](config)
    except ValueError as exc:
        return f"heisenring: error: {exc}\n", 1
    except ConvergenceError as exc:
        return f"heisenring: numerical error: {exc}\n", 3


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    text, code = run(config)
    if code in (1, 3):
        sys.stderr.write(text)
        return code
    if config.out is not None:
        Path(config.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def entry() -> None:
    sys.exit(main())
