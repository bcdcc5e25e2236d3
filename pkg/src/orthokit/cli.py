"""Command-line front end.

Subcommands map onto the library one-to-one:

* ``bounds``      -- speed bounds (and comb gamma_tilde) for a comb state
* ``trace``       -- survival / relative-entropy / resultant-norm series
* ``figure``      -- canned datasets: fig3, fig5, fig6
* ``spectrum``    -- two-mode ladder, analytic against numeric
* ``bifurcation`` -- concurrence peak-splitting threshold
* ``extremal``    -- fastest and slowest two-component combs

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from dataclasses import dataclass

import numpy as np

from .entanglement import (
    FockState,
    concurrence,
    concurrence_fast_trace,
    fast_gamma_tilde,
    find_bifurcation,
)
from .errors import OrthokitError
from .evolution import trace_series
from .orthogonality import bounds as speed_bounds
from .orthogonality import comb_relations, gamma_tilde, period
from .state import CombSpec, make_comb
from .twomode import (
    TwoModeCombSpec,
    TwoModeParams,
    comb_state,
    diagonalize,
    extremal_states,
    spectrum_analytic,
)

_FIG6_RATIOS = (
    (0.0, "c_ratio_0"),
    (0.25, "c_ratio_0p25"),
    (0.35355339059327373, "c_ratio_crit"),
    (0.5, "c_ratio_0p5"),
    (2.0, "c_ratio_2"),
)


@dataclass
class Table:
    columns: list
    rows: list


def _count_ge2(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError("count must be at least 2")
    return value


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _add_output_flags(sub: argparse.ArgumentParser, default_format: str) -> None:
    sub.add_argument(
        "--format", choices=("csv", "json"), default=default_format,
        help=f"output format (default: {default_format})",
    )
    sub.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")


def _add_comb_source_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--comb", type=_count_ge2, metavar="COUNT",
                     help="component count of an abstract comb")
    sub.add_argument("--dg", type=_positive_float, default=1.0,
                     help="eigenvalue spacing of the abstract comb (default 1)")
    sub.add_argument("--base", type=float, default=0.0,
                     help="ground eigenvalue of the abstract comb (default 0)")
    sub.add_argument("--bosons", type=_positive_int, metavar="N",
                     help="boson number (selects the two-mode comb source)")
    sub.add_argument("--g0", type=float, default=0.0, help="first mode weight (default 0)")
    sub.add_argument("--g1", type=float, default=1.0, help="second mode weight (default 1)")
    sub.add_argument("--g01", type=float, default=0.0, help="mode coupling (default 0)")
    sub.add_argument("--n1", type=int, default=0,
                     help="lowest level index of the two-mode comb (default 0)")
    sub.add_argument("--stride", type=_positive_int, default=1,
                     help="level stride of the two-mode comb (default 1)")
    sub.add_argument("--count", type=_count_ge2, default=2,
                     help="component count of the two-mode comb (default 2)")
    sub.add_argument("--phases", type=float, nargs="+", metavar="PHI",
                     help="component phases")


def _comb_from_args(parser: argparse.ArgumentParser, args) -> tuple:
    """Build (state, gamma_tilde, period) from either comb source."""
    if (args.comb is None) == (args.bosons is None):
        parser.error("exactly one of --comb or --bosons is required")
    if args.comb is not None:
        spec = CombSpec(count=args.comb, base=args.base, spacing=args.dg,
                        phases=args.phases)
        return make_comb(spec), gamma_tilde(spec), period(spec)
    params = TwoModeParams(args.g0, args.g1, args.g01, args.bosons)
    spec2 = TwoModeCombSpec(params, base_index=args.n1, stride=args.stride,
                            count=args.count, phases=args.phases)
    cs = comb_state(spec2)
    return cs.g_basis, cs.gamma_tilde, cs.gamma_tilde * spec2.count


def _single_phase(parser: argparse.ArgumentParser, args) -> float:
    if args.phases is None:
        return 0.0
    if len(args.phases) != 1:
        parser.error("this command takes a single --phases value")
    return float(args.phases[0])


def _cmd_bounds(parser, args) -> Table:
    state, gt, per = _comb_from_args(parser, args)
    rep = speed_bounds(state)
    return Table(
        columns=["ml_bound", "mt_bound", "gamma_min", "saturated", "gamma_tilde", "period"],
        rows=[[rep.ml_bound, rep.mt_bound, rep.gamma_min, rep.saturated, gt, per]],
    )


def _cmd_trace(parser, args) -> Table:
    state, gt, per = _comb_from_args(parser, args)
    gamma_max = per if args.gamma_max is None else args.gamma_max
    grid = np.linspace(0.0, gamma_max, args.points)
    ts = trace_series(state, grid, args.quantity)
    return Table(
        columns=["gamma", args.quantity],
        rows=[[float(g), float(v)] for g, v in zip(ts.gammas, ts.values)],
    )


def _cmd_figure(parser, args) -> Table:
    if args.name == "fig3":
        grid = np.linspace(0.0, 2.0 * math.pi, args.points)
        columns = ["gamma"]
        data = [grid]
        for n in (2, 3, 10):
            ts = trace_series(make_comb(CombSpec(count=n)), grid, "relative_entropy")
            columns.append(f"relative_entropy_{n}")
            data.append(ts.values)
        rows = [[float(col[i]) for col in data] for i in range(args.points)]
        return Table(columns=columns, rows=rows)
    if args.name == "fig5":
        rows = []
        for n in range(2, max(args.points, 2) + 1):
            rel = comb_relations(n)
            rows.append([n, rel.quotient, rel.g_ratio, rel.geometric_phase_s])
        return Table(
            columns=["count", "quotient", "g_ratio", "geometric_phase_s"], rows=rows
        )
    # fig6
    phase = _single_phase(parser, args)
    x = np.linspace(0.0, 2.0, args.points)
    columns = ["gamma_over_gamma_tilde"]
    data = [x]
    for ratio, label in _FIG6_RATIOS:
        params = TwoModeParams(args.g0, args.g1, ratio * (args.g1 - args.g0), args.bosons)
        gt = fast_gamma_tilde(params)
        data.append(concurrence_fast_trace(params, phase, x * gt).values)
        columns.append(label)
    rows = [[float(col[i]) for col in data] for i in range(args.points)]
    return Table(columns=columns, rows=rows)


def _cmd_spectrum(parser, args) -> Table:
    params = TwoModeParams(args.g0, args.g1, args.g01, args.bosons)
    analytic = spectrum_analytic(params)
    decomp = diagonalize(params)
    rows = []
    for i in range(params.bosons + 1):
        a = float(analytic.eigenvalues[i])
        v = float(decomp.eigenvalues[i])
        rows.append([i, a, v, abs(a - v)])
    return Table(columns=["index", "analytic", "numeric", "abs_error"], rows=rows)


def _cmd_bifurcation(parser, args) -> Table:
    rep = find_bifurcation(
        args.g0, args.g1, args.bosons, _single_phase(parser, args),
        grid_points=args.points,
    )
    return Table(
        columns=[
            "critical_ratio", "peak_gamma_below", "peak_gamma_above_left",
            "peak_gamma_above_right", "max_concurrence_at_critical",
            "gamma_tilde_at_critical",
        ],
        rows=[[
            rep.critical_ratio, rep.peak_gamma_below, rep.peak_gammas_above[0],
            rep.peak_gammas_above[1], rep.max_concurrence_at_critical,
            rep.gamma_tilde_at_critical,
        ]],
    )


def _cmd_extremal(parser, args) -> Table:
    params = TwoModeParams(args.g0, args.g1, args.g01, args.bosons)
    ext = extremal_states(params, _single_phase(parser, args))
    rows = []
    for which, cs, label, stride in (
        ("fastest", ext.fastest, ext.fastest_label, params.bosons),
        ("slowest", ext.slowest, ext.slowest_label, 1),
    ):
        c = concurrence(FockState(params.bosons, cs.fock_amplitudes))
        rows.append([which, label, 0, stride, 2, cs.gamma_tilde, c])
    return Table(
        columns=["which", "label", "base_index", "stride", "count",
                 "gamma_tilde", "concurrence_at_zero"],
        rows=rows,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orthokit",
        description="Orthogonality times, speed bounds and mode entanglement.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="speed bounds of a comb state")
    _add_comb_source_flags(p)
    _add_output_flags(p, "json")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("trace", help="sample a quantity along the orbit")
    _add_comb_source_flags(p)
    p.add_argument("--quantity", default="survival",
                   choices=("survival", "relative_entropy", "resultant_norm"))
    p.add_argument("--points", type=_count_ge2, default=1001,
                   help="number of grid points (default 1001)")
    p.add_argument("--gamma-max", type=_positive_float, default=None,
                   help="end of the gamma grid (default: one recurrence period)")
    _add_output_flags(p, "csv")
    p.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("figure", help="emit the dataset behind a canned figure")
    p.add_argument("name", choices=("fig3", "fig5", "fig6"))
    p.add_argument("--points", type=_count_ge2, default=1001,
                   help="grid points (fig3/fig6) or largest comb count (fig5)")
    p.add_argument("--bosons", type=_positive_int, default=2)
    p.add_argument("--g0", type=float, default=0.0)
    p.add_argument("--g1", type=float, default=1.0)
    p.add_argument("--phases", type=float, nargs="+", metavar="PHI")
    _add_output_flags(p, "csv")
    p.set_defaults(handler=_cmd_figure)

    p = sub.add_parser("spectrum", help="two-mode eigenvalue ladder")
    p.add_argument("--bosons", type=_positive_int, required=True)
    p.add_argument("--g0", type=float, default=0.0)
    p.add_argument("--g1", type=float, default=1.0)
    p.add_argument("--g01", type=float, default=0.0)
    _add_output_flags(p, "csv")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("bifurcation", help="concurrence peak-splitting threshold")
    p.add_argument("--bosons", type=_positive_int, default=2)
    p.add_argument("--g0", type=float, default=0.0)
    p.add_argument("--g1", type=float, default=1.0)
    p.add_argument("--phases", type=float, nargs="+", metavar="PHI")
    p.add_argument("--points", type=_count_ge2, default=2001,
                   help="profile grid points per period (odd, default 2001)")
    _add_output_flags(p, "json")
    p.set_defaults(handler=_cmd_bifurcation)

    p = sub.add_parser("extremal", help="fastest and slowest two-component combs")
    p.add_argument("--bosons", type=_positive_int, required=True)
    p.add_argument("--g0", type=float, default=0.0)
    p.add_argument("--g1", type=float, default=1.0)
    p.add_argument("--g01", type=float, default=0.0)
    p.add_argument("--phases", type=float, nargs="+", metavar="PHI")
    _add_output_flags(p, "json")
    p.set_defaults(handler=_cmd_extremal)

    return parser


def _cell_csv(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _cell_json(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    return value


def _render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(table.columns)]
        lines.extend(",".join(_cell_csv(v) for v in row) for row in table.rows)
        return "\n".join(lines) + "\n"
    payload = {
        "columns": table.columns,
        "rows": [[_cell_json(v) for v in row] for row in table.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".orthokit-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        table = args.handler(parser, args)
    except SystemExit as exc:  # parser.error inside a handler
        return int(exc.code or 0)
    except OrthokitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = _render(table, args.format)
    if args.out:
        _write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
