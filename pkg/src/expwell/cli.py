"""Command line surface: spectra, reference tables, figure data, verification.

Subcommands: ``spectrum``, ``tables``, ``potential``, ``wavefunction``,
``verify``.  All file output is deterministic (LF endings, fixed decimal
formatting), so repeated runs are byte-identical.  Exit codes: 0 on
success, 1 when verification fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from . import laguerre_basis as lb
from . import tra, verify

FIG_POTENTIAL_AMINUS = (-4.0, 0.0, 4.0, 6.0, 8.0, 10.0)
TABLE1_AMINUS = (8.0, 6.0, 4.0)
TABLE2_APLUS = (0.0, 4.0, 8.0, 12.0)
DEFAULT_K = 100
DEFAULT_NU = 0.0
WAVEFUNCTION_STATES = 6


@dataclass
class RunConfig:
    lam: float = 1.0
    aminus: float = 8.0
    aplus: float = 2.0
    method: str = "tra"
    nu: float = DEFAULT_NU
    k: int = DEFAULT_K
    xmin: float = -5.0
    xmax: float = 10.0
    points: int = 1501
    out: Optional[str] = None
    fmt: str = "csv"

    def params(self) -> tra.PotentialParams:
        return tra.PotentialParams(self.lam, self.aminus, self.aplus)

    def grid(self) -> np.ndarray:
        if self.points < 2:
            raise ValueError("grid needs at least 2 points")
        return np.linspace(self.xmin, self.xmax, self.points)


def fmt6(x: float) -> str:
    """Fixed 6-decimal cell; negative zero normalized away."""
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _write_text(out: Optional[str], text: str) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_bytes(text.encode("ascii"))


def _laguerre_count(p: tra.PotentialParams, k: int) -> int:
    cap = tra.tra_capacity(p.aminus)
    return min(k, cap + 1) if cap >= 1 else min(k, 8)


def _spectrum_for(method: str, cfg: RunConfig) -> tra.Spectrum:
    p = cfg.params()
    if method == "morse":
        return tra.morse_spectrum(cfg.lam, cfg.aminus)
    if method == "tra":
        return tra.tra_spectrum(p)
    if method == "laguerre":
        count = _laguerre_count(p, cfg.k)
        return lb.laguerre_spectrum(
            p, lb.LaguerreBasisConfig(cfg.nu, cfg.k), count
        )
    raise ValueError(f"unknown method {method!r}")


def cmd_spectrum(cfg: RunConfig) -> int:
    if cfg.method == "both":
        p = cfg.params()
        s_tra = tra.tra_spectrum(p)
        n_levels = s_tra.energies.size
        if n_levels == 0:
            _write_text(cfg.out, "n,energy_tra,energy_laguerre,abs_diff\n# note: empty spectrum (no representable bound states)\n")
            return 0
        s_lag = lb.laguerre_spectrum(
            p, lb.LaguerreBasisConfig(cfg.nu, cfg.k), n_levels
        )
        if cfg.fmt == "json":
            payload = {
                "tra": [float(v) for v in s_tra.energies],
                "laguerre": [float(v) for v in s_lag.energies],
                "abs_diff": [
                    float(abs(a - b))
                    for a, b in zip(s_tra.energies, s_lag.energies)
                ],
            }
            _write_text(cfg.out, json.dumps(payload, indent=2) + "\n")
            return 0
        lines = ["n,energy_tra,energy_laguerre,abs_diff"]
        for n in range(n_levels):
            diff = abs(s_tra.energies[n] - s_lag.energies[n])
            lines.append(
                f"{n},{fmt6(s_tra.energies[n])},{fmt6(s_lag.energies[n])},{diff:.3e}"
            )
        _write_text(cfg.out, "\n".join(lines) + "\n")
        return 0

    spect = _spectrum_for(cfg.method, cfg)
    if cfg.fmt == "json":
        payload = {
            "method": spect.method,
            "energies": [float(v) for v in spect.energies],
            "meta": {k: v for k, v in spect.meta.items()},
        }
        _write_text(cfg.out, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = ["n,method,energy"]
    if spect.energies.size == 0:
        lines.append("# note: empty spectrum (no representable bound states)")
    for n, energy in enumerate(spect.energies):
        lines.append(f"{n},{spect.method},{fmt6(energy)}")
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0


def _column_table(header: list[str], columns: list[np.ndarray], rows: int) -> str:
    lines = [",".join(header)]
    for n in range(rows):
        cells = [str(n)]
        for col in columns:
            cells.append(fmt6(col[n]) if n < col.size else "")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def cmd_tables(outdir: str) -> int:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)

    cols = [
        tra.tra_spectrum(tra.PotentialParams(1.0, am, 2.0)).energies
        for am in TABLE1_AMINUS
    ]
    header = ["n"] + [f"Aminus={am:g}" for am in TABLE1_AMINUS]
    (out / "table1.csv").write_bytes(
        _column_table(header, cols, max(c.size for c in cols)).encode("ascii")
    )

    rows2 = tra.tra_capacity(6.0)
    cols = [
        tra.tra_spectrum(tra.PotentialParams(1.0, 6.0, ap)).energies[:rows2]
        for ap in TABLE2_APLUS
    ]
    header = ["n"] + [f"Aplus={ap:g}" for ap in TABLE2_APLUS]
    (out / "table2.csv").write_bytes(
        _column_table(header, cols, rows2).encode("ascii")
    )

    basis = lb.LaguerreBasisConfig(DEFAULT_NU, DEFAULT_K)
    cols = [
        lb.laguerre_spectrum(tra.PotentialParams(1.0, am, 2.0), basis, 8).energies
        for am in TABLE1_AMINUS
    ]
    header = ["n"] + [f"Aminus={am:g}" for am in TABLE1_AMINUS]
    (out / "table3.csv").write_bytes(
        _column_table(header, cols, 8).encode("ascii")
    )

    cols = [
        lb.laguerre_spectrum(tra.PotentialParams(1.0, 6.0, ap), basis, 6).energies
        for ap in TABLE2_APLUS
    ]
    header = ["n"] + [f"Aplus={ap:g}" for ap in TABLE2_APLUS]
    (out / "table4.csv").write_bytes(
        _column_table(header, cols, 6).encode("ascii")
    )
    return 0


def cmd_potential(cfg: RunConfig, aminus_given: bool) -> int:
    x = cfg.grid()
    aminus_list = [cfg.aminus] if aminus_given else list(FIG_POTENTIAL_AMINUS)
    traces = [
        tra.potential_value(tra.PotentialParams(cfg.lam, am, cfg.aplus), x)
        for am in aminus_list
    ]
    lines = ["x," + ",".join(f"Aminus={am:g}" for am in aminus_list)]
    for i, xi in enumerate(x):
        cells = [f"{xi:.6f}"] + [f"{trace[i]:.12e}" for trace in traces]
        lines.append(",".join(cells))
    _write_text(cfg.out, "\n".join(lines) + "\n")
    return 0


def cmd_wavefunction(cfg: RunConfig) -> int:
    p = cfg.params()
    cap = tra.tra_capacity(p.aminus)
    if cap == 0:
        raise ValueError("no representable bound states for these parameters")
    n_states = min(WAVEFUNCTION_STATES, cap)
    x = cfg.grid()
    energies = lb.laguerre_spectrum(
        p, lb.LaguerreBasisConfig(cfg.nu, cfg.k), n_states
    ).energies
    states = [
        tra.tra_wavefunction(p, m, x, energy=float(energies[m]))
        for m in range(n_states)
    ]

    out = cfg.out or "wavefunction.csv"
    lines = ["x," + ",".join(f"psi{m}" for m in range(n_states))]
    for i, xi in enumerate(x):
        cells = [f"{xi:.6f}"] + [f"{s.psi[i]:.12e}" for s in states]
        lines.append(",".join(cells))
    Path(out).write_bytes(("\n".join(lines) + "\n").encode("ascii"))

    sidecar = {
        "energies": [float(e) for e in energies],
        "x": [float(v) for v in x],
        "potential": [float(v) for v in tra.potential_value(p, x)],
    }
    Path(out).with_suffix(".json").write_bytes(
        (json.dumps(sidecar, indent=2) + "\n").encode("ascii")
    )
    return 0


def cmd_verify(out: Optional[str]) -> int:
    checks = verify.run_checks()
    report = verify.report_json(checks)
    _write_text(out, json.dumps(report, indent=2) + "\n")
    return 0 if report["pass"] else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expwell",
        description="Bound states of the exponentially confining potential well",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, aminus_default=8.0, aplus_default=2.0,
                   out_help="output path (default stdout)"):
        sp.add_argument("--lambda", dest="lam", type=float, default=1.0,
                        help="length-scale parameter (atomic units)")
        sp.add_argument("--aminus", type=float, default=aminus_default,
                        help="attractive well-depth parameter")
        sp.add_argument("--aplus", type=float, default=aplus_default,
                        help="right-wall strength parameter (>= 0)")
        sp.add_argument("--nu", type=float, default=DEFAULT_NU,
                        help="Laguerre basis parameter (> -1)")
        sp.add_argument("--k", type=int, default=DEFAULT_K,
                        help="Laguerre basis size")
        sp.add_argument("--out", default=None, help=out_help)
        sp.add_argument("--format", dest="fmt", choices=("csv", "json"),
                        default="csv", help="output format")

    sp = sub.add_parser("spectrum", help="bound-state energies")
    add_common(sp)
    sp.add_argument("--method", choices=("tra", "laguerre", "morse", "both"),
                    default="tra")

    sp = sub.add_parser("tables", help="regenerate the four reference tables")
    sp.add_argument("--out", default=".", help="output directory")

    sp = sub.add_parser("potential", help="potential traces V(x)")
    add_common(sp, aminus_default=None)
    sp.add_argument("--xmin", type=float, default=-3.0)
    sp.add_argument("--xmax", type=float, default=4.0)
    sp.add_argument("--points", type=int, default=701)

    sp = sub.add_parser("wavefunction", help="synthesized bound states on a grid")
    add_common(sp, out_help="CSV path (default wavefunction.csv; JSON sidecar "
                            "written alongside)")
    sp.add_argument("--xmin", type=float, default=-5.0)
    sp.add_argument("--xmax", type=float, default=10.0)
    sp.add_argument("--points", type=int, default=1501)

    sp = sub.add_parser("verify", help="run the verification suite (JSON report)")
    sp.add_argument("--out", default=None, help="output path (default stdout)")
    sp.add_argument("--json", action="store_true",
                    help="emit JSON (always on; kept for scripting)")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "spectrum":
            cfg = RunConfig(lam=args.lam, aminus=args.aminus, aplus=args.aplus,
                            method=args.method, nu=args.nu, k=args.k,
                            out=args.out, fmt=args.fmt)
            return cmd_spectrum(cfg)
        if args.command == "tables":
            return cmd_tables(args.out)
        if args.command == "potential":
            aminus_given = args.aminus is not None
            cfg = RunConfig(lam=args.lam,
                            aminus=args.aminus if aminus_given else 8.0,
                            aplus=args.aplus, nu=args.nu, k=args.k,
                            xmin=args.xmin, xmax=args.xmax, points=args.points,
                            out=args.out, fmt=args.fmt)
            return cmd_potential(cfg, aminus_given)
        if args.command == "wavefunction":
            cfg = RunConfig(lam=args.lam, aminus=args.aminus, aplus=args.aplus,
                            nu=args.nu, k=args.k, xmin=args.xmin,
                            xmax=args.xmax, points=args.points, out=args.out,
                            fmt=args.fmt)
            return cmd_wavefunction(cfg)
        if args.command == "verify":
            return cmd_verify(args.out)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. | head); suppress the noise
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
