"""
Command-line interface.

Subcommands
-----------
coeff       one coefficient by one method (or ``--method all``)
crosscheck  every applicable method plus the largest relative spread
table       regenerate benchmark set 2, 3 or 4 as CSV
field       ring-source field on a grid from a sampled source profile

Numbers are printed with 10 significant digits.  ``--json`` switches to one
JSON object per line.  Exit status: 0 success, 2 invalid geometry or
malformed input, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings
from typing import Iterable, Sequence

import numpy as np

from .benchmarks import BENCHMARKS
from .coeffs import METHODS, compute_all, compute_coefficient, max_spread
from .errors import ConvergenceError, DomainError, OnRingError
from .hyper2d import MethodReport, SeriesPolicy
from .params import RingConfig
from .ringfield import DEFAULT_MODES, analyze_source, ring_solution_detailed

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONVERGENCE = 3


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".10g")
    return str(v)


class _Writer:
    """CSV (header + rows) or JSON Lines output with fixed column order."""

    def __init__(self, columns: Sequence[str], as_json: bool, stream=None):
        self.columns = list(columns)
        self.as_json = as_json
        self.stream = stream or sys.stdout
        self._csv = None
        if not as_json:
            self._csv = csv.writer(self.stream, lineterminator="\r\n")
            self._csv.writerow(self.columns)

    def row(self, record: dict) -> None:
        if self.as_json:
            obj = {}
            for c in self.columns:
                v = record.get(c)
                if isinstance(v, np.bool_):
                    v = bool(v)
                elif isinstance(v, (float, np.floating)):
                    v = float(_fmt(v)) if math.isfinite(v) else None
                elif isinstance(v, np.integer):
                    v = int(v)
                obj[c] = v
            self.stream.write(json.dumps(obj) + "\n")
        else:
            self._csv.writerow([_fmt(record.get(c)) for c in self.columns])


COEFF_COLUMNS = ["method", "m", "beta_re", "beta_im", "r", "R", "z", "Z", "re", "im",
                 "plus_re", "plus_im", "minus_re", "minus_im", "terms_used", "est_error", "converged"]


def _coeff_record(cfg: RingConfig, rep: MethodReport) -> dict:
    rec = {
        "method": rep.method, "m": cfg.m, "beta_re": cfg.beta.real, "beta_im": cfg.beta.imag,
        "r": cfg.r, "R": cfg.R, "z": cfg.z, "Z": cfg.Z,
        "re": rep.value.real, "im": rep.value.imag,
        "terms_used": rep.terms_used, "est_error": rep.est_error, "converged": rep.converged,
    }
    if rep.plus is not None:
        rec["plus_re"], rec["plus_im"] = rep.plus.real, rep.plus.imag
    if rep.minus is not None:
        rec["minus_re"], rec["minus_im"] = rep.minus.real, rep.minus.imag
    return rec


def _policy(args) -> SeriesPolicy | None:
    if getattr(args, "tol", None) is not None:
        return SeriesPolicy(rel_tol=args.tol)
    return SeriesPolicy.from_env()


def _config(args) -> RingConfig:
    return RingConfig(args.m, complex(args.beta, args.beta_im), args.r, args.R, args.z, args.Z)


def _cmd_coeff(args) -> int:
    cfg = _config(args)
    if args.method == "all":
        return _run_all(cfg, args)
    rep = compute_coefficient(cfg, args.method, _policy(args))
    _Writer(COEFF_COLUMNS, args.json).row(_coeff_record(cfg, rep))
    return EXIT_OK if rep.converged else EXIT_CONVERGENCE


def _run_all(cfg: RingConfig, args) -> int:
    reports = compute_all(cfg, _policy(args))
    out = _Writer(COEFF_COLUMNS + ["error"], args.json)
    for name, rep in reports.items():
        if isinstance(rep, MethodReport):
            out.row(_coeff_record(cfg, rep))
        else:
            out.row({"method": name, "m": cfg.m, "beta_re": cfg.beta.real, "beta_im": cfg.beta.imag,
                     "r": cfg.r, "R": cfg.R, "z": cfg.z, "Z": cfg.Z, "converged": False,
                     "error": str(rep)})
    ok = {k: v for k, v in reports.items() if isinstance(v, MethodReport) and v.converged}
    spread = max_spread(ok)
    print(f"max_spread={_fmt(spread)} over {len(ok)} converged methods", file=sys.stderr)
    limit = getattr(args, "spread_tol", None)
    if limit is not None and spread > limit:
        return EXIT_CONVERGENCE
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    return _run_all(_config(args), args)


def _cmd_table(args) -> int:
    bench = BENCHMARKS[args.which]
    policy = SeriesPolicy(rel_tol=args.tol) if args.tol is not None else bench.policy
    status = EXIT_OK
    if args.which == "2":
        cols = ["m", "beta", "r", "z", "N1", "N2", "re", "im", "est_error", "method", "converged"]
    elif args.which == "3":
        cols = ["z", "N1", "re", "im", "est_error", "method", "converged"]
    else:
        cols = ["z", "N2", "re", "im", "est_error", "method", "converged"]
    out = _Writer(cols, args.json)
    for row in bench.rows:
        cfg = row.config
        rec = {"m": cfg.m, "beta": cfg.beta.real, "r": cfg.r, "z": cfg.z}
        try:
            rep = compute_coefficient(cfg, bench.method, policy)
        except ConvergenceError as exc:
            print(f"z={_fmt(cfg.z)}: {exc}", file=sys.stderr)
            rec.update(method=bench.method, converged=False)
            out.row(rec)
            status = EXIT_CONVERGENCE
            continue
        count = "N1" if bench.method == "hankel" else "N2"
        rec.update({count: rep.terms_used, "re": rep.value.real, "im": rep.value.imag,
                    "est_error": rep.est_error, "method": rep.method, "converged": rep.converged})
        if args.which == "2":
            # Legendre count only when that series converges at this row
            try:
                leg = compute_coefficient(cfg, "legendre", policy)
                if leg.converged:
                    rec["N2"] = leg.terms_used
            except ConvergenceError:
                pass
        if not rep.converged:
            status = EXIT_CONVERGENCE
        out.row(rec)
    return status


def _parse_axis(text: str) -> np.ndarray:
    """'a,b,c' list or 'start:stop:num' inclusive linear range."""
    try:
        if ":" in text:
            a, b, n = text.split(":")
            return np.linspace(float(a), float(b), int(n))
        return np.array([float(t) for t in text.split(",")])
    except ValueError as exc:
        raise DomainError(f"bad grid specification {text!r}") from exc


def read_source(path: str) -> tuple[np.ndarray, float]:
    """Samples f(phi_j) and phi_0 from a CSV of (phi, f) on a uniform periodic grid.

    A non-numeric first row is treated as a header.
    """
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if r and any(c.strip() for c in r)]
    except OSError as exc:
        raise DomainError(f"cannot read source file: {exc}") from exc
    if rows:
        try:
            float(rows[0][0])
        except ValueError:
            rows = rows[1:]
    try:
        data = np.array([[float(r[0]), float(r[1])] for r in rows])
    except (ValueError, IndexError) as exc:
        raise DomainError("source file must contain numeric (phi, f) pairs") from exc
    if data.shape[0] < 1 or not np.all(np.isfinite(data)):
        raise DomainError("source file has no finite samples")
    phi, f = data[:, 0], data[:, 1]
    n = phi.size
    step = 2.0 * math.pi / n
    if not np.allclose(phi - phi[0], step * np.arange(n), rtol=0, atol=1e-9):
        raise DomainError("source samples must lie on a uniform grid phi_0 + 2 pi j / N")
    return f, float(phi[0])


FIELD_COLUMNS = ["r", "phi", "z", "re", "im", "on_ring", "methods", "est_error"]


def _cmd_field(args) -> int:
    f, phi0 = read_source(args.source)
    M = args.M if args.M is not None else max(0, min(DEFAULT_MODES, (f.size - 4) // 4))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        src = analyze_source(f, M, phi0=phi0)
    if f.size < 4 * M + 4:
        print(f"warning: {f.size} samples for M = {M}; modes may alias", file=sys.stderr)
    beta = complex(args.beta, args.beta_im)
    out = _Writer(FIELD_COLUMNS, args.json)
    status = EXIT_OK
    policy = _policy(args)
    for r in _parse_axis(args.r):
        for phi in _parse_axis(args.phi):
            for z in _parse_axis(args.z):
                rec = {"r": r, "phi": phi, "z": z}
                try:
                    res = ring_solution_detailed(src, beta, r, phi, z, args.R, args.Z, args.method, policy)
                except OnRingError:
                    rec.update(re=math.nan, im=math.nan, on_ring=True, methods="", est_error=math.nan)
                    out.row(rec)
                    continue
                methods = sorted({rep.method for rep in res.reports})
                est = sum(abs(rep.est_error) * abs(w) for rep, w in zip(res.reports, _weights(src, phi)))
                rec.update(re=res.value.real, im=res.value.imag, on_ring=False,
                           methods="|".join(methods), est_error=est + res.tail_estimate)
                if not all(rep.converged for rep in res.reports):
                    status = EXIT_CONVERGENCE
                out.row(rec)
    return status


def _weights(src, phi: float) -> Iterable[float]:
    for m in range(src.M + 1):
        eps = 1 if m == 0 else 2
        yield 0.5 * eps * (src.a[m] * math.cos(m * phi) + src.b[m] * math.sin(m * phi))


def _add_geometry(p: argparse.ArgumentParser, need_m: bool = True) -> None:
    if need_m:
        p.add_argument("-m", type=int, required=True, help="azimuthal mode")
    p.add_argument("--beta", type=float, required=True, help="real part of the wavenumber")
    p.add_argument("--beta-im", type=float, default=0.0, help="imaginary part of the wavenumber")
    p.add_argument("-R", type=float, default=1.0, help="ring radius")
    p.add_argument("-Z", type=float, default=0.0, help="ring height")
    p.add_argument("--tol", type=float, default=None, help="series rel_tol (overrides RING_HELMHOLTZ_TOL)")
    p.add_argument("--json", action="store_true", help="JSON Lines output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ring-helmholtz",
                                     description="Azimuthal Fourier coefficients of the Helmholtz Green function.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="one coefficient")
    _add_geometry(p)
    p.add_argument("-r", type=float, required=True, help="field radius")
    p.add_argument("-z", type=float, required=True, help="field height")
    p.add_argument("--method", default="auto", choices=("auto", "all") + METHODS)
    p.set_defaults(func=_cmd_coeff, spread_tol=None)

    p = sub.add_parser("crosscheck", help="all applicable methods and their spread")
    _add_geometry(p)
    p.add_argument("-r", type=float, required=True)
    p.add_argument("-z", type=float, required=True)
    p.add_argument("--spread-tol", type=float, default=1e-8,
                   help="exit 3 if the relative spread exceeds this")
    p.set_defaults(func=_cmd_crosscheck)

    p = sub.add_parser("table", help="regenerate a benchmark table")
    p.add_argument("which", choices=sorted(BENCHMARKS))
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("field", help="ring-source field on a grid")
    _add_geometry(p, need_m=False)
    p.add_argument("--source", required=True, help="CSV of (phi, f) samples on a uniform grid")
    p.add_argument("-r", required=True, help="radii: list 'a,b' or range 'start:stop:num'")
    p.add_argument("--phi", default="0", help="azimuths, same syntax")
    p.add_argument("-z", required=True, help="heights, same syntax")
    p.add_argument("-M", type=int, default=None, help="highest mode (default min(40, (N-4)/4))")
    p.add_argument("--method", default="auto", choices=("auto",) + METHODS)
    p.set_defaults(func=_cmd_field)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
