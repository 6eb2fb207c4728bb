"""Command-line entry point: ``hermortho {zeros,verify,classical,bessel,sweep}``.

Exit codes: 0 success/pass, 1 an orthogonality check failed, 2 usage error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bessel import bessel_orthogonality, bessel_zeros
from .errors import ConvergenceError, HermorthoError
from .hermite import N_MAX
from .orthogonality import ZERO_TOL, classical_norm, classical_orthogonality, gram_matrix
from .quadrature import M_CAP
from .report import bessel_csv, bessel_to_dict, dumps, format_float, report_to_csv, report_to_json
from .roots import hermite_zeros

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
OUTPUT_DIR_ENV = "HERMORTHO_OUTPUT_DIR"


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    format: str = "human"
    out: str | None = None
    tol: float = ZERO_TOL
    quad_tol: float = 1e-12
    quad_cap: int = M_CAP

    def __post_init__(self):
        if not (self.tol > 0 and self.quad_tol > 0):
            raise UsageError("tolerances must be positive")


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


def _sci(x: float) -> str:
    return f"{x:.3e}"


def cmd_zeros(cfg: RunConfig, n: int) -> int:
    if not 1 <= n <= N_MAX:
        raise UsageError(f"--n must be in [1, {N_MAX}] (H_0 has no zeros)")
    zs = hermite_zeros(n)
    if cfg.format == "json":
        text = dumps({"n": n, "zeros": list(zs.zeros)}) + "\n"
    elif cfg.format == "csv":
        text = "j,zero\n" + "".join(f"{j},{format_float(z)}\n" for j, z in enumerate(zs.zeros, 1))
    else:
        text = f"zeros of H_{n}\n" + "".join(f"{j:4d}  {z: .17g}\n" for j, z in enumerate(zs.zeros, 1))
    _emit(cfg, text)
    return EXIT_OK


def _human_report(report) -> str:
    lines = [f"H_{report.n}  b={report.b:g}  interval={report.interval.value}",
             f"{'i':>3} {'j':>3}  {'kind':<15} {'integral':>12} {'scale':>12} {'residual':>12}  verdict"]
    for p in report.pairs:
        lines.append(f"{p.i:>3} {p.j:>3}  {p.kind.value:<15} {_sci(p.integral):>12} {_sci(p.scale):>12} "
                     f"{_sci(p.relative_residual):>12}  {p.verdict}")
    if report.note:
        lines.append(f"note: {report.note}")
    verdict = "PASS" if report.passed else ("ERROR" if not report.converged else "FAIL")
    lines.append(f"{verdict}: {len(report.nonsymmetric)} non-symmetric pairs, "
                 f"worst residual {_sci(report.worst_residual)}")
    return "\n".join(lines) + "\n"


def _report_exit(report) -> int:
    if not report.converged:
        return EXIT_NUMERIC
    return EXIT_OK if report.passed else EXIT_FAIL


def _check_n(n: int, lo: int = 3) -> None:
    if not lo <= n <= N_MAX:
        raise UsageError(f"--n must be in [{lo}, {N_MAX}]")


def _check_positive(name: str, v: float) -> None:
    if not (math.isfinite(v) and v > 0):
        raise UsageError(f"{name} must be positive and finite")


def cmd_verify(cfg: RunConfig, n: int, b: float, interval: str) -> int:
    _check_n(n)
    _check_positive("--b", b)
    report = gram_matrix(n, b, interval, tol=cfg.tol, quad_tol=cfg.quad_tol)
    if cfg.format == "json":
        text = report_to_json(report)
    elif cfg.format == "csv":
        text = report_to_csv(report)
    else:
        text = _human_report(report)
    _emit(cfg, text)
    return _report_exit(report)


def cmd_classical(cfg: RunConfig, n: int, m: int) -> int:
    for name, v in (("--n", n), ("--m", m)):
        if not 0 <= v <= N_MAX:
            raise UsageError(f"{name} must be in [0, {N_MAX}]")
    value, expected = classical_orthogonality(n, m)
    if n == m:
        residual = abs(value - expected) / expected
    else:
        residual = abs(value) / math.sqrt(classical_norm(n) * classical_norm(m))
    ok = residual < cfg.tol
    if cfg.format == "json":
        text = dumps({"n": n, "m": m, "value": value, "expected": expected,
                      "relative_residual": residual, "verdict": "PASS" if ok else "FAIL"}) + "\n"
    elif cfg.format == "csv":
        text = ("n,m,value,expected,relative_residual,verdict\n"
                f"{n},{m},{format_float(value)},{format_float(expected)},{format_float(residual)},"
                f"{'PASS' if ok else 'FAIL'}\n")
    else:
        text = (f"int e^(-x^2) H_{n} H_{m} dx = {value:.17g}  (expected {expected:.17g})\n"
                f"{'PASS' if ok else 'FAIL'}: relative residual {_sci(residual)}\n")
    _emit(cfg, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bessel(cfg: RunConfig, nu: float, m: int, n: int, a: float) -> int:
    if not (math.isfinite(nu) and 0 <= nu <= 50):
        raise UsageError("--nu must be in [0, 50]")
    for name, v in (("--m", m), ("--n", n)):
        if not 1 <= v <= 20:
            raise UsageError(f"{name} must be in [1, 20]")
    _check_positive("--a", a)
    res = bessel_orthogonality(nu, m, n, a, cfg.quad_tol)
    zs = bessel_zeros(nu, max(m, n))
    if m == n:
        verdict = "N/A"
    else:
        verdict = "PASS" if res.residual < cfg.tol else "FAIL"
    doc = bessel_to_dict(nu, a, m, n, zs[m - 1], zs[n - 1], res, verdict)
    if cfg.format == "json":
        text = dumps(doc) + "\n"
    elif cfg.format == "csv":
        text = bessel_csv(doc)
    else:
        text = (f"int_0^{a:g} x J_{nu:g}(j_{m} x/a) J_{nu:g}(j_{n} x/a) dx = {res.value:.6e}"
                f"  scale {res.scale:.6e}  residual {_sci(res.residual)}\n{verdict}"
                + (" (diagonal: no orthogonality claim)" if m == n else "") + "\n")
    _emit(cfg, text)
    return EXIT_FAIL if verdict == "FAIL" else EXIT_OK


def _parse_b_list(text: str) -> list[float]:
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("--b needs at least one value")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise UsageError(f"--b: cannot parse {text!r}") from None
    for v in values:
        _check_positive("--b", v)
    return values


def cmd_sweep(cfg: RunConfig, n_min: int, n_max: int, b_list: list[float], intervals: list[str],
              out_dir: str) -> int:
    _check_n(n_min)
    _check_n(n_max)
    if n_min > n_max:
        raise UsageError("--n-min must not exceed --n-max")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    entries = []
    worst = 0.0
    passed = converged = True
    for n in range(n_min, n_max + 1):
        for b in b_list:
            for iv in intervals:
                report = gram_matrix(n, b, iv, tol=cfg.tol, quad_tol=cfg.quad_tol)
                name = f"report_n{n}_b{format(b, 'g')}_{iv}.json"
                (out / name).write_text(report_to_json(report))
                worst = max(worst, report.worst_residual)
                passed &= report.passed
                converged &= report.converged
                entries.append({"n": n, "b": float(b), "interval": iv, "file": name,
                                "worst_residual": report.worst_residual, "passed": report.passed,
                                "note": report.note})
    summary = {"n_min": n_min, "n_max": n_max, "b": [float(b) for b in b_list], "intervals": intervals,
               "tol": cfg.tol, "worst_residual": worst, "passed": passed and converged, "reports": entries}
    (out / "summary.json").write_text(dumps(summary) + "\n")
    cfg.out = None
    _emit(cfg, f"{'PASS' if passed else 'FAIL'}: {len(entries)} reports in {out}, "
               f"worst residual {_sci(worst)}\n")
    if not converged:
        return EXIT_NUMERIC
    return EXIT_OK if passed else EXIT_FAIL


def _add_format(p: argparse.ArgumentParser, with_out: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--format", choices=("json", "csv", "human"), default=None)
    g.add_argument("--json", dest="format", action="store_const", const="json")
    g.add_argument("--csv", dest="format", action="store_const", const="csv")
    g.add_argument("--human", dest="format", action="store_const", const="human")
    if with_out:
        p.add_argument("--out", "-o", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hermortho", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zeros", help="print the zeros of H_n")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("verify", help="check the finite-interval relation over all zero pairs of H_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", type=float, default=1.0)
    p.add_argument("--interval", choices=("full", "half"), default="full")
    p.add_argument("--tol", type=float, default=ZERO_TOL)
    p.add_argument("--quad-tol", type=float, default=1e-12)
    _add_format(p)

    p = sub.add_parser("classical", help="check int e^(-x^2) H_n H_m dx")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    _add_format(p)

    p = sub.add_parser("bessel", help="check int_0^a x J_nu(j_m x/a) J_nu(j_n x/a) dx")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--quad-tol", type=float, default=1e-12)
    _add_format(p)

    p = sub.add_parser("sweep", help="run verify over a grid and write one report per cell")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--b", default="0.5,1,2,5", help="comma-separated list")
    p.add_argument("--interval", choices=("full", "half", "both"), default="both")
    p.add_argument("--tol", type=float, default=ZERO_TOL)
    p.add_argument("--quad-tol", type=float, default=1e-12)
    p.add_argument("--out-dir", default=None, help=f"defaults to ${OUTPUT_DIR_ENV} or ./reports")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(args.command, getattr(args, "format", None) or "human", getattr(args, "out", None),
                        getattr(args, "tol", ZERO_TOL), getattr(args, "quad_tol", 1e-12))
        if args.command == "zeros":
            return cmd_zeros(cfg, args.n)
        if args.command == "verify":
            return cmd_verify(cfg, args.n, args.b, args.interval)
        if args.command == "classical":
            return cmd_classical(cfg, args.n, args.m)
        if args.command == "bessel":
            return cmd_bessel(cfg, args.nu, args.m, args.n, args.a)
        intervals = ["full", "half"] if args.interval == "both" else [args.interval]
        out_dir = args.out_dir or os.environ.get(OUTPUT_DIR_ENV) or "reports"
        return cmd_sweep(cfg, args.n_min, args.n_max, _parse_b_list(args.b), intervals, out_dir)
    except UsageError as exc:
        print(f"hermortho: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"hermortho: non-convergence: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (HermorthoError, ValueError) as exc:
        print(f"hermortho: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
