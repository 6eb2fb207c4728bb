"""Canonical JSON and CSV emission for orthogonality reports.

Floats are written with 17 significant digits (always with a '.' or an
exponent so they parse back as floats); keys keep insertion order. Parsing
an emitted document and dumping it again reproduces it byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
import math
from collections.abc import Mapping

from .orthogonality import OrthoReport

__all__ = [
    "CSV_COLUMNS",
    "format_float",
    "dumps",
    "report_to_dict",
    "report_to_json",
    "report_to_csv",
    "bessel_to_dict",
    "bessel_csv",
    "BESSEL_CSV_COLUMNS",
]

CSV_COLUMNS = (
    "n", "b", "interval", "i", "j", "alpha_i", "alpha_j", "kind",
    "integral", "scale", "relative_residual", "quad_error", "verdict",
)
BESSEL_CSV_COLUMNS = (
    "nu", "a", "m", "n", "alpha_m", "alpha_n", "kind",
    "integral", "scale", "relative_residual", "quad_error", "verdict",
)


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite float {x!r}")
    s = format(x, ".17g")
    if "." not in s and "e" not in s and "n" not in s:
        s += ".0"
    return s


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """Serialize dict/list/str/int/float/bool/None with fixed float formatting."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Mapping):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report_to_dict(report: OrthoReport) -> dict:
    return {
        "n": report.n,
        "b": float(report.b),
        "interval": report.interval.value,
        "note": report.note,
        "pairs": [
            {
                "i": p.i,
                "j": p.j,
                "kind": p.kind.value,
                "integral": float(p.integral),
                "scale": float(p.scale),
                "relative_residual": float(p.relative_residual),
                "quadrature_error": float(p.quad_error),
                "verdict": p.verdict,
            }
            for p in report.pairs
        ],
    }


def report_to_json(report: OrthoReport) -> str:
    return dumps(report_to_dict(report)) + "\n"


def _csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_float(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def report_to_csv(report: OrthoReport) -> str:
    rows = [
        (report.n, float(report.b), report.interval.value, p.i, p.j, float(p.alpha_i), float(p.alpha_j),
         p.kind.value, float(p.integral), float(p.scale), float(p.relative_residual), float(p.quad_error),
         p.verdict)
        for p in report.pairs
    ]
    return _csv(CSV_COLUMNS, rows)


def bessel_to_dict(nu, a, m, n, alpha_m, alpha_n, result, verdict) -> dict:
    """Bessel run in the OrthoReport layout; (nu, m, n, a) stand in for (n, i, j, b)."""
    return {
        "nu": float(nu),
        "a": float(a),
        "note": "diagonal: no orthogonality claim" if m == n else "",
        "pairs": [
            {
                "m": m,
                "n": n,
                "alpha_m": float(alpha_m),
                "alpha_n": float(alpha_n),
                "kind": "DIAGONAL" if m == n else "DISTINCT",
                "integral": float(result.value),
                "scale": float(result.scale),
                "relative_residual": float(result.residual),
                "quadrature_error": float(result.quad_error),
                "verdict": verdict,
            }
        ],
    }


def bessel_csv(doc: dict) -> str:
    rows = [
        (doc["nu"], doc["a"], p["m"], p["n"], p["alpha_m"], p["alpha_n"], p["kind"], p["integral"],
         p["scale"], p["relative_residual"], p["quadrature_error"], p["verdict"])
        for p in doc["pairs"]
    ]
    return _csv(BESSEL_CSV_COLUMNS, rows)
