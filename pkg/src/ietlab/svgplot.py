"""Deterministic SVG emission for experiment CSVs.

Hand-rolled markup: fixed viewbox, no timestamps, floats printed with %.6g,
so byte-identical reruns produce byte-identical files.
"""

from __future__ import annotations

import csv
import math
from typing import Optional

from .exactnum import parse_exact

__all__ = ["BadCsv", "emit_plot"]

_W, _H = 800, 500
_ML, _MR, _MT, _MB = 70, 20, 20, 45


class BadCsv(ValueError):
    """The CSV is empty or lacks the columns the plot kind needs."""


def _f(x: float) -> str:
    return f"{x:.6g}"


def _cell(v: str) -> float:
    try:
        return float(v)
    except ValueError:
        return parse_exact(v).to_float()


def _read_csv(path: str) -> tuple[list[str], list[dict]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        rows = list(reader)
        header = reader.fieldnames or []
    if not rows:
        raise BadCsv(f"{path}: no data rows")
    return header, rows


def _scale(lo: float, hi: float, size: float, margin0: float):
    span = (hi - lo) or 1.0

    def to_px(v: float) -> float:
        return margin0 + (v - lo) / span * size

    return to_px


def emit_plot(csv_path: str, kind: str, out_path: str, hline: Optional[float] = None,
              hline_label: str = "") -> str:
    """Render a trace, histogram, or loglog plot; returns the output path."""
    header, rows = _read_csv(csv_path)
    if kind == "trace":
        body = _trace_body(header, rows, hline, hline_label)
    elif kind == "histogram":
        body = _histogram_body(header, rows)
    elif kind == "loglog":
        body = _loglog_body(header, rows)
    else:
        raise ValueError(f"unknown plot kind {kind!r}")
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}">\n'
        f'<rect width="{_W}" height="{_H}" fill="white"/>\n'
        + body
        + "</svg>\n"
    )
    with open(out_path, "w", newline="\n") as fh:
        fh.write(svg)
    return out_path


def _axis_frame() -> str:
    x0, y0 = _ML, _H - _MB
    x1, y1 = _W - _MR, _MT
    return (
        f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}" stroke="black"/>\n'
        f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{y1}" stroke="black"/>\n'
    )


def _trace_body(header, rows, hline, hline_label) -> str:
    need = {"sample_id", "horizon", "running_min"}
    if not need <= set(header):
        raise BadCsv(f"trace plot needs columns {sorted(need)}")
    pts = [(r["sample_id"], math.log10(float(r["horizon"])), _cell(r["running_min"])) for r in rows]
    xs = [p[1] for p in pts]
    ys = [p[2] for p in pts] + ([hline] if hline is not None else [])
    tox = _scale(min(xs), max(xs), _W - _ML - _MR, _ML)
    toy_lo, toy_hi = min(ys), max(ys)
    toy = _scale(toy_lo, toy_hi, -(_H - _MT - _MB), _H - _MB)
    out = [_axis_frame()]
    series: dict = {}
    for sid, x, y in pts:
        series.setdefault(sid, []).append((x, y))
    for sid in sorted(series):
        path = " ".join(f"{_f(tox(x))},{_f(toy(y))}" for x, y in series[sid])
        out.append(f'<polyline fill="none" stroke="steelblue" stroke-width="1" points="{path}"/>\n')
    if hline is not None:
        ypix = toy(hline)
        out.append(
            f'<line x1="{_ML}" y1="{_f(ypix)}" x2="{_W - _MR}" y2="{_f(ypix)}" '
            'stroke="crimson" stroke-dasharray="6,3"/>\n'
        )
        label = hline_label or _f(hline)
        out.append(
            f'<text x="{_W - _MR - 4}" y="{_f(ypix - 5)}" text-anchor="end" '
            f'font-size="13" fill="crimson">{label}</text>\n'
        )
    out.append(
        f'<text x="{(_ML + _W - _MR) // 2}" y="{_H - 10}" text-anchor="middle" '
        'font-size="13">log10 horizon</text>\n'
    )
    return "".join(out)


def _histogram_body(header, rows) -> str:
    need = {"bin_lo", "bin_hi", "count"}
    if not need <= set(header):
        raise BadCsv(f"histogram plot needs columns {sorted(need)}")
    bars = [(float(r["bin_lo"]), float(r["bin_hi"]), int(r["count"])) for r in rows]
    cmax = max(c for _, _, c in bars) or 1
    n = len(bars)
    bw = (_W - _ML - _MR) / n
    out = [_axis_frame()]
    for i, (_, _, c) in enumerate(bars):
        h = (c / cmax) * (_H - _MT - _MB)
        x = _ML + i * bw
        y = _H - _MB - h
        out.append(
            f'<rect x="{_f(x)}" y="{_f(y)}" width="{_f(bw * 0.9)}" height="{_f(h)}" '
            'fill="steelblue"/>\n'
        )
    return "".join(out)


def _loglog_body(header, rows) -> str:
    cols = set(header)
    if {"n", "value"} <= cols:
        xk, yk = "n", "value"
    elif {"n", "card"} <= cols:
        xk, yk = "n", "card"
    else:
        raise BadCsv("loglog plot needs columns n,value or n,card")
    pts = sorted((math.log(_cell(r[xk])), math.log(max(_cell(r[yk]), 1e-300))) for r in rows)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    # least squares fit
    m = len(pts)
    xb = sum(xs) / m
    yb = sum(ys) / m
    denom = sum((x - xb) ** 2 for x in xs) or 1.0
    slope = sum((x - xb) * (y - yb) for x, y in pts) / denom
    intercept = yb - slope * xb
    tox = _scale(min(xs), max(xs), _W - _ML - _MR, _ML)
    toy = _scale(min(ys), max(ys), -(_H - _MT - _MB), _H - _MB)
    out = [_axis_frame()]
    for x, y in pts:
        out.append(f'<circle cx="{_f(tox(x))}" cy="{_f(toy(y))}" r="3" fill="steelblue"/>\n')
    yfit0 = intercept + slope * min(xs)
    yfit1 = intercept + slope * max(xs)
    out.append(
        f'<line x1="{_f(tox(min(xs)))}" y1="{_f(toy(yfit0))}" '
        f'x2="{_f(tox(max(xs)))}" y2="{_f(toy(yfit1))}" stroke="crimson"/>\n'
    )
    out.append(
        f'<text x="{_ML + 8}" y="{_MT + 16}" font-size="13" fill="crimson">'
        f"slope = {_f(slope)}</text>\n"
    )
    out.append(
        f'<text x="{(_ML + _W - _MR) // 2}" y="{_H - 10}" text-anchor="middle" '
        'font-size="13">log n</text>\n'
    )
    return "".join(out)
