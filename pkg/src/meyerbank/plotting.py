"""SVG polyline plots of frequency functions, with a CSV sidecar of the samples."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import InvalidArgument
from .serialize import fmt_float
from .synthesis import composite_frequency_functions


class PlotMode(str, Enum):
    VALUE = "value"
    MODULUS = "modulus"


@dataclass
class Curve:
    func: object
    label: str
    color: str = "black"


@dataclass
class PlotSpec:
    curves: list
    range: tuple = (-math.pi, math.pi)
    samples: int = 1201
    mode: PlotMode = PlotMode.VALUE
    title: str = ""

    def __post_init__(self):
        self.mode = PlotMode(self.mode)
        if self.samples < 2:
            raise InvalidArgument("a plot needs at least 2 samples")
        lo, hi = self.range
        if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
            raise InvalidArgument(f"empty plot range {self.range}")
        if not self.curves:
            raise InvalidArgument("nothing to plot")


def grid(spec: PlotSpec) -> np.ndarray:
    return np.linspace(spec.range[0], spec.range[1], spec.samples)


def sample(spec: PlotSpec) -> tuple[np.ndarray, np.ndarray]:
    """``(w, values)`` with ``values[i]`` the i-th curve on ``w``.

    ``value`` mode keeps the real part, ``modulus`` mode the absolute value.
    """
    w = grid(spec)
    rows = []
    for c in spec.curves:
        v = np.broadcast_to(np.asarray(c.func(w)), w.shape)
        rows.append(np.abs(v) if spec.mode is PlotMode.MODULUS else np.real(v))
    return w, np.asarray(rows, dtype=float)


def write_csv(spec: PlotSpec, path) -> None:
    w, vals = sample(spec)
    header = ",".join(["omega"] + [c.label for c in spec.curves])
    lines = [header]
    for i, wi in enumerate(w):
        lines.append(",".join([fmt_float(wi)] + [fmt_float(v) for v in vals[:, i]]))
    Path(path).write_text("\n".join(lines) + "\n")


def read_csv(path) -> tuple[list[str], np.ndarray]:
    lines = Path(path).read_text().splitlines()
    header = lines[0].split(",")
    data = np.array([[float(t) for t in line.split(",")] for line in lines[1:]])
    return header, data


def _pi_label(frac: Fraction) -> str:
    if frac == 0:
        return "0"
    num, den = frac.numerator, frac.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    head = "π" if num == 1 else f"{num}π"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


def render_svg(spec: PlotSpec, width: int = 720, height: int = 400) -> str:
    w, vals = sample(spec)
    left, right, top, bottom = 60, 20, 30, 50
    pw, ph = width - left - right, height - top - bottom
    lo, hi = spec.range
    ymin = min(0.0, float(vals.min()))
    ymax = max(1.0, float(vals.max()))
    if ymax - ymin < 1e-12:
        ymax = ymin + 1.0
    span = ymax - ymin
    ymin, ymax = ymin - 0.05 * span, ymax + 0.05 * span

    def px(x):
        return left + (x - lo) / (hi - lo) * pw

    def py(y):
        return top + (ymax - y) / (ymax - ymin) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if spec.title:
        out.append(f'<text x="{width / 2:.1f}" y="18" text-anchor="middle" font-family="sans-serif" font-size="13">{spec.title}</text>')
    out.append(f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="#444" stroke-width="1"/>')

    step = math.pi / 6
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    for i in range(first, last + 1):
        x = px(i * step)
        out.append(f'<line x1="{x:.2f}" y1="{top + ph}" x2="{x:.2f}" y2="{top + ph + 5}" stroke="#444"/>')
        if (last - first) <= 24 or i % 2 == 0:
            out.append(
                f'<text x="{x:.2f}" y="{top + ph + 18}" text-anchor="middle" font-family="sans-serif" '
                f'font-size="10">{_pi_label(Fraction(i, 6))}</text>'
            )
    for y in np.linspace(0.0, 1.0, 5) if ymin <= 0 and ymax >= 1 else np.linspace(ymin, ymax, 5):
        yy = py(y)
        out.append(f'<line x1="{left - 5}" y1="{yy:.2f}" x2="{left}" y2="{yy:.2f}" stroke="#444"/>')
        out.append(f'<text x="{left - 8}" y="{yy + 3:.2f}" text-anchor="end" font-family="sans-serif" font-size="10">{y:.2f}</text>')
    if ymin < 0 < ymax:
        out.append(f'<line x1="{left}" y1="{py(0):.2f}" x2="{left + pw}" y2="{py(0):.2f}" stroke="#bbb" stroke-dasharray="3,3"/>')

    for c, v in zip(spec.curves, vals):
        pts = " ".join(f"{px(a):.2f},{py(b):.2f}" for a, b in zip(w, v))
        out.append(f'<polyline fill="none" stroke="{c.color}" stroke-width="1.5" points="{pts}"/>')
    for i, c in enumerate(spec.curves):
        y = top + 14 + 16 * i
        out.append(f'<line x1="{left + pw - 110}" y1="{y}" x2="{left + pw - 85}" y2="{y}" stroke="{c.color}" stroke-width="2"/>')
        out.append(f'<text x="{left + pw - 80}" y="{y + 4}" font-family="sans-serif" font-size="11">{c.label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_plot(spec: PlotSpec, svg_path) -> Path:
    """Write the SVG and its ``.csv`` sidecar; returns the sidecar path."""
    svg_path = Path(svg_path)
    svg_path.write_text(render_svg(spec))
    csv_path = svg_path.with_suffix(".csv")
    write_csv(spec, csv_path)
    return csv_path


COLORS = ("red", "blue", "green")


def preset(name: str, samples: int = 1201) -> PlotSpec:
    """``fig1``: H^{00}, H^{01}, H^{02}; ``fig2``: moduli of H^{10}, H^{11}, H^{12};
    both for the 6-band bank built from a 3-band outer and 2-band inner bank.
    ``constant``: the function 1.
    """
    if name == "constant":
        return PlotSpec([Curve(lambda w: np.ones_like(np.asarray(w, dtype=float)), "one", "black")], samples=samples)
    funcs = composite_frequency_functions(3, 2)
    if name == "fig1":
        curves = [Curve(funcs[l], f"H0{l}", COLORS[l]) for l in range(3)]
        return PlotSpec(curves, samples=samples, mode=PlotMode.VALUE, title="H^{0l}(w) = G^l(2w) H^0(w)")
    if name == "fig2":
        curves = [Curve(funcs[3 + l], f"H1{l}", COLORS[l]) for l in range(3)]
        return PlotSpec(curves, samples=samples, mode=PlotMode.MODULUS, title="|H^{1l}(w)| = |G^l(2w) H^1(w)|")
    raise InvalidArgument(f"unknown preset {name!r}")
