"""Hand-emitted SVG support plots with byte-deterministic output.

The plots map the strategy square [-1, 1]^2 onto a fixed 512 x 512 viewbox
(x to the right, y upward), draw the axes, and show either a finitely
supported measure as dots with area proportional to weight or the
rotation-equilibrium support as line segments.  No plotting library is
involved, coordinates are written with a fixed number of decimals, and
iteration order is sorted, so rendering the same object twice produces
identical bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path

from .core import FiniteMeasure
from .cycles import CyclePattern, cycle_measure, pattern_from_odd_values
from .ergodic import RotationParams, support_segments

SIZE = 512
DOT_MAX_RADIUS = 14.0


def data_to_pixel(x: float, y: float) -> tuple[float, float]:
    return (SIZE / 2) * (x + 1.0), (SIZE / 2) * (1.0 - y)


def pixel_to_data(px: float, py: float) -> tuple[float, float]:
    return px / (SIZE / 2) - 1.0, 1.0 - py / (SIZE / 2)


def _fmt(v: float) -> str:
    s = f"{v:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def _header(title: str) -> list[str]:
    half = _fmt(SIZE / 2)
    full = _fmt(float(SIZE))
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f"<title>{title}</title>",
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<line x1="0" y1="{half}" x2="{full}" y2="{half}" '
        'stroke="#999999" stroke-width="1"/>',
        f'<line x1="{half}" y1="0" x2="{half}" y2="{full}" '
        'stroke="#999999" stroke-width="1"/>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="none" '
        'stroke="#222222" stroke-width="1"/>',
    ]


def render_support_dots(mu: FiniteMeasure, title: str = "support") -> str:
    """Dots at the support points, dot area proportional to atom weight."""
    atoms = list(mu.items())
    if not atoms:
        raise ValueError("cannot plot an empty measure")
    wmax = max(float(w) for _, w in atoms)
    lines = _header(title)
    for (x, y), w in atoms:
        px, py = data_to_pixel(float(x), float(y))
        radius = DOT_MAX_RADIUS * math.sqrt(float(w) / wmax)
        lines.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(radius)}" '
            'fill="#1f6feb" fill-opacity="0.85"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_support_segments(segments, title: str = "support") -> str:
    """Line segments given as ((x0, y0), (x1, y1)) pairs in data coordinates."""
    lines = _header(title)
    for (x0, y0), (x1, y1) in segments:
        p0 = data_to_pixel(float(x0), float(y0))
        p1 = data_to_pixel(float(x1), float(y1))
        lines.append(
            f'<line x1="{_fmt(p0[0])}" y1="{_fmt(p0[1])}" '
            f'x2="{_fmt(p1[0])}" y2="{_fmt(p1[1])}" '
            'stroke="#d73a49" stroke-width="2.5" stroke-linecap="round"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_pattern(p: CyclePattern, title: str = "staircase support") -> str:
    return render_support_dots(cycle_measure(p), title)


def render_rotation(params: RotationParams, title: str = "rotation support") -> str:
    return render_support_segments(support_segments(params), title)


# Reference objects for the three bundled demo plots: the unique staircase
# of the 2x2 game on {0.4, -0.6} x {0.2, -0.8}, an 8-point staircase on the
# symmetric 4x4 game, and the rotation support with step 1/sqrt(5) on
# [0.2, 0.8).


def demo_pattern_k2() -> CyclePattern:
    return pattern_from_odd_values(
        (Fraction(2, 5), Fraction(-3, 5)), (Fraction(1, 5), Fraction(-4, 5))
    )


def demo_pattern_k4() -> CyclePattern:
    return pattern_from_odd_values(
        (Fraction(2, 5), Fraction(-2, 5), Fraction(3, 5), Fraction(-3, 5)),
        (Fraction(3, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(-3, 5)),
    )


def demo_rotation_params() -> RotationParams:
    return RotationParams.sqrt5(0.2, 0.8, 1.0)


def write_demo_figures(outdir) -> dict:
    """Write the three demo SVGs; returns {name: path}."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    files = {
        "support_k2.svg": render_pattern(demo_pattern_k2(), "staircase support, k=2"),
        "support_k4.svg": render_pattern(demo_pattern_k4(), "staircase support, k=4"),
        "support_rotation.svg": render_rotation(
            demo_rotation_params(), "rotation-equilibrium support"
        ),
    }
    written = {}
    for name, text in files.items():
        path = outdir / name
        path.write_text(text, encoding="utf-8")
        written[name] = path
    return written
