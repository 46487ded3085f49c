import math
import re
from fractions import Fraction

import pytest

from ceptool.cycles import cycle_measure
from ceptool.svgfig import (
    demo_pattern_k2,
    demo_pattern_k4,
    demo_rotation_params,
    pixel_to_data,
    render_pattern,
    render_rotation,
    render_support_dots,
    write_demo_figures,
)

SQRT5 = math.sqrt(5.0)
GEOM_TOL = 1e-9


def circles_in(svg):
    out = []
    for m in re.finditer(r'<circle cx="([^"]+)" cy="([^"]+)" r="([^"]+)"', svg):
        x, y = pixel_to_data(float(m.group(1)), float(m.group(2)))
        out.append((x, y, float(m.group(3))))
    return out


def segments_in(svg):
    out = []
    for m in re.finditer(
        r'<line x1="([^"]+)" y1="([^"]+)" x2="([^"]+)" y2="([^"]+)" stroke="#d73a49"',
        svg,
    ):
        p0 = pixel_to_data(float(m.group(1)), float(m.group(2)))
        p1 = pixel_to_data(float(m.group(3)), float(m.group(4)))
        out.append((p0, p1))
    return out


def closest(points, target):
    return min(points, key=lambda p: (p[0] - target[0]) ** 2 + (p[1] - target[1]) ** 2)


def test_k2_dot_geometry():
    svg = render_pattern(demo_pattern_k2())
    dots = circles_in(svg)
    assert len(dots) == 4
    for want in [(0.4, 0.2), (0.4, -0.8), (-0.6, -0.8), (-0.6, 0.2)]:
        got = closest(dots, want)
        assert abs(got[0] - want[0]) <= GEOM_TOL
        assert abs(got[1] - want[1]) <= GEOM_TOL


def test_k4_dot_geometry():
    svg = render_pattern(demo_pattern_k4())
    dots = circles_in(svg)
    assert len(dots) == 8
    for want in [
        (0.4, 0.6), (0.4, -0.4), (-0.4, -0.4), (-0.4, 0.4),
        (0.6, 0.4), (0.6, -0.6), (-0.6, -0.6), (-0.6, 0.6),
    ]:
        got = closest(dots, want)
        assert abs(got[0] - want[0]) <= GEOM_TOL
        assert abs(got[1] - want[1]) <= GEOM_TOL


def test_k4_support_matches_pattern_points():
    points = set(demo_pattern_k4().points())
    assert (Fraction(2, 5), Fraction(3, 5)) in points
    assert len(points) == 8


def test_rotation_segment_geometry():
    svg = render_rotation(demo_rotation_params())
    segs = segments_in(svg)
    assert len(segs) == 5
    al = 1 / SQRT5
    expected = [
        ((0.2, -0.2), (0.8, -0.8)),
        ((-0.2, -0.2), (-0.8, -0.8)),
        ((-0.2, 0.2), (-0.8, 0.8)),
        ((0.2, 0.2 + al), (0.8 - al, 0.8)),
        ((0.8 - al, 0.2), (0.8, 0.2 + al)),
    ]
    for got, want in zip(segs, expected):
        for g, w in zip(got, want):
            assert abs(g[0] - w[0]) <= GEOM_TOL
            assert abs(g[1] - w[1]) <= GEOM_TOL


def test_dot_area_proportional_to_weight():
    mu = cycle_measure(demo_pattern_k2())
    svg = render_pattern(demo_pattern_k2())
    dots = circles_in(svg)
    wmax = max(float(w) for _, w in mu.items())
    for (x, y), w in mu.items():
        dot = closest(dots, (float(x), float(y)))
        assert dot[2] == pytest.approx(14.0 * math.sqrt(float(w) / wmax), abs=1e-9)


def test_rendering_is_deterministic(tmp_path):
    assert render_pattern(demo_pattern_k2()) == render_pattern(demo_pattern_k2())
    assert render_rotation(demo_rotation_params()) == render_rotation(
        demo_rotation_params()
    )
    first = write_demo_figures(tmp_path / "a")
    second = write_demo_figures(tmp_path / "b")
    for name in first:
        assert first[name].read_bytes() == second[name].read_bytes()


def test_empty_measure_rejected():
    from ceptool.core import FiniteMeasure

    with pytest.raises(ValueError):
        render_support_dots(FiniteMeasure({}))
