"""Infinite-support extreme correlated equilibria from circle rotations.

The construction places one line segment of support in each quadrant of the
strategy square.  Quadrants 2-4 carry the anti-diagonal / diagonal segments
{(-x, x)}, {(-x, -x)}, {(x, -x)} for x in [a, b); quadrant 1 carries the
graph of the interval rotation f(x) = ((x - a + alpha) mod (b - a)) + a,
which splits into two segments at the wrap point b - alpha.  The measure
weights arc length by 1/|x*y|.  When alpha/(b - a) is irrational the
rotation is uniquely ergodic and the equilibrium is extreme; when it is
rational the orbit of any point is periodic and the same construction
collapses to a finite staircase, which ties this module back to the exact
machinery.

Exactness is impossible here (alpha is irrational in the interesting case),
so this module works in floats and states tolerances; parameters given as
Fractions are kept exact for as long as the operation allows, and the
rational-orbit bridge is entirely exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import as_rational
from .cycles import CyclePattern


@dataclass(frozen=True)
class RotationParams:
    """Rotation interval [a, b) inside (0, 1) and step alpha in [0, b - a).

    ``irrational`` records whether alpha/(b - a) is irrational by
    construction (e.g. alpha = c/sqrt(5) with a, b, c rational); it cannot
    be verified from a float and is trusted metadata.  alpha = 0 is allowed
    as a degenerate test case: the measure is still an equilibrium, only
    extremality needs the irrational rotation.
    """

    a: object
    b: object
    alpha: object
    irrational: bool = False

    def __post_init__(self):
        if not 0 < self.a < self.b < 1:
            raise ValueError("need 0 < a < b < 1")
        if not 0 <= self.alpha < self.b - self.a:
            raise ValueError("need 0 <= alpha < b - a")

    @property
    def span(self):
        return self.b - self.a

    def is_exact(self) -> bool:
        return all(
            isinstance(v, (Fraction, int)) for v in (self.a, self.b, self.alpha)
        )

    @classmethod
    def sqrt5(cls, a=0.2, b=0.8, scale=1.0) -> "RotationParams":
        """alpha = scale / sqrt(5); irrational rotation number for rational scale."""
        return cls(float(a), float(b), float(scale) / math.sqrt(5.0), irrational=True)

    @classmethod
    def rational_rotation(cls, a, b, p: int, q: int) -> "RotationParams":
        """Exact parameters with rotation number p/q (alpha = span * (p mod q)/q)."""
        a, b = as_rational(a), as_rational(b)
        if q < 1:
            raise ValueError("q must be positive")
        alpha = (b - a) * Fraction(p % q, q)
        return cls(a, b, alpha, irrational=False)


def _wrap(params: RotationParams, offset):
    """Map a + (offset mod span) into [a, b), guarding float rounding.

    Python's % can round up to the modulus, and the final addition can
    round up to b; both guards are unreachable for exact rationals.
    """
    a, b, span = params.a, params.b, params.span
    r = offset % span
    if r >= span:
        r -= span
    out = r + a
    if out >= b:
        out = math.nextafter(float(b), float(a))
    return out


def rotation_map(params: RotationParams, x):
    """One rotation step on [a, b); exact when params and x are Fractions."""
    if not params.a <= x < params.b:
        raise ValueError(f"x = {x} lies outside the rotation interval [a, b)")
    return _wrap(params, x - params.a + params.alpha)


def rotation_map_inverse(params: RotationParams, x):
    if not params.a <= x < params.b:
        raise ValueError(f"x = {x} lies outside the rotation interval [a, b)")
    return _wrap(params, x - params.a - params.alpha)


def support_segments(params: RotationParams) -> list:
    """The five support segments as ((x0, y0), (x1, y1)) endpoint pairs.

    Order: quadrant-4 anti-diagonal, quadrant-3 diagonal, quadrant-2
    anti-diagonal, then the two quadrant-1 rotation-graph pieces (below and
    above the wrap).  With alpha = 0 the second piece degenerates to a
    point.
    """
    a, b, alpha = params.a, params.b, params.alpha
    return [
        ((a, -a), (b, -b)),
        ((-a, -a), (-b, -b)),
        ((-a, a), (-b, b)),
        ((a, a + alpha), (b - alpha, b)),
        ((b - alpha, a), (b, a + alpha)),
    ]


def _f(v):
    return float(v)


class SegmentMeasure:
    """The support curves with density 1/|x*y| against arc parameter x.

    Each quadrant is parameterized by x in [a, b); the induced weight per
    unit parameter is 1/(x * f(x)) in quadrant 1 and 1/x^2 elsewhere, which
    is bounded by 1/a^2 on the whole support.
    """

    def __init__(self, params: RotationParams):
        self.params = params
        self._fp = _float_params(params)

    def segments(self) -> list:
        return support_segments(self.params)

    def density(self, x: float, y: float) -> float:
        return 1.0 / abs(x * y)

    def density_bound(self) -> float:
        return 1.0 / _f(self.params.a) ** 2

    def point(self, quadrant: int, x: float) -> tuple[float, float]:
        """Point of the quadrant curve at parameter x."""
        if quadrant == 1:
            return (x, rotation_map(self._fp, x))
        if quadrant == 2:
            return (-x, x)
        if quadrant == 3:
            return (-x, -x)
        if quadrant == 4:
            return (x, -x)
        raise ValueError("quadrant must be 1..4")

    def parameter_weight(self, quadrant: int, x: float) -> float:
        px, py = self.point(quadrant, x)
        return self.density(px, py)

    def quadrant_masses(self, quad_points: int = 10_000) -> list[float]:
        p = _float_params(self.params)
        a, b, alpha = p.a, p.b, p.alpha
        span = p.span
        q1 = _midpoint(lambda x: 1.0 / (x * (x + alpha)), a, b - alpha, quad_points)
        q1 += _midpoint(
            lambda x: 1.0 / (x * (x + alpha - span)), b - alpha, b, quad_points
        )
        other = _midpoint(lambda x: 1.0 / (x * x), a, b, quad_points)
        return [q1, other, other, other]


def _float_params(params: RotationParams) -> RotationParams:
    if isinstance(params.a, float):
        return params
    return RotationParams(
        _f(params.a), _f(params.b), _f(params.alpha), params.irrational
    )


def _midpoint(f, lo: float, hi: float, n: int) -> float:
    """Composite midpoint rule; empty or inverted intervals contribute 0."""
    if hi <= lo:
        return 0.0
    xs = lo + (np.arange(n) + 0.5) * (hi - lo) / n
    return float(np.sum(f(xs)) * (hi - lo) / n)


def _rotate_array(p: RotationParams, xs: np.ndarray) -> np.ndarray:
    r = (xs - p.a + p.alpha) % p.span
    r[r >= p.span] -= p.span
    out = r + p.a
    out[out >= p.b] = math.nextafter(float(p.b), float(p.a))
    return out


def conditional_mean_residuals(
    params: RotationParams, bins: int, quad_points: int
) -> tuple[float, float]:
    """Max per-bin residual of the two conditional-mean projections.

    Splits each axis of [-1, 1] into equal bins A and integrates, along the
    support curves, the opponent coordinate against the measure restricted
    to {own coordinate in A}.  Both projections vanish analytically: the
    quadrant-1/4 and quadrant-2/3 contributions cancel pointwise for the
    x-axis projection, and the quadrant-1 contribution to the y-axis
    projection equals the quadrant-2 one after the measure-preserving
    change of variables y = f(x).  Preimages under f are resolved exactly
    into subintervals before quadrature, so the returned residuals measure
    only quadrature error.
    """
    if bins < 1:
        raise ValueError("bins must be at least 1")
    if quad_points < 10:
        raise ValueError("quad_points must be at least 10")
    p = _float_params(params)
    a, b, alpha = p.a, p.b, p.alpha
    span = p.span
    edges = np.linspace(-1.0, 1.0, bins + 1)

    def over(lo, hi, f):
        return _midpoint(f, lo, hi, quad_points)

    inv_x = lambda x: 1.0 / x  # noqa: E731 - tiny local integrand

    max_x = 0.0
    max_y = 0.0
    for i in range(bins):
        c, d = float(edges[i]), float(edges[i + 1])

        # x-axis projection: own coordinate is x
        res_x = 0.0
        lo, hi = max(a, c), min(b, d)  # positive-side parameter interval
        res_x += over(lo, hi, inv_x)  # quadrant 1: y * w = +1/x
        res_x -= over(lo, hi, inv_x)  # quadrant 4: y * w = -1/x
        lo, hi = max(a, -d), min(b, -c)  # own coordinate -x in [c, d)
        res_x += over(lo, hi, inv_x)  # quadrant 2: y * w = +1/x
        res_x -= over(lo, hi, inv_x)  # quadrant 3: y * w = -1/x
        max_x = max(max_x, abs(res_x))

        # y-axis projection: own coordinate is y
        res_y = 0.0
        # quadrant 1: x * w = 1/f(x) on the exact preimage of [c, d)
        lo, hi = max(a, c - alpha), min(b - alpha, d - alpha)
        res_y += over(lo, hi, lambda x: 1.0 / (x + alpha))
        lo, hi = max(b - alpha, c - alpha + span), min(b, d - alpha + span)
        res_y += over(lo, hi, lambda x: 1.0 / (x + alpha - span))
        # quadrant 2: x * w = -1/x where y = x lands in the bin
        lo, hi = max(a, c), min(b, d)
        res_y -= over(lo, hi, inv_x)
        # quadrants 3 and 4: y = -x in the bin; x * w = -1/x and +1/x
        lo, hi = max(a, -d), min(b, -c)
        res_y -= over(lo, hi, inv_x)
        res_y += over(lo, hi, inv_x)
        max_y = max(max_y, abs(res_y))
    return max_x, max_y


def sample(params: RotationParams, n: int, seed: int) -> np.ndarray:
    """n independent draws from the normalized measure; reproducible by seed.

    A quadrant is chosen with probability proportional to its mass, then
    the parameter x is rejection-sampled on [a, b) against the quadrant's
    weight with the constant envelope 1/a^2.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    p = _float_params(params)
    a, b = p.a, p.b
    sm = SegmentMeasure(p)
    masses = np.asarray(sm.quadrant_masses())
    probs = masses / masses.sum()
    rng = np.random.default_rng(seed)
    quadrants = rng.choice(4, size=n, p=probs) + 1
    envelope = sm.density_bound()
    out = np.empty((n, 2), dtype=float)
    for quadrant in (1, 2, 3, 4):
        idx = np.flatnonzero(quadrants == quadrant)
        need = idx.size
        if need == 0:
            continue
        accepted: list[np.ndarray] = []
        got = 0
        while got < need:
            batch = max(128, int((need - got) * 1.5))
            xs = rng.uniform(a, b, size=batch)
            us = rng.uniform(0.0, 1.0, size=batch)
            if quadrant == 1:
                ys = _rotate_array(p, xs)
                weight = 1.0 / (xs * ys)
            else:
                weight = 1.0 / (xs * xs)
            keep = xs[us <= weight / envelope]
            accepted.append(keep)
            got += keep.size
        xs = np.concatenate(accepted)[:need]
        if quadrant == 1:
            pts = np.column_stack([xs, _rotate_array(p, xs)])
        elif quadrant == 2:
            pts = np.column_stack([-xs, xs])
        elif quadrant == 3:
            pts = np.column_stack([-xs, -xs])
        else:
            pts = np.column_stack([xs, -xs])
        out[idx] = pts
    return out


def equidistribution_check(params: RotationParams, n_orbit: int, bins: int) -> float:
    """Relative deviation of the orbit's bin frequencies from uniform.

    Iterates the rotation from x = a for n_orbit steps, bins the orbit over
    [a, b), and returns max over bins of |frequency * bins - 1|.  This tends
    to 0 for irrational rotation numbers and stays >= 1 for any rational
    rotation number with denominator below the bin count (the periodic
    orbit leaves bins empty).
    """
    if bins < 1:
        raise ValueError("bins must be at least 1")
    if n_orbit < bins * bins:
        raise ValueError("n_orbit must be at least bins^2")
    p = _float_params(params)
    a, span = p.a, p.span
    counts = np.zeros(bins, dtype=np.int64)
    x = a
    for _ in range(n_orbit):
        i = int((x - a) / span * bins)
        if i >= bins:
            i = bins - 1
        counts[i] += 1
        x = rotation_map(p, x)
    freq = counts / float(n_orbit)
    return float(np.max(np.abs(freq * bins - 1.0)))


def rational_orbit_to_cycle(params: RotationParams, x0) -> CyclePattern:
    """Exact staircase pattern carried by a periodic rotation orbit.

    Requires exact rational parameters.  With rotation number p/q in lowest
    terms the orbit of x0 has period exactly q, and following the support
    cycle quadrant by quadrant yields a valid staircase with k = 2q whose
    4q points are one orbit point per quadrant visit.
    """
    if not params.is_exact():
        raise ValueError("rational_orbit_to_cycle needs exact rational parameters")
    x0 = as_rational(x0)
    rho = Fraction(as_rational(params.alpha), as_rational(params.span))
    q = rho.denominator
    orbit = [x0]
    x = x0
    for _ in range(q - 1):
        x = rotation_map(params, x)
        if x in orbit:
            raise RuntimeError("orbit period is shorter than the rotation denominator")
        orbit.append(x)
    if rotation_map(params, orbit[-1]) != x0:
        raise RuntimeError("orbit does not close after q steps")

    xs: list[Fraction] = []
    ys: list[Fraction] = []
    for t in range(q):
        o, o_next = orbit[t], orbit[(t + 1) % q]
        xs.extend([o, o, -o_next, -o_next])
        ys.extend([-o, o_next, o_next, -o_next])
    return CyclePattern(tuple(xs), tuple(ys))


def quadrant_cycle_map(params: RotationParams, point, clockwise: bool = False):
    """Step a support point to the next quadrant's support point.

    Counter-clockwise (the default) sends quadrant 4 to 1 (applying the
    rotation to the x parameter), 1 to 2, 2 to 3 and 3 to 4; the clockwise
    variant is its inverse.  Exact for exact inputs.  Points on the axes
    are rejected.
    """
    x, y = point
    if x * y == 0:
        raise ValueError("the quadrant map is undefined on the axes")
    if not clockwise:
        if x > 0 and y < 0:
            return (x, rotation_map(params, x))
        if x > 0 and y > 0:
            return (-y, y)
        if x < 0 and y > 0:
            return (x, x)
        return (-y, y)
    if x > 0 and y > 0:
        return (x, -x)
    if x < 0 and y > 0:
        return (rotation_map_inverse(params, y), y)
    if x < 0 and y < 0:
        return (x, -y)
    return (-x, y)
