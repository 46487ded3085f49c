"""Closed staircase supports and the extreme correlated equilibria they carry.

A cycle pattern is a pair of length-2k sequences (xs, ys), k even, where
consecutive entries pair up to trace a closed staircase in the strategy
square: x entries repeat in pairs (x2 = x1, x4 = x3, ...), y entries repeat
in shifted pairs (y2 = y3, y4 = y5, ..., y_{2k} = y1), the odd-position
values on each axis are distinct and alternate in sign, and no entry is
zero.  Weighting each staircase point (x, y) by 1/|x*y| yields an extreme
correlated equilibrium, and for games without a zero strategy every
finitely supported extreme correlated equilibrium arises this way.

Enumeration deduplicates patterns by a canonical form under the symmetry
group that fixes the induced measure (even cyclic shifts and reversal); the
count is then cross-checked against the closed-form series, which keeps the
two routes independent.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg
from .core import FiniteGame, FiniteMeasure, InvalidGameError


class PatternError(ValueError):
    """A sequence pair that does not satisfy the staircase conditions."""


@dataclass(frozen=True)
class CyclePattern:
    xs: tuple
    ys: tuple

    def __post_init__(self):
        xs, ys = self.xs, self.ys
        n = len(xs)
        if len(ys) != n:
            raise PatternError("xs and ys must have equal length")
        if n < 4 or n % 4 != 0:
            raise PatternError(
                "sequence length must be 2k for an even k >= 2, got "
                f"length {n}"
            )
        if any(v == 0 for v in xs) or any(v == 0 for v in ys):
            raise PatternError("all pattern entries must be nonzero")
        k = n // 2
        odd_x = xs[::2]
        odd_y = ys[::2]
        if len(set(odd_x)) != k:
            raise PatternError("odd-position x values must be distinct")
        if len(set(odd_y)) != k:
            raise PatternError("odd-position y values must be distinct")
        for i in range(k):
            if odd_x[i] * odd_x[(i + 1) % k] >= 0:
                raise PatternError("odd-position x values must alternate in sign")
            if odd_y[i] * odd_y[(i + 1) % k] >= 0:
                raise PatternError("odd-position y values must alternate in sign")
        for i in range(1, n, 2):
            if xs[i] != xs[i - 1]:
                raise PatternError(
                    "even-position x entries must repeat the preceding entry"
                )
            if ys[i] != ys[(i + 1) % n]:
                raise PatternError(
                    "even-position y entries must repeat the following entry"
                )

    @property
    def k(self) -> int:
        return len(self.xs) // 2

    def points(self) -> tuple:
        return tuple(zip(self.xs, self.ys))


def pattern_from_odd_values(odd_x, odd_y) -> CyclePattern:
    """Expand the odd-position values into a full validated pattern."""
    k = len(odd_x)
    if len(odd_y) != k:
        raise PatternError("odd-position value lists must have equal length")
    xs, ys = [], []
    for j in range(2 * k):
        if j % 2 == 0:
            xs.append(odd_x[j // 2])
            ys.append(odd_y[j // 2])
        else:
            xs.append(xs[j - 1])
            ys.append(odd_y[((j + 1) // 2) % k])
    return CyclePattern(tuple(xs), tuple(ys))


def cycle_measure(p: CyclePattern) -> FiniteMeasure:
    """Weight 1/|x*y| at every staircase point; support size exactly 2k."""
    atoms = {}
    for x, y in p.points():
        atoms[(x, y)] = 1 / abs(Fraction(x) * Fraction(y))
    if len(atoms) != 2 * p.k:
        raise PatternError("staircase points must be pairwise distinct")
    return FiniteMeasure(atoms)


def _transforms(p: CyclePattern):
    """All sequence pairs inducing the same measure: even shifts x reversal."""
    n = len(p.xs)
    for s in range(0, n, 2):
        sx = p.xs[s:] + p.xs[:s]
        sy = p.ys[s:] + p.ys[:s]
        yield sx, sy
        yield tuple(reversed(sx)), tuple(reversed(sy))


def canonical_form(p: CyclePattern) -> CyclePattern:
    """Lexicographically least equivalent pattern with xs[0] > 0, ys[0] > 0.

    Two patterns induce the same measure exactly when their canonical forms
    coincide.
    """
    best = min(t for t in _transforms(p) if t[0][0] > 0 and t[1][0] > 0)
    return CyclePattern(*best)


def _signed_interleave(pos_seq, neg_seq):
    return tuple(v for pair in zip(pos_seq, neg_seq) for v in pair)


def _patterns_for_r(axes, r: int) -> set:
    """Canonical forms of all staircases using r values per sign per axis."""
    pos_x, neg_x, pos_y, neg_y = axes
    found = set()
    for px in permutations(pos_x, r):
        for mx in permutations(neg_x, r):
            odd_x = _signed_interleave(px, mx)
            for py in permutations(pos_y, r):
                for my in permutations(neg_y, r):
                    odd_y = _signed_interleave(py, my)
                    p = pattern_from_odd_values(odd_x, odd_y)
                    c = canonical_form(p)
                    found.add((c.xs, c.ys))
    return found


def _split_axes(game: FiniteGame):
    if any(v == 0 for v in game.cx) or any(v == 0 for v in game.cy):
        raise InvalidGameError(
            "staircase enumeration requires a game without a zero strategy"
        )
    pos_x = tuple(v for v in game.cx if v > 0)
    neg_x = tuple(v for v in game.cx if v < 0)
    pos_y = tuple(v for v in game.cy if v > 0)
    neg_y = tuple(v for v in game.cy if v < 0)
    return pos_x, neg_x, pos_y, neg_y


def enumerate_patterns(game: FiniteGame, workers: int = 1) -> list[CyclePattern]:
    """All canonical staircase patterns of the game, sorted.

    Work for distinct support sizes r is independent; with workers > 1 the r
    values are fanned out to a process pool and the results merged, so the
    output is identical regardless of schedule.
    """
    axes = _split_axes(game)
    rmax = min(len(a) for a in axes)
    found: set = set()
    if workers > 1 and rmax > 1:
        with ProcessPoolExecutor(max_workers=min(workers, rmax)) as pool:
            for part in pool.map(_patterns_for_r, [axes] * rmax, range(1, rmax + 1)):
                found |= part
    else:
        for r in range(1, rmax + 1):
            found |= _patterns_for_r(axes, r)
    return [CyclePattern(xs, ys) for xs, ys in sorted(found)]


def enumerate_extreme_ce(game: FiniteGame, workers: int = 1) -> list[FiniteMeasure]:
    """Cycle measures of all canonical patterns, duplicate-free, sorted."""
    measures = {cycle_measure(p) for p in enumerate_patterns(game, workers)}
    return sorted(measures, key=lambda m: tuple(m.items()))


def count_extreme_ce(n: int) -> int:
    """Closed-form count: sum over r of (1/r) * (n!/(n-r)!)^4.

    The sum of rationals must reduce to an integer; that is asserted rather
    than assumed.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    total = Fraction(0)
    for r in range(1, n + 1):
        falling = Fraction(math.factorial(n), math.factorial(n - r))
        total += falling**4 / r
    if total.denominator != 1:
        raise AssertionError(f"count for n={n} is not an integer: {total}")
    return int(total)


def f_terms(n: int) -> list[Fraction]:
    """Terms of the normalized count f(n) = sum_s n/((n-s) * (s!)^4)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return [
        Fraction(n, (n - s)) / Fraction(math.factorial(s)) ** 4 for s in range(n)
    ]


def f_ratio(n: int) -> Fraction:
    """Exact ratio of the staircase count to its dominant term (1/n)(n!)^4."""
    dominant = Fraction(math.factorial(n)) ** 4 / n
    value = Fraction(count_extreme_ce(n)) / dominant
    assert value == sum(f_terms(n), Fraction(0))
    return value


def extremality_dimension(p: CyclePattern) -> int:
    """Dimension of the weight-rebalancing solution space; 1 means extreme.

    Any correlated equilibrium supported on the staircase must have atom
    weights a_i satisfying a_{2i-1} y_{2i-1} + a_{2i} y_{2i} = 0 (per shared
    x value) and a_{2i} x_{2i} + a_{2i+1} x_{2i+1} = 0 (per shared y value,
    cyclically).  A one-dimensional solution space pins the weights up to
    scale, which is exactly extremality of the induced ray.
    """
    n = len(p.xs)
    rows = []
    for i in range(0, n, 2):
        row = [Fraction(0)] * n
        row[i] = Fraction(p.ys[i])
        row[i + 1] = Fraction(p.ys[i + 1])
        rows.append(row)
    for i in range(1, n, 2):
        row = [Fraction(0)] * n
        row[i] = Fraction(p.xs[i])
        row[(i + 1) % n] = Fraction(p.xs[(i + 1) % n])
        rows.append(row)
    return linalg.nullspace_dimension(rows, n)


def pattern_from_support(points) -> CyclePattern | None:
    """Reconstruct a staircase pattern from a support set, if one exists.

    Walks the alternating shared-x / shared-y adjacency starting from the
    smallest point.  Returns None when the points do not form one closed
    staircase (wrong coordinate multiplicities, several disjoint cycles, or
    a walk that violates the pattern conditions).
    """
    pts = sorted(set(points))
    by_x: dict = {}
    by_y: dict = {}
    for x, y in pts:
        by_x.setdefault(x, []).append((x, y))
        by_y.setdefault(y, []).append((x, y))
    if any(len(v) != 2 for v in by_x.values()):
        return None
    if any(len(v) != 2 for v in by_y.values()):
        return None

    def x_partner(p):
        a, b = by_x[p[0]]
        return b if p == a else a

    def y_partner(p):
        a, b = by_y[p[1]]
        return b if p == a else a

    start = pts[0]
    walk = [start]
    cur, use_x = start, True
    for _ in range(len(pts) - 1):
        cur = x_partner(cur) if use_x else y_partner(cur)
        if cur in walk:
            return None
        walk.append(cur)
        use_x = not use_x
    # the walk must close with a shared-y step back to the start
    if use_x or y_partner(cur) != start:
        return None
    xs = tuple(p[0] for p in walk)
    ys = tuple(p[1] for p in walk)
    try:
        return CyclePattern(xs, ys)
    except PatternError:
        return None
