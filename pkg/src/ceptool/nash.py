"""Extreme Nash equilibria of the bilinear game.

For payoff x*y the equilibrium condition collapses to "both marginal means
are zero", and the extreme points of each player's zero-mean simplex face
are the point mass at 0 (when 0 is a strategy) together with the unique
two-point mixtures on one negative and one positive strategy value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    FiniteGame,
    MixedStrategy,
    SupportError,
    format_rational,
    measure_mean,
)


@dataclass(frozen=True)
class NashPair:
    sigma: MixedStrategy
    tau: MixedStrategy

    def __post_init__(self):
        for name, m in (("sigma", self.sigma), ("tau", self.tau)):
            if not m.is_proper():
                raise ValueError(f"{name} must have total mass 1")
            if measure_mean(m) != 0:
                raise ValueError(f"{name} must have zero mean")


def is_nash(game: FiniteGame, sigma: MixedStrategy, tau: MixedStrategy) -> bool:
    """True iff both strategies are proper with exactly zero mean."""
    if not set(sigma.support()) <= set(game.cx):
        raise SupportError("sigma puts weight outside cx")
    if not set(tau.support()) <= set(game.cy):
        raise SupportError("tau puts weight outside cy")
    if not sigma.is_proper() or not tau.is_proper():
        raise ValueError("is_nash expects proper (mass-1) strategies")
    return measure_mean(sigma) == 0 and measure_mean(tau) == 0


def two_point_zero_mean(u: Fraction, v: Fraction) -> MixedStrategy:
    """The unique proper zero-mean mixture supported on {u, v}, u < 0 < v."""
    if not (u < 0 < v):
        raise ValueError(
            f"need a negative and a positive value, got {format_rational(u)}, "
            f"{format_rational(v)}"
        )
    alpha = v / (v - u)
    beta = -u / (v - u)
    return MixedStrategy({u: alpha, v: beta})


def extreme_zero_mean_strategies(values) -> list[MixedStrategy]:
    """Extreme points of the zero-mean strategies on one axis, sorted.

    Two-point mixtures come first in lexicographic (u, v) order, then the
    point mass at 0 if 0 is available.
    """
    vals = sorted(values)
    neg = [v for v in vals if v < 0]
    pos = [v for v in vals if v > 0]
    out = [two_point_zero_mean(u, v) for u in neg for v in pos]
    if any(v == 0 for v in vals):
        out.append(MixedStrategy({0: 1}))
    return out


def enumerate_extreme_nash(game: FiniteGame) -> list[NashPair]:
    """Every extreme pair, duplicate-free, in deterministic order."""
    sigmas = extreme_zero_mean_strategies(game.cx)
    taus = extreme_zero_mean_strategies(game.cy)
    return [NashPair(s, t) for s in sigmas for t in taus]


def count_extreme_nash(n: int) -> int:
    """Extreme-pair count for the symmetric game with n values per sign."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return n**4
