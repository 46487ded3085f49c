"""Exact correlated-equilibrium tests.

Two independent routes are implemented on purpose.  The deviation route
checks every per-recommendation incentive inequality directly.  The
projection route reduces the test, for measures giving no mass to the axes,
to "two signed projection measures vanish identically": projecting the
payoff-weighted measure x*y*mu (or just the opponent-coordinate-weighted
measure) onto each player's own axis must give the zero measure.  The two
routes must agree on every measure in the projection route's hypothesis
class, and the test suite checks that they do.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    FiniteGame,
    FiniteMeasure,
    HypothesisError,
    SignedFiniteMeasure,
    format_rational,
)


class Integrand(enum.Enum):
    """Weight used when projecting a joint measure onto one axis.

    XY weights an atom by the full payoff x*y; OPPONENT weights it by the
    other player's coordinate only (y when projecting onto the x axis, x
    when projecting onto the y axis).
    """

    XY = "xy"
    OPPONENT = "opponent"


@dataclass(frozen=True)
class ProjectionPair:
    kx: SignedFiniteMeasure
    ky: SignedFiniteMeasure

    def is_zero(self) -> bool:
        return self.kx.is_zero() and self.ky.is_zero()


@dataclass(frozen=True)
class DeviationWitness:
    """One violated incentive constraint: a profitable swap for one player."""

    player: str  # "X" or "Y"
    recommended: Fraction
    deviation: Fraction
    gain: Fraction  # strictly positive expected improvement from deviating

    def describe(self) -> str:
        return (
            f"player {self.player} recommended {format_rational(self.recommended)} "
            f"gains {format_rational(self.gain)} by deviating to "
            f"{format_rational(self.deviation)}"
        )


def find_ce_violation(game: FiniteGame, mu: FiniteMeasure) -> DeviationWitness | None:
    """First violated deviation inequality, or None when mu is an equilibrium.

    For each recommendation x of player X, deviating to x' changes X's
    conditional payoff by sum_y mu(x,y)(x'y - xy); an equilibrium requires
    that to be <= 0 for every x'.  Symmetrically for player Y with payoff
    -x*y.  All comparisons are exact.
    """
    game.require_support(mu)
    by_x: dict = {}
    by_y: dict = {}
    for (x, y), w in mu.items():
        by_x.setdefault(x, []).append((y, w))
        by_y.setdefault(y, []).append((x, w))
    for x in sorted(by_x):
        row = by_x[x]
        row_mass_y = sum((w * y for y, w in row), Fraction(0))
        payoff = x * row_mass_y  # sum_y mu(x,y) * x * y
        for xp in game.cx:
            if xp == x:
                continue
            gain = xp * row_mass_y - payoff
            if gain > 0:
                return DeviationWitness("X", x, xp, gain)
    for y in sorted(by_y):
        col = by_y[y]
        col_mass_x = sum((w * x for x, w in col), Fraction(0))
        payoff = -y * col_mass_x  # player Y's payoff is -x*y
        for yp in game.cy:
            if yp == y:
                continue
            gain = -yp * col_mass_x - payoff
            if gain > 0:
                return DeviationWitness("Y", y, yp, gain)
    return None


def is_ce_definition(game: FiniteGame, mu: FiniteMeasure) -> bool:
    """Deviation-inequality test, exact, valid for any supported measure."""
    return find_ce_violation(game, mu) is None


def projections(mu: FiniteMeasure, integrand: Integrand = Integrand.XY) -> ProjectionPair:
    """Signed one-axis projections of a weighted joint measure.

    With Integrand.XY the x-projection carries weight x*y*mu(x,y) per atom,
    with Integrand.OPPONENT it carries y*mu(x,y) (and the y-projection
    x*mu(x,y)).
    """
    px: dict = {}
    py: dict = {}
    for (x, y), w in mu.items():
        wx = x * y * w if integrand is Integrand.XY else y * w
        wy = x * y * w if integrand is Integrand.XY else x * w
        px[x] = px.get(x, Fraction(0)) + wx
        py[y] = py.get(y, Fraction(0)) + wy
    return ProjectionPair(SignedFiniteMeasure(px), SignedFiniteMeasure(py))


def is_ce_projection(game: FiniteGame, mu: FiniteMeasure) -> bool:
    """Projection test: both payoff-weighted projections vanish identically.

    Only valid for measures with no atom on the axes x = 0 or y = 0; such an
    atom raises HypothesisError and the caller should fall back to
    is_ce_definition.
    """
    game.require_support(mu)
    for (x, y), _ in mu.items():
        if x * y == 0:
            raise HypothesisError(
                f"atom at ({format_rational(x)}, {format_rational(y)}) has x*y = 0;"
                " the projection test does not apply"
            )
    return projections(mu, Integrand.XY).is_zero()
