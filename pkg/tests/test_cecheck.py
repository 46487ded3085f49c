from fractions import Fraction

import numpy as np
import pytest

from ceptool.cecheck import (
    Integrand,
    find_ce_violation,
    is_ce_definition,
    is_ce_projection,
    projections,
)
from ceptool.core import (
    FiniteMeasure,
    HypothesisError,
    MixedStrategy,
    SupportError,
    example_game,
    product_measure,
)
from ceptool.cycles import cycle_measure, enumerate_extreme_ce, pattern_from_odd_values
from ceptool.nash import enumerate_extreme_nash
from ceptool.report import random_measure

UNIFORM_MP = FiniteMeasure({(x, y): Fraction(1, 4) for x in (-1, 1) for y in (-1, 1)})


def fig1_measure():
    return cycle_measure(
        pattern_from_odd_values(
            (Fraction(2, 5), Fraction(-3, 5)), (Fraction(1, 5), Fraction(-4, 5))
        )
    )


def test_uniform_matching_pennies_is_ce(mp_game):
    assert is_ce_definition(mp_game, UNIFORM_MP)
    assert is_ce_projection(mp_game, UNIFORM_MP)


def test_pure_profile_is_not_ce(mp_game):
    mu = FiniteMeasure({(1, 1): 1})
    witness = find_ce_violation(mp_game, mu)
    assert witness is not None
    assert witness.player == "Y"  # Y gains by deviating from 1 to -1
    assert witness.deviation == Fraction(-1)
    assert witness.gain == 2


def test_fig1_measure_is_ce(fig1_game):
    assert is_ce_definition(fig1_game, fig1_measure())
    assert is_ce_projection(fig1_game, fig1_measure())


def test_support_outside_grid_rejected(mp_game):
    bad = FiniteMeasure({(Fraction(1, 2), 1): 1})
    with pytest.raises(SupportError):
        is_ce_definition(mp_game, bad)
    with pytest.raises(SupportError):
        is_ce_projection(mp_game, bad)


def test_projections_examples():
    assert projections(UNIFORM_MP).is_zero()
    pair = projections(FiniteMeasure({(1, 1): 1}))
    assert pair.kx.atoms == {Fraction(1): Fraction(1)}
    assert not pair.is_zero()


def test_projection_of_k4_staircase_vanishes():
    mu = cycle_measure(
        pattern_from_odd_values(
            (Fraction(2, 5), Fraction(-2, 5), Fraction(3, 5), Fraction(-3, 5)),
            (Fraction(3, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(-3, 5)),
        )
    )
    assert projections(mu).is_zero()
    assert projections(mu, Integrand.OPPONENT).is_zero()


def test_extra_atom_breaks_projection(fig1_game):
    mu = fig1_measure() + FiniteMeasure({(Fraction(2, 5), Fraction(1, 5)): 1})
    assert not is_ce_projection(fig1_game, mu)
    pair = projections(mu)
    assert pair.kx[Fraction(2, 5)] == Fraction(2, 5) * Fraction(1, 5)


def test_axis_atom_violates_hypothesis():
    from ceptool.core import FiniteGame

    game = FiniteGame([-1, 0, 1], [-1, Fraction(1, 2), 1])
    mu = FiniteMeasure({(0, Fraction(1, 2)): 1})
    with pytest.raises(HypothesisError):
        is_ce_projection(game, mu)
    # the deviation route still applies
    assert isinstance(is_ce_definition(game, mu), bool)


def test_opponent_integrand_matches_payoff_integrand_verdict():
    rng = np.random.default_rng(2)
    game = example_game(2)
    for _ in range(200):
        mu = random_measure(game, rng)
        assert projections(mu, Integrand.XY).is_zero() == projections(
            mu, Integrand.OPPONENT
        ).is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_routes_agree_on_random_measures(n):
    rng = np.random.default_rng(20260810 + n)
    game = example_game(n)
    for _ in range(300):
        mu = random_measure(game, rng)
        assert is_ce_definition(game, mu) == is_ce_projection(game, mu)


def test_homogeneity_and_convexity(game_n2):
    measures = enumerate_extreme_ce(game_n2)
    rng = np.random.default_rng(9)
    for _ in range(50):
        i, j = rng.integers(0, len(measures), size=2)
        c = Fraction(int(rng.integers(1, 9)), int(rng.integers(1, 9)))
        scaled = measures[i].scaled(c)
        assert is_ce_definition(game_n2, scaled)
        lam = Fraction(int(rng.integers(0, 10)), 9)
        combo = measures[i].normalized().scaled(lam) + measures[j].normalized().scaled(1 - lam)
        assert combo.mass() == 1
        assert is_ce_definition(game_n2, combo)
        assert is_ce_projection(game_n2, combo)


def test_nash_products_are_ce(game_n2):
    for pair in enumerate_extreme_nash(game_n2):
        mu = product_measure(pair.sigma, pair.tau)
        assert is_ce_definition(game_n2, mu)
        assert is_ce_projection(game_n2, mu)


def test_witness_names_player_and_gain(mp_game):
    witness = find_ce_violation(mp_game, FiniteMeasure({(1, 1): 1}))
    text = witness.describe()
    assert "player Y" in text and "deviating" in text
