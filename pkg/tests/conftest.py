import os
from fractions import Fraction

import pytest

from ceptool import example_game, make_example_game, matching_pennies

BIG = pytest.mark.skipif(
    not os.environ.get("CEPTOOL_BIG"),
    reason="combinatorially heavy; set CEPTOOL_BIG=1 to run",
)


@pytest.fixture
def mp_game():
    return matching_pennies()


@pytest.fixture
def fig1_game():
    # 2x2 game whose unique extreme correlated equilibrium has the
    # staircase support on {0.4, -0.6} x {0.2, -0.8}
    return make_example_game(
        [Fraction(-3, 5)], [Fraction(2, 5)], [Fraction(-4, 5)], [Fraction(1, 5)]
    )


@pytest.fixture
def game_n2():
    return example_game(2)
