from fractions import Fraction

import pytest

from ceptool.core import FiniteMeasure
from ceptool.cycles import cycle_measure, enumerate_patterns, pattern_from_odd_values
from ceptool.core import example_game
from ceptool.moments import (
    MomentBasis,
    caratheodory_split,
    moments_of,
    non_describability_demo,
)

UNIFORM_MP = FiniteMeasure({(x, y): Fraction(1, 4) for x in (-1, 1) for y in (-1, 1)})

FIG1 = cycle_measure(
    pattern_from_odd_values(
        (Fraction(2, 5), Fraction(-3, 5)), (Fraction(1, 5), Fraction(-4, 5))
    )
)
FIG2 = cycle_measure(
    pattern_from_odd_values(
        (Fraction(2, 5), Fraction(-2, 5), Fraction(3, 5), Fraction(-3, 5)),
        (Fraction(3, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(-3, 5)),
    )
)


def test_basis_parse_and_describe():
    b = MomentBasis.parse("1, x, y, xy, x^2*y")
    assert b.monomials == ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1))
    assert b.describe() == "1,x,y,xy,x^2y"
    with pytest.raises(ValueError):
        MomentBasis.parse("z")
    with pytest.raises(ValueError):
        MomentBasis(((-1, 0),))


def test_graded_basis_order():
    assert MomentBasis.graded(6).monomials == (
        (0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2),
    )


def test_moments_examples():
    basis = MomentBasis.parse("x,y,xy")
    assert moments_of(UNIFORM_MP, basis) == (0, 0, 0)
    assert moments_of(FiniteMeasure({(1, 1): 1}), MomentBasis.parse("x,y")) == (1, 1)
    # total mass of the reference 4-atom staircase: 25/2 + 25/8 + 25/12 + 25/3
    assert moments_of(FIG1, MomentBasis.parse("1")) == (Fraction(625, 24),)
    assert FIG1.mass() == Fraction(625, 24)


def test_split_three_atoms_on_a_line():
    mu = FiniteMeasure({(-1, 1): 1, (0, 1): 1, (1, 1): 1})
    basis = MomentBasis.parse("1,x")
    result = caratheodory_split(mu, basis)
    assert result is not None
    mu1, mu2 = result
    # null direction (1, -2, 1), symmetric step t = 1/2
    assert mu1.atoms == {(Fraction(-1), Fraction(1)): Fraction(3, 2),
                         (Fraction(1), Fraction(1)): Fraction(3, 2)}
    assert mu2.atoms == {(Fraction(-1), Fraction(1)): Fraction(1, 2),
                         (Fraction(0), Fraction(1)): Fraction(2),
                         (Fraction(1), Fraction(1)): Fraction(1, 2)}
    assert moments_of(mu1, basis) == moments_of(mu2, basis) == moments_of(mu, basis)


def test_single_atom_is_extreme_for_any_basis():
    mu = FiniteMeasure({(1, 1): 3})
    assert caratheodory_split(mu, MomentBasis.parse("1")) is None
    assert caratheodory_split(mu, MomentBasis.parse("1,x,y")) is None


def test_fig2_split_with_three_moments():
    basis = MomentBasis.parse("1,x,y")
    result = caratheodory_split(FIG2, basis)
    assert result is not None
    mu1, mu2 = result
    target = moments_of(FIG2, basis)
    assert moments_of(mu1, basis) == target
    assert moments_of(mu2, basis) == target
    assert mu1 != mu2
    assert mu1.mass() == mu2.mass() == FIG2.mass()


def check_split(mu, basis):
    result = caratheodory_split(mu, basis)
    assert result is not None, "split must exist when atoms exceed moment count"
    mu1, mu2 = result
    assert mu1.mass() > 0 and mu2.mass() > 0
    assert mu1 != mu2
    assert mu1.scaled(Fraction(1, 2)) + mu2.scaled(Fraction(1, 2)) == mu
    target = moments_of(mu, basis)
    assert moments_of(mu1, basis) == target and moments_of(mu2, basis) == target
    # boundary step: some atom vanished on one side
    assert min(len(mu1), len(mu2)) < len(mu)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_splits_exist_below_support_size(n):
    game = example_game(n)
    for p in enumerate_patterns(game):
        mu = cycle_measure(p)
        for d in range(1, min(len(mu), 9)):
            check_split(mu, MomentBasis.graded(d))
        if len(mu) <= 8:
            # with d >= atom count and independent rows, no split exists
            assert caratheodory_split(mu, MomentBasis.graded(12)) is None


@pytest.mark.parametrize("d", [1, 4, 100])
def test_demo_picks_smallest_sufficient_staircase(d):
    demo = non_describability_demo(d)
    assert 4 * demo.r > d >= 4 * (demo.r - 1)
    assert len(demo.measure) == 4 * demo.r
    assert demo.witness_dimension == 1
    assert "split" in demo.summary()


def test_demo_split_preserves_moments():
    demo = non_describability_demo(4)
    target = moments_of(demo.measure, demo.basis)
    assert moments_of(demo.mu1, demo.basis) == target
    assert moments_of(demo.mu2, demo.basis) == target
    assert demo.mu1.scaled(Fraction(1, 2)) + demo.mu2.scaled(Fraction(1, 2)) == demo.measure
