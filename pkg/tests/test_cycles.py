import math
from fractions import Fraction

import pytest

from ceptool.cecheck import is_ce_definition, is_ce_projection
from ceptool.core import example_game, product_measure
from ceptool.cycles import (
    CyclePattern,
    PatternError,
    canonical_form,
    count_extreme_ce,
    cycle_measure,
    enumerate_extreme_ce,
    enumerate_patterns,
    extremality_dimension,
    f_ratio,
    f_terms,
    pattern_from_odd_values,
    pattern_from_support,
)
from ceptool.nash import enumerate_extreme_nash

from conftest import BIG

FIG1_ODD = ((Fraction(2, 5), Fraction(-3, 5)), (Fraction(1, 5), Fraction(-4, 5)))
FIG2_ODD = (
    (Fraction(2, 5), Fraction(-2, 5), Fraction(3, 5), Fraction(-3, 5)),
    (Fraction(3, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(-3, 5)),
)


def test_cycle_measure_fig1_weights():
    mu = cycle_measure(pattern_from_odd_values(*FIG1_ODD))
    assert mu.atoms == {
        (Fraction(2, 5), Fraction(1, 5)): Fraction(25, 2),
        (Fraction(2, 5), Fraction(-4, 5)): Fraction(25, 8),
        (Fraction(-3, 5), Fraction(-4, 5)): Fraction(25, 12),
        (Fraction(-3, 5), Fraction(1, 5)): Fraction(25, 3),
    }


def test_cycle_measure_matching_pennies_uniform():
    mu = cycle_measure(pattern_from_odd_values((1, -1), (1, -1)))
    assert all(w == 1 for _, w in mu.items())
    assert len(mu) == 4


def test_cycle_measure_fig2_eight_atoms():
    mu = cycle_measure(pattern_from_odd_values(*FIG2_ODD))
    assert len(mu) == 8
    assert mu[(Fraction(2, 5), Fraction(3, 5))] == Fraction(25, 6)


def test_pattern_validation_errors():
    with pytest.raises(PatternError, match="nonzero"):
        pattern_from_odd_values((1, 0), (1, -1))
    with pytest.raises(PatternError, match="alternate"):
        pattern_from_odd_values((1, Fraction(1, 2)), (1, -1))
    with pytest.raises(PatternError, match="distinct"):
        pattern_from_odd_values((1, -1, 1, -1), (1, -1, Fraction(1, 2), Fraction(-1, 2)))
    with pytest.raises(PatternError, match="repeat"):
        CyclePattern((1, 1, -1, -1), (1, -1, -1, -1))
    with pytest.raises(PatternError, match="length"):
        CyclePattern((1, 1), (1, 1))


def test_canonical_form_invariant_under_shifts_and_reversal():
    p = pattern_from_odd_values(*FIG1_ODD)
    c = canonical_form(p)
    shifted = CyclePattern(p.xs[2:] + p.xs[:2], p.ys[2:] + p.ys[:2])
    reversed_p = CyclePattern(tuple(reversed(p.xs)), tuple(reversed(p.ys)))
    assert canonical_form(shifted) == c
    assert canonical_form(reversed_p) == c
    assert c.xs[0] > 0 and c.ys[0] > 0


def test_canonical_form_invariant_for_k4():
    p = pattern_from_odd_values(*FIG2_ODD)
    c = canonical_form(p)
    shifted4 = CyclePattern(p.xs[4:] + p.xs[:4], p.ys[4:] + p.ys[:4])
    assert canonical_form(shifted4) == c
    assert cycle_measure(shifted4) == cycle_measure(p)


def test_same_values_different_order_distinct_measures():
    a = pattern_from_odd_values(*FIG2_ODD)
    b = pattern_from_odd_values(
        (Fraction(3, 5), Fraction(-2, 5), Fraction(2, 5), Fraction(-3, 5)),
        FIG2_ODD[1],
    )
    assert canonical_form(a) != canonical_form(b)
    assert cycle_measure(a) != cycle_measure(b)


def test_canonical_forms_biject_with_measures(game_n2):
    patterns = enumerate_patterns(game_n2)
    assert len({canonical_form(p) for p in patterns}) == len(
        {cycle_measure(p) for p in patterns}
    ) == len(patterns)


def test_enumeration_rejects_games_with_zero_strategy():
    from ceptool.core import FiniteGame, InvalidGameError

    game = FiniteGame([-1, 0, 1], [-1, 1])
    with pytest.raises(InvalidGameError, match="zero strategy"):
        enumerate_patterns(game)


@pytest.mark.parametrize("n,count", [(1, 1), (2, 24), (3, 1161)])
def test_enumeration_matches_closed_form(n, count):
    game = example_game(n)
    assert len(enumerate_extreme_ce(game)) == count_extreme_ce(n) == count


def test_count_formula_values():
    # independent evaluation of the series, term by term
    def series(n):
        return sum(
            Fraction(1, r) * Fraction(math.factorial(n), math.factorial(n - r)) ** 4
            for r in range(1, n + 1)
        )

    for n in (1, 2, 3, 7):
        assert count_extreme_ce(n) == series(n)
    assert count_extreme_ce(2) == 16 + 8
    assert count_extreme_ce(3) == 81 + 648 + 432


def test_count_integrality_up_to_100():
    for n in range(1, 101):
        count_extreme_ce(n)


def test_parallel_enumeration_matches_serial(game_n2):
    serial = enumerate_extreme_ce(game_n2, workers=1)
    parallel = enumerate_extreme_ce(game_n2, workers=2)
    assert serial == parallel


def test_f_ratio_examples_and_bounds():
    assert f_ratio(1) == 1
    assert f_ratio(2) == 3
    upper = Fraction(23, 7)
    for n in range(1, 101):
        assert 1 <= f_ratio(n) <= upper
    assert 1 <= f_ratio(50) <= upper


def test_f_term_ratio_bound():
    for n in range(2, 101):
        terms = f_terms(n)
        for s in range(1, n - 1):
            assert terms[s + 1] / terms[s] <= Fraction(1, 8)


@pytest.mark.parametrize("n", [1, 2])
def test_enumerated_measures_are_equilibria(n):
    game = example_game(n)
    for mu in enumerate_extreme_ce(game):
        assert is_ce_projection(game, mu)
        assert is_ce_definition(game, mu)


def test_k2_measures_are_nash_products(game_n2):
    k2 = {
        cycle_measure(p).normalized()
        for p in enumerate_patterns(game_n2)
        if p.k == 2
    }
    products = {
        product_measure(pair.sigma, pair.tau)
        for pair in enumerate_extreme_nash(game_n2)
    }
    assert k2 == products
    assert len(k2) == 2**4


def test_extremality_witness_dimension_one(game_n2):
    for p in enumerate_patterns(game_n2):
        assert extremality_dimension(p) == 1


def test_pattern_from_support_roundtrip(game_n2):
    for p in enumerate_patterns(game_n2):
        rebuilt = pattern_from_support(cycle_measure(p).support())
        assert rebuilt is not None
        assert canonical_form(rebuilt) == canonical_form(p)


def test_pattern_from_support_rejects_non_staircases():
    assert pattern_from_support([(1, 1), (1, -1), (-1, 1)]) is None
    # two disjoint 4-cycles
    two = cycle_measure(pattern_from_odd_values(*FIG1_ODD)) + cycle_measure(
        pattern_from_odd_values((Fraction(1, 5), Fraction(-1, 5)), (Fraction(2, 5), Fraction(-2, 5)))
    )
    assert pattern_from_support(two.support()) is None


@BIG
def test_enumeration_matches_closed_form_n4():
    game = example_game(4)
    assert len(enumerate_extreme_ce(game, workers=4)) == count_extreme_ce(4)
