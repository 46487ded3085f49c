import random
from fractions import Fraction

from ceptool import linalg


def reference_rank(rows, ncols):
    """Plain Fraction Gaussian elimination, independent of the module."""
    m = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                for j in range(ncols):
                    m[i][j] -= f * m[rank][j]
        rank += 1
    return rank


def random_matrix(rng, nrows, ncols):
    return [
        [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(ncols)]
        for _ in range(nrows)
    ]


def test_rank_matches_reference_on_random_matrices():
    rng = random.Random(42)
    for _ in range(150):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        m = random_matrix(rng, nrows, ncols)
        if rng.random() < 0.4 and nrows >= 2:  # force dependent rows
            m[-1] = [2 * v for v in m[0]]
        assert linalg.rank(m) == reference_rank(m, ncols)


def test_nullspace_vectors_annihilate_and_span():
    rng = random.Random(5)
    for _ in range(150):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 6)
        m = random_matrix(rng, nrows, ncols)
        basis = linalg.nullspace(m, ncols)
        assert len(basis) == ncols - linalg.rank(m)
        for v in basis:
            for row in m:
                assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0
        # basis vectors are linearly independent
        if basis:
            assert linalg.rank(basis) == len(basis)


def test_clear_row_scales_to_primitive_integers():
    assert linalg.clear_row([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert linalg.clear_row([Fraction(2), Fraction(4)]) == (1, 2)
    assert linalg.clear_row([0, 0]) == (0, 0)


def test_nullspace_of_empty_system_is_full():
    assert linalg.nullspace_dimension([], 3) == 3
    basis = linalg.nullspace([], 2)
    assert len(basis) == 2
