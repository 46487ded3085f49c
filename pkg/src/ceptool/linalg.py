"""Exact linear algebra over the rationals.

Fraction-free (Bareiss-style) elimination on integer-scaled rows keeps
intermediate entries as plain big integers, which is both exact and much
faster than eliminating with Fraction arithmetic directly.  Inputs may mix
ints and Fractions; each row is cleared of denominators up front, which
changes neither rank nor null space.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def clear_row(row: Sequence) -> tuple:
    """Scale a rational row to a primitive integer row (0 row stays 0)."""
    fracs = [Fraction(v) for v in row]
    denom = 1
    for v in fracs:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in fracs]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def _echelon(rows: list) -> tuple[list, list[int]]:
    """Fraction-free row echelon form; returns (rows, pivot column list)."""
    m = [list(clear_row(r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            if m[i][c] == 0:
                # still divide by prev to keep the Bareiss invariant
                for j in range(c, ncols):
                    m[i][j] = m[i][j] * piv // prev
                continue
            factor = m[i][c]
            for j in range(c, ncols):
                m[i][j] = (m[i][j] * piv - factor * m[r][j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(_echelon(list(rows))[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of {v : row . v = 0 for every row}, as exact rational vectors.

    One basis vector per free column, in ascending free-column order; the
    free coordinate is set to 1 and pivot coordinates are back-substituted.
    """
    ech, pivots = _echelon(list(rows))
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        # back-substitute pivot rows from the bottom up
        for ri in range(len(pivots) - 1, -1, -1):
            pc = pivots[ri]
            row = ech[ri]
            s = sum((Fraction(row[j]) * v[j] for j in range(pc + 1, ncols)), Fraction(0))
            v[pc] = -s / row[pc]
        basis.append(tuple(v))
    return basis


def nullspace_dimension(rows: Sequence[Sequence], ncols: int) -> int:
    if not rows:
        return ncols
    return ncols - rank(rows)
