"""Moment vectors and moment-preserving measure splits.

Any description of a measure set by d generalized moments forces every
extreme point of the set to carry at most d support atoms: a measure with
more atoms admits a weight rebalancing, invisible to all d moments, that
moves to the boundary of nonnegativity in both directions and so writes the
measure as a proper average of two different measures with identical
moments.  This module carries out that split with exact arithmetic for
monomial moment maps.  Combined with staircase equilibria of arbitrarily
large support (which are extreme for the full equilibrium set), it shows no
fixed finite moment family can describe the correlated-equilibrium set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .core import FiniteMeasure, format_rational
from .cycles import (
    CyclePattern,
    cycle_measure,
    extremality_dimension,
    pattern_from_odd_values,
)


@dataclass(frozen=True)
class MomentBasis:
    """Monomial moment maps g(x, y) = x^p * y^q; (0, 0) is the constant 1."""

    monomials: tuple

    def __post_init__(self):
        if not self.monomials:
            raise ValueError("basis needs at least one monomial")
        for p, q in self.monomials:
            if p < 0 or q < 0:
                raise ValueError("monomial exponents must be nonnegative")

    @property
    def d(self) -> int:
        return len(self.monomials)

    @classmethod
    def graded(cls, d: int) -> "MomentBasis":
        """First d monomials in graded lexicographic order: 1, x, y, x^2, ..."""
        if d < 1:
            raise ValueError("d must be at least 1")
        mons = []
        degree = 0
        while len(mons) < d:
            for p in range(degree, -1, -1):
                mons.append((p, degree - p))
                if len(mons) == d:
                    break
            degree += 1
        return cls(tuple(mons))

    @classmethod
    def parse(cls, text: str) -> "MomentBasis":
        """Parse comma-separated monomials like "1, x, y, xy, x^2*y"."""
        mons = []
        for token in text.split(","):
            token = token.strip().replace("*", "").replace(" ", "")
            if not token:
                continue
            if token == "1":
                mons.append((0, 0))
                continue
            m = re.fullmatch(r"(?:x(?:\^(\d+))?)?(?:y(?:\^(\d+))?)?", token)
            if m is None or not m.group(0):
                raise ValueError(f"cannot parse monomial {token!r}")
            has_x = token.startswith("x")
            has_y = "y" in token
            p = int(m.group(1)) if m.group(1) else (1 if has_x else 0)
            q = int(m.group(2)) if m.group(2) else (1 if has_y else 0)
            mons.append((p, q))
        if not mons:
            raise ValueError("empty basis")
        return cls(tuple(mons))

    def describe(self) -> str:
        names = []
        for p, q in self.monomials:
            if p == q == 0:
                names.append("1")
                continue
            part = ""
            if p:
                part += "x" if p == 1 else f"x^{p}"
            if q:
                part += "y" if q == 1 else f"y^{q}"
            names.append(part)
        return ",".join(names)


def monomial_value(monomial, x, y) -> Fraction:
    p, q = monomial
    return Fraction(x) ** p * Fraction(y) ** q


def moments_of(mu: FiniteMeasure, basis: MomentBasis) -> tuple:
    """Exact moment vector (sum of g_j(x, y) * weight per basis entry)."""
    return tuple(
        sum((monomial_value(mon, x, y) * w for (x, y), w in mu.items()), Fraction(0))
        for mon in basis.monomials
    )


def caratheodory_split(
    mu: FiniteMeasure, basis: MomentBasis
) -> tuple[FiniteMeasure, FiniteMeasure] | None:
    """Split mu = (mu1 + mu2)/2 with all basis moments preserved, exactly.

    Finds a nonzero rebalancing v in the null space of the d x m matrix
    G[j][i] = g_j(atom_i) * weight_i and steps symmetrically to the nearer
    nonnegativity boundary: mu1,2 scale atom i by 1 -+ t*v_i.  Returns None
    ("extreme for this basis") when the null space is trivial, which can
    only happen with at most d atoms.
    """
    atoms = list(mu.items())
    m = len(atoms)
    if m == 0:
        return None
    rows = [
        [monomial_value(mon, x, y) * w for (x, y), w in atoms]
        for mon in basis.monomials
    ]
    kernel = linalg.nullspace(rows, m)
    if not kernel:
        return None
    v = next(
        (vec for vec in kernel if any(c > 0 for c in vec) and any(c < 0 for c in vec)),
        kernel[0],
    )
    if max(v) == min(v):
        # the constant rebalancing: every moment of mu vanishes, and the
        # boundary step would zero out one side entirely; split by scale
        return mu.scaled(Fraction(1, 2)), mu.scaled(Fraction(3, 2))
    steps = [Fraction(1) / abs(c) for c in v if c != 0]
    t_plus = min((Fraction(1) / -c for c in v if c < 0), default=None)
    t_minus = min((Fraction(1) / c for c in v if c > 0), default=None)
    t = min(s for s in (t_plus, t_minus) if s is not None)
    assert t > 0 and t in steps
    mu1 = FiniteMeasure({p: (1 + t * c) * w for (p, w), c in zip(atoms, v)})
    mu2 = FiniteMeasure({p: (1 - t * c) * w for (p, w), c in zip(atoms, v)})
    return mu1, mu2


@dataclass(frozen=True)
class SplitDemo:
    """A measure that out-supports any d-moment description, split in two."""

    n_moments: int
    r: int
    basis: MomentBasis
    pattern: CyclePattern
    measure: FiniteMeasure
    mu1: FiniteMeasure
    mu2: FiniteMeasure
    witness_dimension: int

    def summary(self) -> str:
        mom = moments_of(self.measure, self.basis)
        lines = [
            f"moment maps: {self.basis.describe()}  (d = {self.n_moments})",
            f"staircase equilibrium with {len(self.measure)} atoms"
            f" (> d, so a moment-preserving split must exist)",
            f"weight-rebalancing solution space dimension: {self.witness_dimension}"
            " (1 = extreme among equilibria)",
            "shared moment vector: ("
            + ", ".join(format_rational(v) for v in mom)
            + ")",
            f"split halves have {len(self.mu1)} and {len(self.mu2)} atoms;"
            " mu = (mu1 + mu2)/2 exactly",
        ]
        return "\n".join(lines)


def non_describability_demo(n_moments: int) -> SplitDemo:
    """Exhibit an extreme equilibrium that no n_moments-map description allows.

    Builds the smallest staircase equilibrium with more than n_moments atoms
    (4r atoms on the symmetric game with r values per sign), verifies its
    extremality witness, and produces the moment-preserving split that the
    bounded-support argument guarantees for any candidate description.
    """
    if n_moments < 1:
        raise ValueError("n_moments must be at least 1")
    r = n_moments // 4 + 1
    pos = [Fraction(i, r) for i in range(1, r + 1)]
    odd_x = tuple(v for p in pos for v in (p, -p))
    odd_y = odd_x
    pattern = pattern_from_odd_values(odd_x, odd_y)
    mu = cycle_measure(pattern)
    basis = MomentBasis.graded(n_moments)
    split = caratheodory_split(mu, basis)
    if split is None:
        raise AssertionError("split must exist when atoms exceed moment count")
    mu1, mu2 = split
    if mu1.scaled(Fraction(1, 2)) + mu2.scaled(Fraction(1, 2)) != mu:
        raise AssertionError("split halves do not average back to the measure")
    target = moments_of(mu, basis)
    if moments_of(mu1, basis) != target or moments_of(mu2, basis) != target:
        raise AssertionError("split halves do not preserve the moment vector")
    return SplitDemo(
        n_moments=n_moments,
        r=r,
        basis=basis,
        pattern=pattern,
        measure=mu,
        mu1=mu1,
        mu2=mu2,
        witness_dimension=extremality_dimension(pattern),
    )
