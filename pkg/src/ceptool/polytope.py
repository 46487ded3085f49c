"""Brute-force vertex oracle for the correlated-equilibrium polytope.

The deviation inequalities, nonnegativity and the mass-one normalization are
assembled into an H-representation, homogenized, and the resulting pointed
cone's extreme rays are enumerated with the double description method using
exact integer arithmetic throughout.  Nothing here knows anything about the
staircase construction, which is what makes set equality between the two
routes a genuine cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .cecheck import is_ce_definition
from .core import FiniteGame, FiniteMeasure, product_measure
from .cycles import cycle_measure, pattern_from_support
from .nash import enumerate_extreme_nash


class InfeasibleSystemError(ValueError):
    """The constraint system admits no feasible point."""


class UnboundedPolytopeError(ValueError):
    """The system is feasible but unbounded; it has no complete vertex list."""


@dataclass(frozen=True)
class HPolytope:
    """{z : coeffs . z >= rhs for inequalities, coeffs . z = rhs for equalities}."""

    dim: int
    inequalities: tuple
    equalities: tuple


@dataclass(frozen=True)
class VertexSet:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


def grid_points(game: FiniteGame) -> list:
    return [(x, y) for x in game.cx for y in game.cy]


def measure_to_vector(game: FiniteGame, mu: FiniteMeasure) -> tuple:
    game.require_support(mu)
    return tuple(mu[(x, y)] for x, y in grid_points(game))


def vector_to_measure(game: FiniteGame, z) -> FiniteMeasure:
    return FiniteMeasure(dict(zip(grid_points(game), z)))


def ce_hrep(game: FiniteGame) -> HPolytope:
    """H-representation of the proper correlated equilibria.

    One deviation inequality per ordered pair of distinct strategies per
    player, nonnegativity for every grid coordinate, and the single
    normalization equality (total mass one).
    """
    grid = grid_points(game)
    dim = len(grid)
    index = {p: i for i, p in enumerate(grid)}
    rows = []
    for i in range(dim):
        coeffs = [Fraction(0)] * dim
        coeffs[i] = Fraction(1)
        rows.append((tuple(coeffs), Fraction(0)))
    for x in game.cx:
        for xp in game.cx:
            if xp == x:
                continue
            coeffs = [Fraction(0)] * dim
            for y in game.cy:
                coeffs[index[(x, y)]] = (x - xp) * y
            rows.append((tuple(coeffs), Fraction(0)))
    for y in game.cy:
        for yp in game.cy:
            if yp == y:
                continue
            coeffs = [Fraction(0)] * dim
            for x in game.cx:
                coeffs[index[(x, y)]] = x * (yp - y)
            rows.append((tuple(coeffs), Fraction(0)))
    normalization = ((tuple([Fraction(1)] * dim), Fraction(1)),)
    return HPolytope(dim, tuple(rows), normalization)


def _dot(a, b):
    s = 0
    for u, v in zip(a, b):
        s += u * v
    return s


def _primitive(vec) -> tuple:
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def extreme_rays(rows: list) -> list:
    """Extreme rays of the pointed cone {w : row . w >= 0 for all rows}.

    Double description: start from a full-rank subsystem (a simplicial
    cone), then cut with the remaining halfspaces one at a time, combining
    adjacent ray pairs across each new hyperplane.  Adjacency uses the
    combinatorial test on exact incidence sets, and incidence is recomputed
    from scratch for every created ray, so coincidentally tight constraints
    are never missed.  All arithmetic is on primitive integer vectors.
    """
    rows = [linalg.clear_row(r) for r in rows]
    rows = [r for r in rows if any(v != 0 for v in r)]
    if not rows:
        raise ValueError("cone has no constraints")
    q = len(rows[0])
    if linalg.nullspace_dimension(rows, q) > 0:
        raise ValueError("cone contains a line; not pointed")

    # greedy full-rank start system, in the given row order
    basis_idx: list[int] = []
    for i in range(len(rows)):
        if len(basis_idx) == q:
            break
        if linalg.rank([rows[j] for j in basis_idx] + [rows[i]]) > len(basis_idx):
            basis_idx.append(i)
    assert len(basis_idx) == q

    rays = []
    for j in basis_idx:
        others = [rows[i] for i in basis_idx if i != j]
        kernel = linalg.nullspace(others, q)
        assert len(kernel) == 1
        vec = linalg.clear_row(kernel[0])
        if _dot(rows[j], vec) < 0:
            vec = tuple(-v for v in vec)
        rays.append(vec)

    done = list(basis_idx)

    def incidence(ray) -> int:
        mask = 0
        for t, ri in enumerate(done):
            if _dot(rows[ri], ray) == 0:
                mask |= 1 << t
        return mask

    masks = [incidence(r) for r in rays]

    remaining = [i for i in range(len(rows)) if i not in set(basis_idx)]
    for ri in remaining:
        row = rows[ri]
        scores = [_dot(row, r) for r in rays]
        done.append(ri)
        bit = 1 << (len(done) - 1)
        pos = [i for i, s in enumerate(scores) if s > 0]
        neg = [i for i, s in enumerate(scores) if s < 0]
        zero = [i for i, s in enumerate(scores) if s == 0]
        if not neg:
            masks = [
                masks[i] | (bit if scores[i] == 0 else 0) for i in range(len(rays))
            ]
            continue
        new_rays = []
        for p in pos:
            mp = masks[p]
            for m in neg:
                common = mp & masks[m]
                if common.bit_count() < q - 2:
                    continue
                adjacent = True
                for w in range(len(rays)):
                    if w in (p, m):
                        continue
                    if common | masks[w] == masks[w]:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = tuple(
                    scores[p] * rm - scores[m] * rp
                    for rp, rm in zip(rays[p], rays[m])
                )
                new_rays.append(_primitive(combo))
        keep = pos + zero
        rays = [rays[i] for i in keep] + new_rays
        masks = [
            masks[i] | (bit if scores[i] == 0 else 0) for i in keep
        ] + [incidence(r) for r in new_rays]
    return rays


def enumerate_vertices(p: HPolytope, self_check: bool = True) -> VertexSet:
    """Exact, complete vertex list of a bounded H-polytope.

    Equalities are eliminated by restricting to their solution subspace,
    the polytope is homogenized with one extra coordinate, and the cone's
    rays with positive homogenizing coordinate are rescaled into vertices.
    Raises InfeasibleSystemError when no feasible point exists and
    UnboundedPolytopeError when a recession direction shows up.
    """
    dim = p.dim
    hom_rows = [tuple(c) + (-rhs,) for c, rhs in p.inequalities]
    hom_rows.append(tuple([Fraction(0)] * dim) + (Fraction(1),))  # t >= 0
    eq_rows = [tuple(c) + (-rhs,) for c, rhs in p.equalities]

    if eq_rows:
        basis = linalg.nullspace(eq_rows, dim + 1)
        if not basis:
            raise InfeasibleSystemError("equalities admit no nonzero solution")
        basis = [linalg.clear_row(b) for b in basis]
    else:
        basis = [
            tuple(1 if i == j else 0 for i in range(dim + 1)) for j in range(dim + 1)
        ]

    w_rows = []
    for hrow in hom_rows:
        w_rows.append(tuple(_dot(hrow, b) for b in basis))
    w_rows = [r for r in w_rows if any(v != 0 for v in r)]
    if not w_rows:
        raise ValueError("system has no effective constraints")

    rays = extreme_rays(w_rows)

    vertices = set()
    unbounded = False
    for ray in rays:
        u = [
            sum(ray[j] * basis[j][i] for j in range(len(basis)))
            for i in range(dim + 1)
        ]
        t = u[dim]
        assert t >= 0, "homogenizing coordinate must be nonnegative"
        if t == 0:
            unbounded = True
            continue
        vertices.add(tuple(Fraction(u[i], t) for i in range(dim)))
    if not vertices:
        raise InfeasibleSystemError("constraint system is infeasible")
    if unbounded:
        raise UnboundedPolytopeError(
            "system is unbounded; recession directions were found"
        )
    ordered = tuple(sorted(vertices))
    if self_check:
        for v in ordered:
            check_basic_feasible(p, v)
    return VertexSet(ordered)


def tight_rows(p: HPolytope, vertex) -> list:
    rows = []
    for coeffs, rhs in p.inequalities:
        val = _dot(coeffs, vertex)
        if val < rhs:
            raise AssertionError("vertex violates an inequality")
        if val == rhs:
            rows.append(coeffs)
    for coeffs, rhs in p.equalities:
        if _dot(coeffs, vertex) != rhs:
            raise AssertionError("vertex violates an equality")
        rows.append(coeffs)
    return rows


def check_basic_feasible(p: HPolytope, vertex) -> None:
    """Assert the vertex satisfies everything and is basic (tight rank = dim)."""
    rows = tight_rows(p, vertex)
    if len(rows) < p.dim or linalg.rank(rows) != p.dim:
        raise AssertionError(
            "reported vertex is not a basic feasible point: tight-constraint "
            f"rank {linalg.rank(rows)} != dimension {p.dim}"
        )


@dataclass(frozen=True)
class VertexClassification:
    nash_products: tuple
    cycle_non_products: tuple
    other: tuple

    def counts(self) -> tuple[int, int, int]:
        return (len(self.nash_products), len(self.cycle_non_products), len(self.other))

    def summary(self) -> str:
        a, b, c = self.counts()
        return (
            f"{a} products of extreme Nash pairs, {b} staircase non-products, "
            f"{c} unclassified"
        )


def classify_vertices(game: FiniteGame, vs: VertexSet) -> VertexClassification:
    """Partition polytope vertices by construction route.

    A vertex is a Nash product when it equals the product measure of some
    extreme Nash pair; otherwise, when its support walks into a valid
    staircase whose normalized measure reproduces it exactly, it is a
    staircase non-product; anything else lands in "other".
    """
    products = {
        product_measure(pair.sigma, pair.tau) for pair in enumerate_extreme_nash(game)
    }
    nash_bucket, cycle_bucket, other_bucket = [], [], []
    for v in vs:
        mu = vector_to_measure(game, v)
        if mu in products:
            nash_bucket.append(v)
            continue
        pattern = pattern_from_support(mu.support())
        if pattern is not None and cycle_measure(pattern).normalized() == mu:
            cycle_bucket.append(v)
        else:
            other_bucket.append(v)
    return VertexClassification(tuple(nash_bucket), tuple(cycle_bucket), tuple(other_bucket))


def ce_vertices(game: FiniteGame, self_check: bool = True) -> VertexSet:
    """Vertices of the proper-CE polytope; every one re-checked exactly."""
    vs = enumerate_vertices(ce_hrep(game), self_check=self_check)
    for v in vs:
        if not is_ce_definition(game, vector_to_measure(game, v)):
            raise AssertionError("enumerated vertex fails the deviation test")
    return vs
