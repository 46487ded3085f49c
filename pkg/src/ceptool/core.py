"""Exact scalars, finitely supported measures, and the bilinear game model.

Everything in the finite-game part of the toolkit runs on arbitrary-precision
rationals (``fractions.Fraction``), so equilibrium tests, vertex enumeration
and measure comparisons are bit-exact.  The game model is the zero-sum game
on strategy sets ``cx, cy`` contained in [-1, 1] with payoff ``x*y`` to the
first player and ``-x*y`` to the second; each strategy set must contain at
least one positive and one negative value.

All value types here are immutable after construction: atom maps are copied
in, zero weights are pruned eagerly, and iteration order is sorted, so any
derived output is reproducible byte for byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping, Sequence

Rational = Fraction

ONE = Fraction(1)
ZERO = Fraction(0)


class InvalidGameError(ValueError):
    """Strategy sets that violate the game model's requirements."""


class SupportError(ValueError):
    """A measure or strategy puts mass outside the allowed strategy set."""


class HypothesisError(ValueError):
    """An operation was applied to a measure outside its hypothesis class."""


def as_rational(value) -> Fraction:
    """Coerce ints, strings like '3/5' or '-3', and Fractions to Fraction.

    Floats are rejected: silently converting a binary float would smuggle
    rounding error into the exact layer.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    return as_rational(text)


def format_rational(q: Fraction) -> str:
    """Render as 'p/q', or plain 'p' for integers."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _sorted_atoms(atoms: Mapping, *, allow_negative: bool) -> dict:
    out = {}
    for key, weight in atoms.items():
        w = as_rational(weight)
        if w == 0:
            continue
        if w < 0 and not allow_negative:
            raise ValueError(f"negative weight {format_rational(w)} at {key}")
        out[key] = out.get(key, ZERO) + w
    return {k: out[k] for k in sorted(out) if out[k] != 0}


class MixedStrategy:
    """Finitely supported nonnegative measure on a single strategy axis.

    "Proper" means total mass one.  Zero-weight atoms are never stored, so
    ``support()`` is exactly the key set.
    """

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Mapping):
        self._atoms = _sorted_atoms(
            {as_rational(k): v for k, v in atoms.items()}, allow_negative=False
        )

    @property
    def atoms(self) -> dict:
        return dict(self._atoms)

    def support(self) -> tuple:
        return tuple(self._atoms)

    def mass(self) -> Fraction:
        return sum(self._atoms.values(), ZERO)

    def is_proper(self) -> bool:
        return self.mass() == 1

    def __getitem__(self, value) -> Fraction:
        return self._atoms.get(as_rational(value), ZERO)

    def items(self):
        return self._atoms.items()

    def __eq__(self, other):
        return isinstance(other, MixedStrategy) and self._atoms == other._atoms

    def __hash__(self):
        return hash(tuple(self._atoms.items()))

    def __repr__(self):
        inner = ", ".join(
            f"{format_rational(v)}: {format_rational(w)}" for v, w in self._atoms.items()
        )
        return f"MixedStrategy({{{inner}}})"


class FiniteMeasure:
    """Finitely supported nonnegative measure on strategy pairs (x, y).

    Any positive total mass is allowed ("homogeneous"); mass one is
    "proper".  Supports exact addition, scaling and normalization, which is
    all the equilibrium machinery needs.
    """

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Mapping):
        self._atoms = _sorted_atoms(
            {(as_rational(k[0]), as_rational(k[1])): v for k, v in atoms.items()},
            allow_negative=False,
        )

    @property
    def atoms(self) -> dict:
        return dict(self._atoms)

    def support(self) -> tuple:
        return tuple(self._atoms)

    def mass(self) -> Fraction:
        return sum(self._atoms.values(), ZERO)

    def is_proper(self) -> bool:
        return self.mass() == 1

    def __getitem__(self, point) -> Fraction:
        x, y = point
        return self._atoms.get((as_rational(x), as_rational(y)), ZERO)

    def items(self):
        return self._atoms.items()

    def __len__(self):
        return len(self._atoms)

    def scaled(self, c) -> "FiniteMeasure":
        c = as_rational(c)
        if c < 0:
            raise ValueError("scale factor must be nonnegative")
        return FiniteMeasure({p: c * w for p, w in self._atoms.items()})

    def normalized(self) -> "FiniteMeasure":
        m = self.mass()
        if m == 0:
            raise ValueError("cannot normalize the zero measure")
        return self.scaled(ONE / m)

    def __add__(self, other: "FiniteMeasure") -> "FiniteMeasure":
        merged = dict(self._atoms)
        for p, w in other._atoms.items():
            merged[p] = merged.get(p, ZERO) + w
        return FiniteMeasure(merged)

    def __eq__(self, other):
        return isinstance(other, FiniteMeasure) and self._atoms == other._atoms

    def __hash__(self):
        return hash(tuple(self._atoms.items()))

    def __repr__(self):
        inner = ", ".join(
            f"({format_rational(x)}, {format_rational(y)}): {format_rational(w)}"
            for (x, y), w in self._atoms.items()
        )
        return f"FiniteMeasure({{{inner}}})"


class SignedFiniteMeasure:
    """Finitely supported signed measure on one axis; exact zero test."""

    __slots__ = ("_atoms",)

    def __init__(self, atoms: Mapping):
        self._atoms = _sorted_atoms(
            {as_rational(k): v for k, v in atoms.items()}, allow_negative=True
        )

    @property
    def atoms(self) -> dict:
        return dict(self._atoms)

    def is_zero(self) -> bool:
        return not self._atoms

    def __getitem__(self, value) -> Fraction:
        return self._atoms.get(as_rational(value), ZERO)

    def items(self):
        return self._atoms.items()

    def __eq__(self, other):
        return isinstance(other, SignedFiniteMeasure) and self._atoms == other._atoms

    def __hash__(self):
        return hash(tuple(self._atoms.items()))

    def __repr__(self):
        inner = ", ".join(
            f"{format_rational(v)}: {format_rational(w)}" for v, w in self._atoms.items()
        )
        return f"SignedFiniteMeasure({{{inner}}})"


def _validate_axis(values: Sequence, name: str) -> tuple:
    vals = tuple(sorted(as_rational(v) for v in values))
    if len(set(vals)) != len(vals):
        raise InvalidGameError(f"{name} contains duplicate strategy values")
    for v in vals:
        if not -1 <= v <= 1:
            raise InvalidGameError(
                f"{name} value {format_rational(v)} lies outside [-1, 1]"
            )
    if not any(v > 0 for v in vals) or not any(v < 0 for v in vals):
        raise InvalidGameError(
            f"{name} must contain at least one positive and one negative value"
        )
    return vals


class FiniteGame:
    """Strategy sets cx, cy in [-1, 1]; payoffs x*y and -x*y are implicit."""

    __slots__ = ("cx", "cy")

    def __init__(self, cx: Sequence, cy: Sequence):
        object.__setattr__(self, "cx", _validate_axis(cx, "cx"))
        object.__setattr__(self, "cy", _validate_axis(cy, "cy"))

    def __setattr__(self, *args):
        raise AttributeError("FiniteGame is immutable")

    def grid(self) -> tuple:
        return tuple((x, y) for x in self.cx for y in self.cy)

    def contains_support(self, mu: FiniteMeasure) -> bool:
        sx, sy = set(self.cx), set(self.cy)
        return all(x in sx and y in sy for x, y in mu.support())

    def require_support(self, mu: FiniteMeasure) -> None:
        if not self.contains_support(mu):
            bad = next(
                (x, y)
                for x, y in mu.support()
                if x not in set(self.cx) or y not in set(self.cy)
            )
            raise SupportError(
                f"measure atom at ({format_rational(bad[0])}, {format_rational(bad[1])})"
                " lies outside the strategy grid"
            )

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGame)
            and self.cx == other.cx
            and self.cy == other.cy
        )

    def __hash__(self):
        return hash((self.cx, self.cy))

    def __repr__(self):
        return (
            "FiniteGame(cx=[" + ", ".join(map(format_rational, self.cx)) + "], "
            "cy=[" + ", ".join(map(format_rational, self.cy)) + "])"
        )


def make_example_game(neg_x, pos_x, neg_y, pos_y) -> FiniteGame:
    """Build a game from explicit negative/positive strategy lists.

    Negative values must lie in [-1, 0), positive in (0, 1]; zero is not a
    legal strategy for games built this way, and each part must be nonempty.
    """

    def check(part, name, negative):
        out = []
        for v in part:
            q = as_rational(v)
            if negative and not (-1 <= q < 0):
                raise InvalidGameError(
                    f"{name} value {format_rational(q)} must lie in [-1, 0)"
                )
            if not negative and not (0 < q <= 1):
                raise InvalidGameError(
                    f"{name} value {format_rational(q)} must lie in (0, 1]"
                )
            out.append(q)
        if not out:
            raise InvalidGameError(f"{name} must be nonempty")
        if len(set(out)) != len(out):
            raise InvalidGameError(f"{name} contains duplicates")
        return out

    nx = check(neg_x, "neg_x", True)
    px = check(pos_x, "pos_x", False)
    ny = check(neg_y, "neg_y", True)
    py = check(pos_y, "pos_y", False)
    return FiniteGame(nx + px, ny + py)


def example_game(n: int) -> FiniteGame:
    """Symmetric game with strategy values {±1/n, ±2/n, ..., ±1} per axis."""
    if n < 1:
        raise InvalidGameError("n must be at least 1")
    pos = [Fraction(i, n) for i in range(1, n + 1)]
    neg = [-p for p in pos]
    return make_example_game(neg, pos, neg, pos)


def matching_pennies() -> FiniteGame:
    return make_example_game([-1], [1], [-1], [1])


def product_measure(sigma: MixedStrategy, tau: MixedStrategy) -> FiniteMeasure:
    """Product of two one-axis measures: weight sigma[x]*tau[y] at (x, y)."""
    return FiniteMeasure(
        {(x, y): wx * wy for x, wx in sigma.items() for y, wy in tau.items()}
    )


def measure_mean(m: MixedStrategy) -> Fraction:
    """First moment: sum of value * weight."""
    return sum((v * w for v, w in m.items()), ZERO)


# --- text interchange -------------------------------------------------------
#
# Rationals serialize as "p/q" (or "p"), a measure as a JSON array of
# [x, y, w] triples, a one-axis strategy as an array of [value, weight]
# pairs, and a game as {"cx": [...], "cy": [...]}.  This is the format every
# CLI command reads and writes.


def game_to_json(game: FiniteGame) -> str:
    doc = {
        "cx": [format_rational(v) for v in game.cx],
        "cy": [format_rational(v) for v in game.cy],
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def game_from_json(text: str) -> FiniteGame:
    doc = json.loads(text)
    return FiniteGame(
        [parse_rational(v) for v in doc["cx"]],
        [parse_rational(v) for v in doc["cy"]],
    )


def measure_to_json(mu: FiniteMeasure) -> str:
    triples = [
        [format_rational(x), format_rational(y), format_rational(w)]
        for (x, y), w in mu.items()
    ]
    return json.dumps(triples, indent=2) + "\n"


def measure_from_json(text: str) -> FiniteMeasure:
    triples = json.loads(text)
    atoms: dict = {}
    for x, y, w in triples:
        key = (parse_rational(x), parse_rational(y))
        atoms[key] = atoms.get(key, ZERO) + parse_rational(w)
    return FiniteMeasure(atoms)


def strategy_to_json(sigma: MixedStrategy) -> str:
    pairs = [[format_rational(v), format_rational(w)] for v, w in sigma.items()]
    return json.dumps(pairs, indent=2) + "\n"


def strategy_from_json(text: str) -> MixedStrategy:
    pairs = json.loads(text)
    atoms: dict = {}
    for v, w in pairs:
        key = parse_rational(v)
        atoms[key] = atoms.get(key, ZERO) + parse_rational(w)
    return MixedStrategy(atoms)
