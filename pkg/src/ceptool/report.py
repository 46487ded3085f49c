"""Cross-validation suite tying the independent routes together.

Every check pits one construction against another computed a different way:
staircase enumeration against the closed-form count, polytope vertices
against normalized staircase measures, deviation inequalities against
projection measures, periodic-orbit staircases against the exact pattern
validator, and the moment splitter against the extremality witness.  The
suite writes a delimited summary table plus figures and is what the CLI
``report`` subcommand runs.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import svgfig
from .cecheck import is_ce_definition, is_ce_projection
from .core import FiniteGame, FiniteMeasure, example_game
from .cycles import (
    count_extreme_ce,
    cycle_measure,
    enumerate_extreme_ce,
    enumerate_patterns,
    extremality_dimension,
    f_ratio,
    f_terms,
)
from .ergodic import (
    RotationParams,
    conditional_mean_residuals,
    equidistribution_check,
    rational_orbit_to_cycle,
)
from .moments import non_describability_demo
from .nash import count_extreme_nash, enumerate_extreme_nash
from .polytope import (
    ce_vertices,
    classify_vertices,
    measure_to_vector,
    vector_to_measure,
)

DEFAULT_SEED = 20260810


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def random_measure(game: FiniteGame, rng: np.random.Generator) -> FiniteMeasure:
    """Random nonzero measure on the grid with small exact rational weights."""
    grid = [(x, y) for x in game.cx for y in game.cy]
    while True:
        atoms = {}
        for p in grid:
            if rng.integers(0, 2):
                atoms[p] = Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 10)))
        if atoms:
            return FiniteMeasure(atoms)


def _check_nash_counts() -> CheckResult:
    details = []
    ok = True
    for n in range(1, 5):
        found = len(enumerate_extreme_nash(example_game(n)))
        want = count_extreme_nash(n)
        ok &= found == want
        details.append(f"n={n}: {found}/{want}")
    return CheckResult("extreme-nash-counts", ok, ", ".join(details))


def _check_staircase_counts(workers: int) -> CheckResult:
    expected = {1: 1, 2: 24, 3: 1161}
    details = []
    ok = True
    for n, want in expected.items():
        found = len(enumerate_extreme_ce(example_game(n), workers=workers))
        closed = count_extreme_ce(n)
        ok &= found == closed == want
        details.append(f"n={n}: enumerated {found}, closed form {closed}")
    return CheckResult("staircase-counts", ok, ", ".join(details))


def _check_count_integrality() -> CheckResult:
    try:
        for n in range(1, 101):
            count_extreme_ce(n)
    except AssertionError as exc:
        return CheckResult("count-integrality", False, str(exc))
    return CheckResult("count-integrality", True, "integral for n = 1..100")


def _check_f_bounds() -> CheckResult:
    upper = Fraction(23, 7)
    worst = Fraction(0)
    for n in range(1, 101):
        value = f_ratio(n)
        if not 1 <= value <= upper:
            return CheckResult(
                "normalized-count-bounds", False, f"f({n}) = {value} out of bounds"
            )
        worst = max(worst, value)
        terms = f_terms(n)
        for s in range(1, n - 1):
            if terms[s + 1] / terms[s] > Fraction(1, 8):
                return CheckResult(
                    "normalized-count-bounds",
                    False,
                    f"term ratio at n={n}, s={s} exceeds 1/8",
                )
    return CheckResult(
        "normalized-count-bounds",
        True,
        f"1 <= f(n) <= 23/7 and term ratios <= 1/8 for n <= 100 (max f = {worst})",
    )


def _check_vertices_vs_staircases(n: int, workers: int) -> CheckResult:
    game = example_game(n)
    verts = set(ce_vertices(game))
    cycles = {
        measure_to_vector(game, mu.normalized())
        for mu in enumerate_extreme_ce(game, workers=workers)
    }
    ok = verts == cycles
    return CheckResult(
        f"vertices-equal-staircases-n{n}",
        ok,
        f"{len(verts)} vertices vs {len(cycles)} staircase measures, "
        + ("sets EQUAL" if ok else "sets DIFFER"),
    )


def _check_classification() -> CheckResult:
    game = example_game(2)
    report = classify_vertices(game, ce_vertices(game))
    counts = report.counts()
    ok = counts == (16, 8, 0)
    return CheckResult("vertex-classification-n2", ok, report.summary())


def _check_equilibrium_validity(workers: int) -> CheckResult:
    checked = 0
    for n in (1, 2):
        game = example_game(n)
        for mu in enumerate_extreme_ce(game, workers=workers):
            if not is_ce_definition(game, mu) or not is_ce_projection(game, mu):
                return CheckResult(
                    "equilibrium-validity", False, f"staircase measure fails at n={n}"
                )
            checked += 1
        for v in ce_vertices(game):
            mu = vector_to_measure(game, v)
            if not is_ce_definition(game, mu) or not is_ce_projection(game, mu):
                return CheckResult(
                    "equilibrium-validity", False, f"vertex measure fails at n={n}"
                )
            checked += 1
    return CheckResult(
        "equilibrium-validity", True, f"{checked} measures pass both exact tests"
    )


def _check_projection_equivalence(seed: int, per_game: int = 1000) -> CheckResult:
    rng = np.random.default_rng(seed)
    total = 0
    for n in (1, 2):
        game = example_game(n)
        for _ in range(per_game):
            mu = random_measure(game, rng)
            if is_ce_definition(game, mu) != is_ce_projection(game, mu):
                return CheckResult(
                    "projection-equivalence",
                    False,
                    f"routes disagree on a random measure (n={n})",
                )
            total += 1
    return CheckResult(
        "projection-equivalence", True, f"agreement on {total} random measures"
    )


def _check_rotation_residuals() -> CheckResult:
    params = svgfig.demo_rotation_params()
    rx, ry = conditional_mean_residuals(params, bins=16, quad_points=10_000)
    ok = rx <= 1e-6 and ry <= 1e-6
    return CheckResult(
        "rotation-conditional-means", ok, f"max residuals {rx:.2e}, {ry:.2e} (<= 1e-6)"
    )


def _check_equidistribution() -> CheckResult:
    irr = equidistribution_check(svgfig.demo_rotation_params(), 100_000, 20)
    rat = equidistribution_check(
        RotationParams.rational_rotation(Fraction(1, 5), Fraction(4, 5), 1, 4),
        100_000,
        20,
    )
    ok = irr <= 0.01 and rat >= 0.5
    return CheckResult(
        "equidistribution-contrast",
        ok,
        f"irrational {irr:.4f} (<= 0.01), rational 1/4 {rat:.2f} (>= 0.5)",
    )


def _check_rational_shadows() -> CheckResult:
    details = []
    for p, q in ((1, 1), (1, 2), (1, 3)):
        params = RotationParams.rational_rotation(Fraction(1, 5), Fraction(4, 5), p, q)
        pattern = rational_orbit_to_cycle(params, Fraction(3, 10))
        if pattern.k != 2 * q:
            return CheckResult(
                "periodic-orbit-staircases", False, f"wrong k for rotation {p}/{q}"
            )
        if extremality_dimension(pattern) != 1:
            return CheckResult(
                "periodic-orbit-staircases", False, f"witness fails for {p}/{q}"
            )
        values = sorted(set(pattern.xs))
        game = FiniteGame(values, sorted(set(pattern.ys)))
        if not is_ce_projection(game, cycle_measure(pattern)):
            return CheckResult(
                "periodic-orbit-staircases", False, f"projection fails for {p}/{q}"
            )
        details.append(f"{p}/{q} -> k={pattern.k}")
    return CheckResult("periodic-orbit-staircases", True, ", ".join(details))


def _check_moment_split() -> CheckResult:
    demo = non_describability_demo(4)
    ok = demo.witness_dimension == 1 and len(demo.measure) > demo.n_moments
    return CheckResult(
        "moment-splitting",
        ok,
        f"{len(demo.measure)}-atom extreme equilibrium split despite "
        f"d = {demo.n_moments} moment maps",
    )


def _check_figure_determinism() -> CheckResult:
    pairs = [
        svgfig.render_pattern(svgfig.demo_pattern_k2()),
        svgfig.render_pattern(svgfig.demo_pattern_k4()),
        svgfig.render_rotation(svgfig.demo_rotation_params()),
    ]
    again = [
        svgfig.render_pattern(svgfig.demo_pattern_k2()),
        svgfig.render_pattern(svgfig.demo_pattern_k4()),
        svgfig.render_rotation(svgfig.demo_rotation_params()),
    ]
    ok = pairs == again
    return CheckResult(
        "figure-determinism", ok, "re-rendered SVG bytes identical" if ok else "bytes differ"
    )


def _write_figures(outdir: Path) -> list[str]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = [str(p) for p in svgfig.write_demo_figures(outdir).values()]

    ns = list(range(1, 7))
    nash = [float(count_extreme_nash(n)) for n in ns]
    ce = [float(count_extreme_ce(n)) for n in ns]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, nash, "o-", label="extreme Nash (n^4)")
    ax.semilogy(ns, ce, "s-", label="extreme correlated")
    ax.set_xlabel("n (strategy values per sign)")
    ax.set_ylabel("count")
    ax.set_title("Extreme equilibrium counts")
    ax.legend()
    fig.tight_layout()
    counts_path = outdir / "counts.png"
    fig.savefig(counts_path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    written.append(str(counts_path))

    ns = list(range(1, 31))
    fvals = [float(f_ratio(n)) for n in ns]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ns, fvals, "o-", label="f(n)")
    ax.axhline(1.0, color="#888888", linestyle="--", label="lower bound 1")
    ax.axhline(23 / 7, color="#d73a49", linestyle="--", label="upper bound 23/7")
    ax.set_xlabel("n")
    ax.set_ylabel("normalized count")
    ax.set_title("Count normalized by its dominant term")
    ax.legend()
    fig.tight_layout()
    ratio_path = outdir / "f_ratio.png"
    fig.savefig(ratio_path, dpi=150, metadata={"Software": None})
    plt.close(fig)
    written.append(str(ratio_path))
    return written


def run_report(
    outdir, big: bool = False, seed: int = DEFAULT_SEED, workers: int = 1
) -> list[CheckResult]:
    """Run every cross-validation check; write summary CSV and figures."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    results = [
        _check_nash_counts(),
        _check_staircase_counts(workers),
        _check_count_integrality(),
        _check_f_bounds(),
        _check_vertices_vs_staircases(1, workers),
        _check_vertices_vs_staircases(2, workers),
    ]
    if big:
        results.append(_check_vertices_vs_staircases(3, workers))
    results += [
        _check_classification(),
        _check_equilibrium_validity(workers),
        _check_projection_equivalence(seed),
        _check_rotation_residuals(),
        _check_equidistribution(),
        _check_rational_shadows(),
        _check_moment_split(),
        _check_figure_determinism(),
    ]
    with open(outdir / "report.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["check", "status", "detail"])
        for r in results:
            writer.writerow([r.name, "PASS" if r.passed else "FAIL", r.detail])
    _write_figures(outdir)
    return results
