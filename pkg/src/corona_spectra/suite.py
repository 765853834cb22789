"""Seeded formula-versus-oracle verification over random factor pairs."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .errors import CoronaError
from .graph import (
    Graph,
    build_graph,
    circulant,
    complete,
    cycle,
    petersen,
    regularity_and_components,
    to_graph6,
)
from .invariants import (
    KIRCHHOFF_TOL,
    compare_invariant,
    kirchhoff_direct,
    kirchhoff_formula,
    spanning_trees_direct,
    spanning_trees_formula,
)
from .product import closed_neighborhood_corona, product_counts
from .spectra import (
    comparison_tolerance,
    direct_spectrum,
    formula_spectrum,
    max_deviation,
)


def sig12(x: float) -> float:
    """Round to 12 significant digits for stable report output."""
    return float(f"{x:.12g}")


@dataclass
class SuiteReport:
    seed: int
    n1_max: int
    n2_max: int
    entries: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def pass_count(self) -> int:
        return sum(1 for e in self.entries if e["passed"])

    @property
    def fail_count(self) -> int:
        return len(self.entries) - self.pass_count

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "seed": self.seed,
            "n1_max": self.n1_max,
            "n2_max": self.n2_max,
            "pass_count": self.pass_count,
            "fail_count": self.fail_count,
            "entries": self.entries,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def random_graph(rng: random.Random, n: int) -> Graph:
    p = rng.random()
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def regular_pool(n_max: int) -> list[Graph]:
    """Regular first factors available under the order cap."""
    pool = [complete(n) for n in range(1, n_max + 1)]
    pool += [cycle(n) for n in range(3, n_max + 1)]
    pool += [circulant(n, jumps) for n, jumps in ((6, (1, 2)), (8, (1, 3)), (8, (1, 4)),
                                                    (9, (1, 2)), (9, (1, 3)), (10, (1, 2)))
             if n <= n_max]
    if n_max >= 10:
        pool.append(petersen())
    return pool


def generate_pairs(seed: int, n1_max: int, n2_max: int, count: int) -> list[tuple[Graph, Graph]]:
    rng = random.Random(seed)
    pool = regular_pool(n1_max)
    pairs = []
    for _ in range(count):
        if rng.random() < 0.5:
            g1 = rng.choice(pool)
        else:
            g1 = random_graph(rng, rng.randint(1, n1_max))
        g2 = random_graph(rng, rng.randint(1, n2_max))
        pairs.append((g1, g2))
    return pairs


def _entry(index: int, g1: Graph, g2: Graph, check: str, formula, oracle,
           deviation: float, tolerance: float, error: str | None = None) -> dict:
    return {
        "pair": index,
        "g1": to_graph6(g1),
        "g2": to_graph6(g2),
        "check": check,
        "formula": formula,
        "oracle": oracle,
        "deviation": sig12(float(deviation)) if deviation != float("inf") else "inf",
        "tolerance": tolerance,
        "passed": bool(error is None and deviation <= tolerance),
        "error": error,
    }


def check_pair(index: int, g1: Graph, g2: Graph, tol: float) -> list[dict]:
    """Every applicable comparison for one factor pair."""
    entries = []
    prod = closed_neighborhood_corona(g1, g2)
    counts = product_counts(g1, g2)
    ok = (counts.vertices, counts.edges) == (prod.order, prod.size)
    entries.append(_entry(index, g1, g2, "counts", [counts.vertices, counts.edges],
                          [prod.order, prod.size], 0.0 if ok else float("inf"), 0.0))

    r1, components = regularity_and_components(g1)
    kinds = ["adjacency"] + (["laplacian", "signless"] if r1 is not None else [])
    for kind in kinds:
        try:
            dev = max_deviation(formula_spectrum(g1, g2, kind), direct_spectrum(g1, g2, kind))
            entries.append(_entry(index, g1, g2, f"spectrum:{kind}", None, None, dev, tol))
        except CoronaError as exc:
            entries.append(_entry(index, g1, g2, f"spectrum:{kind}", None, None,
                                  float("inf"), tol, type(exc).__name__))

    if r1 is not None and components == 1:
        try:
            rep = compare_invariant("kirchhoff", kirchhoff_formula(g1, g2),
                                    kirchhoff_direct(prod), KIRCHHOFF_TOL)
            entries.append(_entry(index, g1, g2, "kirchhoff", sig12(rep.formula_value),
                                  sig12(rep.oracle_value), rep.relative_deviation, rep.tolerance))
        except CoronaError as exc:
            entries.append(_entry(index, g1, g2, "kirchhoff", None, None, float("inf"),
                                  KIRCHHOFF_TOL, type(exc).__name__))
        try:
            rep = compare_invariant("spanning_trees", spanning_trees_formula(g1, g2),
                                    spanning_trees_direct(prod), 0.0)
            entries.append(_entry(index, g1, g2, "spanning_trees", rep.formula_value,
                                  rep.oracle_value, rep.relative_deviation, 0.0))
        except CoronaError as exc:
            entries.append(_entry(index, g1, g2, "spanning_trees", None, None, float("inf"),
                                  0.0, type(exc).__name__))
    return entries


def run_verify_suite(seed: int = 42, n1_max: int = 6, n2_max: int = 5,
                     pair_count: int = 100, tol: float | None = None) -> SuiteReport:
    if n1_max < 1 or n2_max < 1:
        raise ValueError("size caps must be >= 1")
    tol = comparison_tolerance() if tol is None else tol
    start = time.perf_counter()
    report = SuiteReport(seed, n1_max, n2_max)
    for index, (g1, g2) in enumerate(generate_pairs(seed, n1_max, n2_max, pair_count)):
        report.entries.extend(check_pair(index, g1, g2, tol))
    report.wall_time = time.perf_counter() - start
    return report
