"""Small cross-validation suites behind ``quivermoment selftest``.

Each suite compares two independent routes on a grid small enough to finish
in seconds.  The full-size grids live in the test suite.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .decision import decide_membership, kt_coefficient, multiplicity
from .exactlp import optimize, solve_feasibility, verify_certificate
from .lpmodel import ConcreteLP
from .oracle import invariant_c, multiplicity_formula, torus_multiplicity
from .quiver import Quiver, a3, diamond, random_acyclic_quiver
from .semistability import check_semistable, closed_form_a3


def dominant_weights(n: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    return [
        w
        for w in itertools.product(range(hi, lo - 1, -1), repeat=n)
        if all(w[i] >= w[i + 1] for i in range(n - 1))
    ]


def weight_grid(dims, lo: int, hi: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    return itertools.product(*[dominant_weights(n, lo, hi) for n in dims])


def grid_quivers(seed: int = 7, count: int = 5) -> list[Quiver]:
    """Seeded random acyclic quivers on at most four vertices."""
    rng = random.Random(seed)
    return [random_acyclic_quiver(rng, 4) for _ in range(count)]


def random_system(rng: random.Random, max_vars: int = 4, max_rows: int = 6) -> ConcreteLP:
    n = rng.randint(1, max_vars)
    rows = []
    for _ in range(rng.randint(1, max_rows)):
        row = {j: rng.randint(-2, 2) for j in range(n)}
        rows.append((row, rng.choice(["<=", "<=", "="]), rng.randint(-3, 3)))
    return ConcreteLP.from_rows(n, rows)


def _hive_suite() -> tuple[bool, str]:
    checked = 0
    for n in (1, 2):
        ws = dominant_weights(n, -2, 2)
        for a, b, c in itertools.product(ws, repeat=3):
            if sum(a) + sum(b) + sum(c):
                continue
            checked += 1
            if kt_coefficient(n, [a, b, c]) != invariant_c(n, [a, b, c]):
                return False, f"mismatch at {a}, {b}, {c}"
    return True, f"{checked} triples"


def _multiplicity_suite(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    cases = [(diamond(), (1, 1, 1, 1)), (a3(), (1, 1, 2)), (a3(), (2, 2, 2))]
    cases.append((random_acyclic_quiver(rng, 3), None))
    checked = 0
    for q, dims in cases:
        dims = dims or (1,) * q.num_vertices
        for lam in weight_grid(dims, -1, 1):
            if sum(map(sum, lam)):
                continue
            checked += 1
            m = multiplicity(q, dims, lam)
            if m != multiplicity_formula(q, dims, lam):
                return False, f"{q} dims {dims} lam {lam}"
            if decide_membership(q, dims, lam) != (m > 0):
                return False, f"membership disagrees at {q} dims {dims} lam {lam}"
            if all(n == 1 for n in dims) and m != torus_multiplicity(q, [w[0] for w in lam]):
                return False, f"torus oracle disagrees at {q} lam {lam}"
    return True, f"{checked} instances"


def _closed_form_suite() -> tuple[bool, str]:
    checked = 0
    for dims in itertools.product((1, 2), repeat=3):
        for sigma in itertools.product(range(-2, 3), repeat=3):
            checked += 1
            if closed_form_a3(dims, sigma) != check_semistable(a3(), dims, sigma):
                return False, f"dims {dims} sigma {sigma}"
    return True, f"{checked} weights"


def _certificate_suite(seed: int) -> tuple[bool, str]:
    rng = random.Random(seed)
    for k in range(100):
        lp = random_system(rng)
        for res in (solve_feasibility(lp), optimize(lp, [rng.randint(-2, 2) for _ in range(lp.num_vars)])):
            if not verify_certificate(lp, res):
                return False, f"system {k}: {res}"
    return True, "100 random systems"


def run_all(seed: int = 0) -> Iterator[tuple[str, bool, str]]:
    yield ("hive vs LR oracle", *_hive_suite())
    yield ("multiplicity vs formula", *_multiplicity_suite(seed))
    yield ("A3 closed form vs reduction", *_closed_form_suite())
    yield ("solver certificates", *_certificate_suite(seed))
