import itertools

import pytest

from quivermoment.decision import (
    CountBudget,
    count_integer_points,
    decide_membership,
    kt_coefficient,
    membership,
    multiplicity,
)
from quivermoment.errors import BudgetExceeded, NotDominant, ShapeMismatch, UnboundedPolytope
from quivermoment.exactlp import Feasible, Infeasible, verify_certificate
from quivermoment.lpmodel import ConcreteLP
from quivermoment.oracle import multiplicity_formula
from quivermoment.quiver import Quiver, a3, diamond, path
from quivermoment.selftest import weight_grid


def _box(n, lo, hi):
    rows = []
    for j in range(n):
        rows += [({j: 1}, "<=", hi), ({j: -1}, "<=", -lo)]
    return rows


def test_count_box_and_simplex():
    assert count_integer_points(ConcreteLP.from_rows(2, _box(2, -1, 2))) == 16
    # x, y >= 0, x + y <= 4
    lp = ConcreteLP.from_rows(2, [({0: -1}, "<=", 0), ({1: -1}, "<=", 0), ({0: 1, 1: 1}, "<=", 4)])
    assert count_integer_points(lp) == 15


def test_count_with_equalities_and_parity():
    # 2x = y, 0 <= y <= 5: y in {0, 2, 4}
    lp = ConcreteLP.from_rows(2, [({0: 2, 1: -1}, "=", 0), *_box(2, 0, 5)[2:]])
    assert count_integer_points(lp) == 3
    # x determined as y / 2 with y odd only: no integer points
    lp = ConcreteLP.from_rows(2, [({0: 2, 1: -1}, "=", 1), ({1: 1}, "<=", 1), ({1: -1}, "<=", -1)])
    assert count_integer_points(lp) == 1
    lp = ConcreteLP.from_rows(2, [({0: 2, 1: -1}, "=", 0), ({1: 1}, "<=", 1), ({1: -1}, "<=", -1)])
    assert count_integer_points(lp) == 0


def test_count_matches_brute_force():
    import random

    rng = random.Random(5)
    for _ in range(60):
        rows = _box(3, -2, 2)
        for _ in range(3):
            rows.append(({j: rng.randint(-2, 2) for j in range(3)}, rng.choice(["<=", "<=", "="]), rng.randint(-2, 3)))
        lp = ConcreteLP.from_rows(3, rows)
        brute = sum(lp.satisfied_by(p) for p in itertools.product(range(-2, 3), repeat=3))
        assert count_integer_points(lp) == brute


def test_unbounded_detected():
    lp = ConcreteLP.from_rows(2, [({0: -1}, "<=", 0), ({1: 1}, "<=", 1), ({1: -1}, "<=", 0)])
    with pytest.raises(UnboundedPolytope):
        count_integer_points(lp)


def test_infeasible_counts_zero():
    lp = ConcreteLP.from_rows(1, [({0: 1}, "<=", -1), ({0: -1}, "<=", 0)])
    assert count_integer_points(lp) == 0


def test_budget():
    lp = ConcreteLP.from_rows(2, _box(2, 0, 9))
    with pytest.raises(BudgetExceeded):
        count_integer_points(lp, CountBudget(max_nodes=10))
    with pytest.raises(BudgetExceeded):
        count_integer_points(lp, CountBudget(max_points=50))
    with pytest.raises(ValueError):
        CountBudget(max_nodes=0)


def test_named_values():
    assert multiplicity(diamond(), [1, 1, 1, 1], [(2,), (0,), (0,), (-2,)]) == 3
    assert multiplicity(a3(), [2, 2, 2], [(1, 0), (1, 0), (-1, -1)]) == 1
    assert kt_coefficient(3, [(2, 1, 0), (2, 1, 0), (-1, -2, -3)]) == 2


def test_membership_certificates():
    res = membership(diamond(), [1, 1, 1, 1], [(2,), (0,), (0,), (-2,)])
    assert res.member and isinstance(res.certificate, Feasible)
    assert verify_certificate(res.lp, res.certificate)
    res = membership(diamond(), [1, 1, 1, 1], [(-2,), (0,), (0,), (2,)])
    assert not res.member and isinstance(res.certificate, Infeasible)
    assert verify_certificate(res.lp, res.certificate)


def test_input_validation():
    with pytest.raises(ShapeMismatch):
        multiplicity(a3(), [1, 1, 1], [(0,), (0,)])
    with pytest.raises(NotDominant):
        decide_membership(path(2), [2, 2], [(0, 1), (0, 0)])


@pytest.mark.parametrize(
    "q, dims",
    [(path(2), (2, 2)), (path(2), (2, 1)), (a3(), (1, 1, 2)), (Quiver(2, [(1, 2), (1, 2)]), (2, 2))],
)
def test_multiplicity_matches_formula(q, dims):
    for lam in weight_grid(dims, -2, 2):
        if sum(map(sum, lam)) == 0:
            m = multiplicity(q, dims, lam)
            assert m == multiplicity_formula(q, dims, lam)
            assert decide_membership(q, dims, lam) == (m > 0)
