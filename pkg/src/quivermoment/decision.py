"""Membership, lattice-point counting and multiplicities.

Counting is a depth-first enumeration in variable order.  At each level the
exact range of the next variable over the current slice comes from the
simplex (warm-started from the parent node), and every integer in that range
is visited.  Variables that the equality rows express through earlier
variables are not branched on; their forced value is read off the tableau
and checked for integrality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from gmpy2 import mpq

from .errors import BudgetExceeded, UnboundedPolytope
from .exactlp import FeasibilityResult, Feasible, Tableau, solve_feasibility
from .hive import EQ
from .lpmodel import ConcreteLP, build_moment_polytope, instantiate, kt_program
from .quiver import Quiver, validate_dims, validate_family, validate_quiver

ONE = mpq(1)


@dataclass(frozen=True)
class CountBudget:
    max_nodes: int = 10**7
    max_points: int = 10**7

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_points <= 0:
            raise ValueError("budget limits must be positive")


DEFAULT_BUDGET = CountBudget()


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    lp: ConcreteLP
    certificate: FeasibilityResult


def _ceil(q) -> int:
    return -((-q.numerator) // q.denominator)


def _floor(q) -> int:
    return q.numerator // q.denominator


@lru_cache(maxsize=256)
def _determined(num_vars: int, lhs: tuple, rels: tuple) -> frozenset[int]:
    """Variables fixed by the equality rows once all smaller-index variables are fixed.

    Reduced row echelon form with columns scanned from the highest index down;
    each pivot column is then an affine function of lower-index free columns.
    """
    rows = [
        {j: mpq(c) for j, c in terms}
        for terms, rel in zip(lhs, rels)
        if rel == EQ and terms
    ]
    pivots: dict[int, dict[int, mpq]] = {}
    remaining = rows
    for col in range(num_vars - 1, -1, -1):
        pick = next((r for r in remaining if r.get(col)), None)
        if pick is None:
            continue
        remaining = [r for r in remaining if r is not pick]
        inv = 1 / pick[col]
        pick = {j: c * inv for j, c in pick.items()}
        for r in (*remaining, *pivots.values()):
            f = r.get(col)
            if f:
                for j, c in pick.items():
                    v = r.get(j, 0) - f * c
                    if v:
                        r[j] = v
                    else:
                        r.pop(j, None)
        pivots[col] = pick
    return frozenset(pivots)


@lru_cache(maxsize=256)
def _unbounded_directions(num_vars: int, lhs: tuple, rels: tuple) -> tuple[int, ...]:
    """Columns that are unbounded on the recession cone ``{A d <= 0, E d = 0}``."""
    cone = ConcreteLP(num_vars, lhs, rels, (0,) * len(lhs))
    t = Tableau(cone)
    t.check()
    bad = []
    for j in range(num_vars):
        for sign in (ONE, -ONE):
            status, _ = t.maximize({j: sign})
            if status == "unbounded":
                bad.append(j)
                break
    return tuple(bad)


def count_integer_points(lp: ConcreteLP, budget: CountBudget = DEFAULT_BUDGET) -> int:
    """Exact number of integer points of a bounded polytope."""
    t = Tableau(lp)
    if t.check() is not None:
        return 0
    key = (lp.num_vars, lp.lhs, lp.rels)
    bad = _unbounded_directions(*key)
    if bad:
        names = lp.var_names
        where = names[bad[0]] if names else f"x{bad[0] + 1}"
        raise UnboundedPolytope(f"coordinate {where} has no finite range")
    determined = _determined(*key)
    n = lp.num_vars
    val = t.val
    nodes = 0
    points = 0

    def dfs(k: int) -> int:
        nonlocal nodes, points
        while k < n and k in determined:
            if val[k].denominator != 1:
                return 0
            k += 1
        if k == n:
            points += 1
            if points > budget.max_points:
                raise BudgetExceeded(f"more than {budget.max_points} points")
            return 1
        _, hi = t.maximize({k: ONE})
        _, lo = t.maximize({k: -ONE})
        total = 0
        for v in range(_ceil(-lo), _floor(hi) + 1):
            nodes += 1
            if nodes > budget.max_nodes:
                raise BudgetExceeded(f"more than {budget.max_nodes} enumeration nodes")
            t.fix(k, v)
            t.check()
            total += dfs(k + 1)
            t.release(k)
        return total

    return dfs(0)


def membership(q: Quiver, dims: Sequence[int], lam: Sequence[Sequence[int]]) -> MembershipResult:
    """Feasibility of the moment polytope at ``lam``, with its certificate."""
    validate_quiver(q)
    dims = validate_dims(q, dims)
    lam = validate_family(dims, lam)
    lp = instantiate(build_moment_polytope(q, dims), lam)
    result = solve_feasibility(lp)
    return MembershipResult(isinstance(result, Feasible), lp, result)


def decide_membership(q: Quiver, dims: Sequence[int], lam: Sequence[Sequence[int]]) -> bool:
    return membership(q, dims, lam).member


def multiplicity(
    q: Quiver, dims: Sequence[int], lam: Sequence[Sequence[int]], budget: CountBudget = DEFAULT_BUDGET
) -> int:
    """``m_Q(lam)`` as the number of integer points of the moment polytope."""
    validate_quiver(q)
    dims = validate_dims(q, dims)
    lam = validate_family(dims, lam)
    return count_integer_points(instantiate(build_moment_polytope(q, dims), lam), budget)


@lru_cache(maxsize=64)
def _kt_program(n: int, s: int):
    return kt_program(n, s)


def kt_coefficient(n: int, weights: Sequence[Sequence[int]], budget: CountBudget = DEFAULT_BUDGET) -> int:
    """Invariant multiplicity ``C(w_1, ..., w_s)`` by counting integer points."""
    return count_integer_points(instantiate(_kt_program(n, len(weights)), weights), budget)
