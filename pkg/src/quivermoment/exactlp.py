"""Exact rational LP feasibility and optimization with checkable certificates.

The engine is a bounded-variable simplex tableau in the style used by SMT
solvers for linear arithmetic: every row ``r`` gets a slack ``s_r = a_r . x``
with bounds ``s_r <= b_r`` (or ``s_r = b_r``), the original variables are
free, and infeasibility is read off a single tableau row as a Farkas
combination of the input rows.  Pivoting uses Bland's lowest-index rule,
which guarantees termination.  Arithmetic is exact throughout (``gmpy2.mpq``
internally, :class:`fractions.Fraction` at the API boundary).

This is the practical replacement for a strongly polynomial LP algorithm:
answers are exact, but no polynomial bound on the number of pivots is claimed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence, Union

from gmpy2 import mpq

from .hive import EQ, LE
from .lpmodel import ConcreteLP

ZERO = mpq(0)


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _mpq(v) -> mpq:
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    return mpq(v)


@dataclass(frozen=True)
class Feasible:
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    """Row multipliers ``y`` (non-negative on ``<=`` rows) with ``y^T A = 0`` and ``y^T b < 0``."""

    farkas: tuple[Fraction, ...]


@dataclass(frozen=True)
class Optimal:
    value: Fraction
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class Unbounded:
    """A feasible point plus a ray along which the objective grows without bound."""

    point: tuple[Fraction, ...]
    ray: tuple[Fraction, ...]


FeasibilityResult = Union[Feasible, Infeasible]
OptimizeResult = Union[Optimal, Unbounded, Infeasible]


class Tableau:
    """Mutable simplex state over the rows of a :class:`ConcreteLP`.

    Variables ``0..n-1`` are the LP columns, ``n..n+m-1`` the row slacks and
    ``n+m`` a scratch objective row.  ``rows[b]`` expresses basic ``b`` as a
    combination of nonbasic variables; ``cols[j]`` lists the basic variables
    whose row mentions nonbasic ``j``.
    """

    def __init__(self, lp: ConcreteLP):
        n, m = lp.num_vars, lp.num_rows
        self.n, self.m = n, m
        self.obj = n + m
        size = n + m + 1
        self.lo: list = [None] * size
        self.hi: list = [None] * size
        self.val: list = [ZERO] * size
        self.rows: dict[int, dict[int, mpq]] = {}
        self.cols: list[set[int]] = [set() for _ in range(size)]
        # original columns that carry bounds; certificates need this empty
        self.bounded: set[int] = set()
        for r, (terms, rel, b) in enumerate(zip(lp.lhs, lp.rels, lp.rhs)):
            s = n + r
            b = _mpq(b)
            self.hi[s] = b
            if rel == EQ:
                self.lo[s] = b
            elif rel != LE:
                raise ValueError(f"unknown relation {rel!r}")
            row: dict[int, mpq] = {}
            for j, c in terms:
                row[j] = row.get(j, ZERO) + _mpq(c)
            row = {j: c for j, c in row.items() if c}
            self.rows[s] = row
            for j in row:
                self.cols[j].add(s)

    # -- primitive moves -------------------------------------------------

    def update(self, j: int, v) -> None:
        """Move nonbasic ``j`` to value ``v`` and propagate to basic variables."""
        delta = v - self.val[j]
        if delta:
            val, rows = self.val, self.rows
            for b in self.cols[j]:
                val[b] += rows[b][j] * delta
            val[j] = v

    def pivot(self, i: int, j: int) -> None:
        """Exchange basic ``i`` with nonbasic ``j`` (``rows[i][j]`` must be nonzero)."""
        rows, cols = self.rows, self.cols
        row_i = rows.pop(i)
        inv = 1 / row_i.pop(j)
        for k in row_i:
            cols[k].discard(i)
        new = {k: -c * inv for k, c in row_i.items()}
        new[i] = inv
        users = cols[j]
        users.discard(i)
        cols[j] = set()
        for b in users:
            rb = rows[b]
            c = rb.pop(j)
            for k, ck in new.items():
                old = rb.get(k)
                if old is None:
                    rb[k] = c * ck
                    cols[k].add(b)
                else:
                    nv = old + c * ck
                    if nv:
                        rb[k] = nv
                    else:
                        del rb[k]
                        cols[k].discard(b)
        rows[j] = new
        for k in new:
            cols[k].add(j)

    def pivot_and_update(self, i: int, j: int, v) -> None:
        val, rows = self.val, self.rows
        theta = (v - val[i]) / rows[i][j]
        val[i] = v
        val[j] += theta
        for b in self.cols[j]:
            if b != i:
                val[b] += rows[b][j] * theta
        self.pivot(i, j)

    # -- bounds used by incremental callers ---------------------------------

    def fix(self, j: int, v) -> None:
        v = _mpq(v)
        self.lo[j] = self.hi[j] = v
        self.bounded.add(j)
        if j not in self.rows:
            self.update(j, v)

    def release(self, j: int) -> None:
        self.lo[j] = self.hi[j] = None
        self.bounded.discard(j)

    # -- feasibility ----------------------------------------------------------

    def check(self) -> tuple[int, bool] | None:
        """Restore bound feasibility.  Returns None, or ``(row, increase)`` on conflict."""
        rows, val, lo, hi = self.rows, self.val, self.lo, self.hi
        while True:
            bad = None
            for i in sorted(rows):
                v = val[i]
                if lo[i] is not None and v < lo[i]:
                    bad, increase = i, True
                    break
                if hi[i] is not None and v > hi[i]:
                    bad, increase = i, False
                    break
            if bad is None:
                return None
            row = rows[bad]
            for j in sorted(row):
                if increase == (row[j] > 0):
                    if hi[j] is None or val[j] < hi[j]:
                        break
                elif lo[j] is None or val[j] > lo[j]:
                    break
            else:
                return bad, increase
            self.pivot_and_update(bad, j, lo[bad] if increase else hi[bad])

    def farkas(self, conflict: tuple[int, bool]) -> tuple[Fraction, ...]:
        """Row multipliers explaining a conflict found by :meth:`check`."""
        if self.bounded:
            raise ValueError("certificates are only available without column bounds")
        i, increase = conflict
        n = self.n
        y = [ZERO] * self.m
        sign = -1 if increase else 1
        y[i - n] += sign
        for j, a in self.rows[i].items():
            assert j >= n, "free column in a conflict row"
            y[j - n] -= sign * a
        den = lcm(*(int(v.denominator) for v in y)) if y else 1
        ints = [int(v * den) for v in y]
        g = gcd(*ints) or 1
        return tuple(Fraction(v // g) for v in ints)

    def point(self) -> tuple[Fraction, ...]:
        return tuple(_frac(v) for v in self.val[: self.n])

    # -- optimization ----------------------------------------------------------

    def maximize(self, objective: Mapping[int, mpq]) -> tuple[str, object]:
        """Maximize over the current bounds; the tableau must be feasible.

        Returns ``("optimal", value)`` or ``("unbounded", ray)``.
        """
        rows, cols, val, lo, hi = self.rows, self.cols, self.val, self.lo, self.hi
        obj = self.obj
        row: dict[int, mpq] = {}
        for j, c in objective.items():
            if j in rows:
                for k, ck in rows[j].items():
                    row[k] = row.get(k, ZERO) + c * ck
            else:
                row[j] = row.get(j, ZERO) + c
        row = {k: c for k, c in row.items() if c}
        rows[obj] = row
        for k in row:
            cols[k].add(obj)
        val[obj] = sum((c * val[j] for j, c in objective.items()), ZERO)
        try:
            while True:
                row = rows[obj]
                enter = None
                for j in sorted(row):
                    d = row[j]
                    if d > 0:
                        if hi[j] is None or val[j] < hi[j]:
                            enter, up = j, True
                            break
                    elif lo[j] is None or val[j] > lo[j]:
                        enter, up = j, False
                        break
                if enter is None:
                    return "optimal", val[obj]
                j = enter
                best_t = best = None
                if up and hi[j] is not None:
                    best_t, best = hi[j] - val[j], j
                elif not up and lo[j] is not None:
                    best_t, best = val[j] - lo[j], j
                for b in cols[j]:
                    if b == obj:
                        continue
                    rate = rows[b][j] if up else -rows[b][j]
                    if rate > 0 and hi[b] is not None:
                        t = (hi[b] - val[b]) / rate
                    elif rate < 0 and lo[b] is not None:
                        t = (lo[b] - val[b]) / rate
                    else:
                        continue
                    if best_t is None or t < best_t or (t == best_t and b < best):
                        best_t, best = t, b
                if best is None:
                    return "unbounded", self._ray(j, up)
                if best == j:
                    self.update(j, val[j] + best_t if up else val[j] - best_t)
                else:
                    rate = rows[best][j] if up else -rows[best][j]
                    self.pivot_and_update(best, j, hi[best] if rate > 0 else lo[best])
        finally:
            for k in rows.pop(obj):
                cols[k].discard(obj)

    def _ray(self, j: int, up: bool) -> tuple[Fraction, ...]:
        step = 1 if up else -1
        ray = [Fraction(0)] * self.n
        if j < self.n:
            ray[j] = Fraction(step)
        for b in self.cols[j]:
            if b < self.n:
                ray[b] = _frac(self.rows[b][j] * step)
        return tuple(ray)


def solve_feasibility(lp: ConcreteLP) -> FeasibilityResult:
    """Exact feasible point, or a Farkas certificate of infeasibility."""
    t = Tableau(lp)
    conflict = t.check()
    if conflict is None:
        return Feasible(t.point())
    return Infeasible(t.farkas(conflict))


def optimize(lp: ConcreteLP, objective: Sequence | Mapping[int, object], sense: str = "max") -> OptimizeResult:
    """Optimize a linear objective (dense sequence or sparse mapping) exactly."""
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', not {sense!r}")
    items = objective.items() if isinstance(objective, Mapping) else enumerate(objective)
    sign = 1 if sense == "max" else -1
    obj = {j: _mpq(c) * sign for j, c in items if c}
    t = Tableau(lp)
    conflict = t.check()
    if conflict is not None:
        return Infeasible(t.farkas(conflict))
    status, payload = t.maximize(obj)
    if status == "unbounded":
        return Unbounded(t.point(), payload)
    return Optimal(_frac(payload) * sign, t.point())


def _ray_ok(lp: ConcreteLP, ray: Sequence[Fraction]) -> bool:
    for r in range(lp.num_rows):
        v = lp.row_value(r, ray)
        if v > 0 or (lp.rels[r] == EQ and v != 0):
            return False
    return any(ray)


def verify_certificate(lp: ConcreteLP, result) -> bool:
    """Check a solver result against ``lp`` using exact arithmetic only."""
    if isinstance(result, (Feasible, Optimal)):
        return lp.satisfied_by(result.point)
    if isinstance(result, Unbounded):
        return lp.satisfied_by(result.point) and len(result.ray) == lp.num_vars and _ray_ok(lp, result.ray)
    if isinstance(result, Infeasible):
        y = result.farkas
        if len(y) != lp.num_rows:
            return False
        combo = [Fraction(0)] * lp.num_vars
        total = Fraction(0)
        for r, yr in enumerate(y):
            if lp.rels[r] == LE and yr < 0:
                return False
            if yr:
                for j, c in lp.lhs[r]:
                    combo[j] += yr * c
                total += yr * lp.rhs[r]
        return not any(combo) and total < 0
    return False
