"""Knutson-Tao hive constraints over symbolic weight slots.

A hive of size ``n`` is a triangular array ``h[i, j]`` with ``0 <= j <= i <= n``.
Row ``i = 0`` is the top corner.  The boundary increments are

* left edge, top to bottom:   ``h[i, 0] - h[i-1, 0] = a_i``
* bottom edge, left to right: ``h[n, j] - h[n, j-1] = b_j``
* right edge, top to bottom:  ``h[i, i] - h[i-1, i-1] = -c_{n+1-i}``

so the integer hives with slots ``(a, b, c)`` are counted by the invariant
multiplicity ``C(a, b, c)``, i.e. the LR coefficient ``c^{c*}_{a, b}``.

Slots are tuples of :class:`Atom` (or ``None`` for a literal zero), so one
generator serves external weights, arrow-weight variables and their duals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import LengthMismatch

LE = "<="
EQ = "="


@dataclass(frozen=True)
class Atom:
    sign: int
    kind: str  # "var" or "param"
    name: str

    def __neg__(self) -> Atom:
        return Atom(-self.sign, self.kind, self.name)


Slot = tuple["Atom | None", ...]


def param_slot(names: Iterable[str]) -> Slot:
    return tuple(Atom(1, "param", s) for s in names)


def var_slot(names: Iterable[str]) -> Slot:
    return tuple(Atom(1, "var", s) for s in names)


def dual_slot(slot: Sequence[Atom | None]) -> Slot:
    """Negate-and-reverse, the symbolic counterpart of ``dual_weight``."""
    return tuple(None if a is None else -a for a in reversed(slot))


@dataclass
class Row:
    """``sum(lhs[v] * v) rel sum(rhs[p] * p)`` with ``rel`` in {"<=", "="}."""

    lhs: dict[str, int]
    rel: str
    rhs: dict[str, int]
    tag: str


def make_row(terms: Iterable[tuple[int, Atom | None]], rel: str, tag: str) -> Row:
    """Collect ``sum(coef * atom) rel 0``; parameters move to the right side."""
    lhs: dict[str, int] = {}
    rhs: dict[str, int] = {}
    for coef, atom in terms:
        if atom is None:
            continue
        c = coef * atom.sign
        if atom.kind == "var":
            lhs[atom.name] = lhs.get(atom.name, 0) + c
        else:
            rhs[atom.name] = rhs.get(atom.name, 0) - c
    lhs = {k: v for k, v in lhs.items() if v}
    rhs = {k: v for k, v in rhs.items() if v}
    return Row(lhs, rel, rhs, tag)


@dataclass
class ConstraintBlock:
    # (name, kind) with kind one of "arrow", "aux", "hive"
    variables: list[tuple[str, str]] = field(default_factory=list)
    rows: list[Row] = field(default_factory=list)

    def extend(self, other: ConstraintBlock) -> None:
        self.variables.extend(other.variables)
        self.rows.extend(other.rows)

    def count(self, tag: str) -> int:
        return sum(1 for r in self.rows if r.tag == tag)


def hive_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n + 1) for j in range(i + 1)]


def rhombi(n: int) -> list[tuple[tuple[int, int], tuple[int, int], tuple[int, int], tuple[int, int]]]:
    """All rhombi as ``(shared1, shared2, opposite1, opposite2)``.

    One rhombus per interior edge of the triangulated triangle; the shared
    edge joins the obtuse corners.
    """
    out = []
    # horizontal edges (i, j)-(i, j+1)
    for i in range(1, n):
        for j in range(i):
            out.append(((i, j), (i, j + 1), (i - 1, j), (i + 1, j + 1)))
    # edges (i, j)-(i+1, j) parallel to the left side
    for i in range(1, n):
        for j in range(1, i + 1):
            out.append(((i, j), (i + 1, j), (i, j - 1), (i + 1, j + 1)))
    # edges (i, j)-(i+1, j+1) parallel to the right side
    for i in range(1, n):
        for j in range(i):
            out.append(((i, j), (i + 1, j + 1), (i + 1, j), (i, j + 1)))
    return out


def hive_block(n: int, a: Sequence, b: Sequence, c: Sequence, prefix: str = "h") -> ConstraintBlock:
    """Hive variables and constraints whose integer points count ``C(a, b, c)``."""
    if n < 1:
        raise LengthMismatch("hive size must be positive")
    for slot in (a, b, c):
        if len(slot) != n:
            raise LengthMismatch(f"slot of length {len(slot)} in a hive of size {n}")

    def h(i: int, j: int) -> Atom:
        return Atom(1, "var", f"{prefix}[{i},{j}]")

    block = ConstraintBlock(variables=[(f"{prefix}[{i},{j}]", "hive") for i, j in hive_cells(n)])
    rows = block.rows
    for s1, s2, o1, o2 in rhombi(n):
        rows.append(make_row([(1, h(*o1)), (1, h(*o2)), (-1, h(*s1)), (-1, h(*s2))], LE, "rhombus"))
    for i in range(1, n + 1):
        rows.append(make_row([(1, h(i, 0)), (-1, h(i - 1, 0)), (-1, a[i - 1])], EQ, "boundary"))
    for j in range(1, n + 1):
        rows.append(make_row([(1, h(n, j)), (-1, h(n, j - 1)), (-1, b[j - 1])], EQ, "boundary"))
    for i in range(1, n + 1):
        rows.append(make_row([(1, h(i, i)), (-1, h(i - 1, i - 1)), (1, c[n - i])], EQ, "boundary"))
    rows.append(make_row([(1, h(0, 0))], EQ, "corner"))
    rows.append(make_row([(1, x) for x in (*a, *b, *c)], EQ, "compatibility"))
    return block


def kt_block(n: int, slots: Sequence[Sequence], prefix: str = "kt") -> ConstraintBlock:
    """Constraints counting the invariants in a tensor product of ``len(slots)`` factors.

    More than three factors are split off two at a time through a fresh
    dominant weight ``mu``: ``C(l_1..l_s) = sum_mu C(mu*, l_1..l_{s-2}) C(mu, l_{s-1}, l_s)``.
    """
    for slot in slots:
        if len(slot) != n:
            raise LengthMismatch(f"slot of length {len(slot)} for GL({n})")
    s = len(slots)
    if s == 0:
        return ConstraintBlock()
    if s == 1:
        (x,) = slots
        return ConstraintBlock(rows=[make_row([(1, x[i])], EQ, "trivial") for i in range(n)])
    if s == 2:
        x, y = slots
        return ConstraintBlock(
            rows=[make_row([(1, y[i]), (1, x[n - 1 - i])], EQ, "dual") for i in range(n)]
        )
    if s == 3:
        return hive_block(n, *slots, prefix=prefix)

    names = [f"{prefix}.mu[{i}]" for i in range(1, n + 1)]
    mu = var_slot(names)
    block = ConstraintBlock(variables=[(v, "aux") for v in names])
    for i in range(n - 1):
        block.rows.append(make_row([(1, mu[i + 1]), (-1, mu[i])], LE, "aux_dominance"))
    block.extend(kt_block(n, [dual_slot(mu), *slots[: s - 2]], prefix=f"{prefix}.L"))
    block.extend(hive_block(n, mu, slots[s - 2], slots[s - 1], prefix=f"{prefix}.R"))
    return block


def hive_row_counts(n: int) -> dict[str, int]:
    """Closed-form row counts of ``hive_block(n, ...)`` by tag."""
    return {"rhombus": 3 * n * (n - 1) // 2, "boundary": 3 * n, "corner": 1, "compatibility": 1}
