"""Assembly of the moment polytope program and its concrete instances.

A :class:`SymbolicProgram` has rows ``A x (<= or =) B lam`` where ``lam`` is the
flattened parameter vector.  Substituting integer weights gives a
:class:`ConcreteLP` with integer right-hand sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ShapeMismatch
from .hive import EQ, LE, ConstraintBlock, Row, dual_slot, kt_block, make_row, param_slot, var_slot
from .quiver import Quiver, check_dominant, validate_dims, validate_quiver, vertex_star

_KIND_ORDER = {"arrow": 0, "aux": 1, "hive": 2}

SparseRow = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ConcreteLP:
    """``lhs[r] . x  rels[r]  rhs[r]`` for every row ``r``; variables are free."""

    num_vars: int
    lhs: tuple[tuple[tuple[int, int | Fraction], ...], ...]
    rels: tuple[str, ...]
    rhs: tuple[int | Fraction, ...]
    var_names: tuple[str, ...] | None = None

    @classmethod
    def from_rows(cls, num_vars: int, rows: Sequence[tuple[dict[int, int], str, int]]) -> ConcreteLP:
        lhs = tuple(tuple(sorted((j, c) for j, c in row.items() if c)) for row, _, _ in rows)
        return cls(num_vars, lhs, tuple(rel for _, rel, _ in rows), tuple(b for _, _, b in rows))

    @property
    def num_rows(self) -> int:
        return len(self.lhs)

    def row_value(self, r: int, x: Sequence) -> Fraction:
        return sum((Fraction(c) * x[j] for j, c in self.lhs[r]), Fraction(0))

    def satisfied_by(self, x: Sequence) -> bool:
        if len(x) != self.num_vars:
            return False
        for r in range(self.num_rows):
            v = self.row_value(r, x)
            if self.rels[r] == EQ and v != self.rhs[r]:
                return False
            if self.rels[r] == LE and v > self.rhs[r]:
                return False
        return True


@dataclass
class SymbolicProgram:
    variables: list[str]
    var_kinds: list[str]
    params: list[str]
    param_shape: tuple[int, ...]
    rows: list[Row]
    # compiled form, filled by compile_program
    lhs: tuple[SparseRow, ...] = ()
    rhs_forms: tuple[SparseRow, ...] = ()
    rels: tuple[str, ...] = ()
    var_index: dict[str, int] = field(default_factory=dict)
    quiver: Quiver | None = None
    dims: tuple[int, ...] | None = None

    @property
    def num_vars(self) -> int:
        return len(self.variables)

    @property
    def num_rows(self) -> int:
        return len(self.rows)


def compile_program(block: ConstraintBlock, params: list[str], param_shape: tuple[int, ...]) -> SymbolicProgram:
    """Order variables (arrow weights, auxiliaries, hive entries) and index rows."""
    decl = sorted(
        ((_KIND_ORDER[kind], pos, name, kind) for pos, (name, kind) in enumerate(block.variables))
    )
    variables = [name for _, _, name, _ in decl]
    kinds = [kind for _, _, _, kind in decl]
    var_index = {v: i for i, v in enumerate(variables)}
    if len(var_index) != len(variables):
        raise ValueError("duplicate variable names in constraint block")
    param_index = {p: i for i, p in enumerate(params)}
    lhs = []
    rhs = []
    for row in block.rows:
        lhs.append(tuple(sorted((var_index[v], c) for v, c in row.lhs.items())))
        rhs.append(tuple(sorted((param_index[p], c) for p, c in row.rhs.items())))
    return SymbolicProgram(
        variables=variables,
        var_kinds=kinds,
        params=params,
        param_shape=param_shape,
        rows=list(block.rows),
        lhs=tuple(lhs),
        rhs_forms=tuple(rhs),
        rels=tuple(r.rel for r in block.rows),
        var_index=var_index,
    )


def weight_params(x: int, n: int) -> list[str]:
    return [f"lam{x}[{i}]" for i in range(1, n + 1)]


def arrow_vars(a: int, n: int) -> list[str]:
    return [f"mu{a}[{j}]" for j in range(1, n + 1)]


def build_moment_polytope(q: Quiver, dims: Sequence[int]) -> SymbolicProgram:
    """Program whose integer points at ``lam`` count the multiplicity ``m_Q(lam)``.

    Arrow ids and vertices follow the quiver's numbering; arrow ``a: x -> y``
    gets variables ``mu{a}[1..n_x]`` constrained to ``D(n_x, n_y)``.  Results
    are cached per ``(q, dims)`` and must not be mutated.
    """
    validate_quiver(q)
    return _build_moment_polytope(q, validate_dims(q, dims))


@lru_cache(maxsize=128)
def _build_moment_polytope(q: Quiver, dims: tuple[int, ...]) -> SymbolicProgram:
    block = ConstraintBlock()
    mu_slots = {}
    for a, (x, y) in enumerate(q.arrows):
        nx, ny = dims[x - 1], dims[y - 1]
        names = arrow_vars(a, nx)
        mu = var_slot(names)
        mu_slots[a] = mu
        block.variables.extend((v, "arrow") for v in names)
        for j in range(nx - 1):
            block.rows.append(make_row([(1, mu[j + 1]), (-1, mu[j])], LE, "arrow_dominance"))
        block.rows.append(make_row([(-1, mu[nx - 1])], LE, "arrow_nonnegative"))
        for j in range(ny, nx):
            block.rows.append(make_row([(1, mu[j])], EQ, "arrow_truncation"))

    params = []
    for x in q.vertices:
        n = dims[x - 1]
        lam = param_slot(weight_params(x, n))
        params.extend(weight_params(x, n))
        out, inc = vertex_star(q, x)
        slots = [dual_slot(lam)]
        slots.extend(mu_slots[a] for a in out)
        for a in inc:
            mu = mu_slots[a]
            # d(mu)*: truncate or zero-pad to length n, then dualize
            d = mu[:n] if len(mu) >= n else mu + (None,) * (n - len(mu))
            slots.append(dual_slot(d))
        block.extend(kt_block(n, slots, prefix=f"v{x}"))

    prog = compile_program(block, params, dims)
    prog.quiver = q
    prog.dims = dims
    return prog


def kt_program(n: int, s: int) -> SymbolicProgram:
    """``kt_block`` with every slot bound to an external weight parameter."""
    params = [f"w{k}[{i}]" for k in range(1, s + 1) for i in range(1, n + 1)]
    slots = [param_slot(params[k * n:(k + 1) * n]) for k in range(s)]
    return compile_program(kt_block(n, slots), params, (n,) * s)


def hive_program(n: int) -> SymbolicProgram:
    return kt_program(n, 3)


def instantiate(prog: SymbolicProgram, lam: Sequence[Sequence[int]]) -> ConcreteLP:
    """Substitute the dominant weights ``lam`` (one per parameter group)."""
    if len(lam) != len(prog.param_shape):
        raise ShapeMismatch(f"expected {len(prog.param_shape)} weights, got {len(lam)}")
    flat: list[int] = []
    for k, (n, w) in enumerate(zip(prog.param_shape, lam), start=1):
        if len(w) != n:
            raise ShapeMismatch(f"weight {k} has length {len(w)}, expected {n}")
        flat.extend(check_dominant(w))
    rhs = tuple(sum(c * flat[p] for p, c in form) for form in prog.rhs_forms)
    return ConcreteLP(prog.num_vars, prog.lhs, prog.rels, rhs, tuple(prog.variables))


def emit_lp_text(lp: ConcreteLP) -> str:
    """Line-oriented text: ``variables N`` then one ``+1*x3 -1*x7 <= 0`` row per line.

    Variables are numbered from 1.  A row without variables prints as ``0``.
    """
    lines = [f"variables {lp.num_vars}"]
    for terms, rel, b in zip(lp.lhs, lp.rels, lp.rhs):
        left = " ".join(f"{c:+d}*x{j + 1}" for j, c in terms) or "0"
        lines.append(f"{left} {rel} {b}")
    return "\n".join(lines) + "\n"


@dataclass
class AuditReport:
    violations: list[tuple[int, str, int]]
    num_rows: int
    num_variables: int
    num_parameters: int

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_combinatorial(prog: SymbolicProgram) -> AuditReport:
    """List every coefficient (left or right side) outside {-1, 0, 1}."""
    bad = []
    for r, row in enumerate(prog.rows):
        for sym, c in (*row.lhs.items(), *row.rhs.items()):
            if c not in (-1, 0, 1):
                bad.append((r, sym, c))
    return AuditReport(bad, prog.num_rows, prog.num_vars, len(prog.params))


def moment_polytope_counts(dims: Sequence[int], q: Quiver) -> tuple[int, int]:
    """Closed-form (rows, variables) of ``build_moment_polytope``.

    Only valid when every vertex has at most two incident arrows, so that each
    vertex block is a single hive or smaller.
    """
    rows = 0
    nvars = 0
    for a, (x, y) in enumerate(q.arrows):
        nx, ny = dims[x - 1], dims[y - 1]
        nvars += nx
        rows += nx + max(0, nx - ny)
    for x in q.vertices:
        n = dims[x - 1]
        out, inc = vertex_star(q, x)
        s = 1 + len(out) + len(inc)
        if s > 3:
            raise ValueError("closed form only covers vertices of degree at most two")
        if s == 3:
            nvars += (n + 1) * (n + 2) // 2
            rows += 3 * n * (n - 1) // 2 + 3 * n + 2
        else:
            rows += n
    return rows, nvars
