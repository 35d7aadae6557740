"""Hive-free ground truth for multiplicities.

* :func:`lr_coefficient` counts Littlewood-Richardson skew tableaux.
* :func:`invariant_c` iterates tensor products of GL(n) irreducibles.
* :func:`multiplicity_formula` sums products of invariant multiplicities over
  all arrow-weight families, using the Cauchy decomposition of each arrow.
* :func:`torus_multiplicity` counts arrow monomials when every dimension is 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BoundExceeded, ValidationError
from .quiver import (
    Quiver,
    d_map,
    dual_weight,
    topological_order,
    validate_dims,
    validate_family,
    validate_quiver,
    vertex_star,
)

Partition = tuple[int, ...]


def _strip(p: Sequence[int]) -> Partition:
    p = tuple(int(v) for v in p)
    if any(v < 0 for v in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValidationError(f"{list(p)} is not a partition")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^nu_{lam, mu}``: LR tableaux of shape ``nu/lam`` and content ``mu``."""
    return _lr(_strip(lam), _strip(mu), _strip(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if sum(lam) + sum(mu) != sum(nu) or len(lam) > len(nu):
        return 0
    if any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    if not mu:
        return 1
    inner = lam + (0,) * (len(nu) - len(lam))
    # cells in reverse reading order: rows top to bottom, each right to left
    cells = [(r, c) for r in range(len(nu)) for c in range(nu[r] - 1, inner[r] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    count = [0] * (len(mu) + 1)
    total = 0

    def place(k: int) -> None:
        nonlocal total
        if k == len(cells):
            total += 1
            return
        r, c = cells[k]
        # row entries weakly increase left to right; the cell to the right is filled
        hi = filling.get((r, c + 1), len(mu))
        # LR tableaux only use letters <= row index + 1
        hi = min(hi, r + 1)
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if count[v] == mu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            filling[(r, c)] = v
            count[v] += 1
            place(k + 1)
            count[v] -= 1
            del filling[(r, c)]

    place(0)
    return total


def _partitions_containing(kappa: Partition, size: int, rows: int) -> Iterator[Partition]:
    """Partitions ``nu`` with ``kappa <= nu``, ``|nu| = size`` and at most ``rows`` parts."""
    base = kappa + (0,) * (rows - len(kappa))
    extra = size - sum(kappa)
    if extra < 0 or len(kappa) > rows:
        return

    def rec(i: int, prev: int, left: int, acc: list[int]) -> Iterator[Partition]:
        if i == rows:
            if left == 0:
                yield _strip(acc)
            return
        for v in range(min(prev, base[i] + left), base[i] - 1, -1):
            acc.append(v)
            yield from rec(i + 1, v, left - (v - base[i]), acc)
            acc.pop()

    yield from rec(0, base[0] + extra if rows else 0, extra, [])


def tensor_decomposition(n: int, parts: Sequence[Partition]) -> dict[Partition, int]:
    """Multiplicities of polynomial GL(n) irreducibles in a tensor product."""
    dist: dict[Partition, int] = {(): 1}
    for alpha in parts:
        alpha = _strip(alpha)
        new: dict[Partition, int] = {}
        for kappa, mult in dist.items():
            for nu in _partitions_containing(kappa, sum(kappa) + sum(alpha), n):
                c = _lr(kappa, alpha, nu)
                if c:
                    new[nu] = new.get(nu, 0) + mult * c
        dist = new
    return dist


def invariant_c(n: int, weights: Sequence[Sequence[int]]) -> int:
    """Multiplicity of the trivial GL(n) representation in a tensor product.

    Weights are shifted by multiples of the determinant to become partitions;
    the trivial multiplicity is the multiplicity of the (shifted) dual of the
    last factor in the product of the others.
    """
    ws = [tuple(int(v) for v in w) for w in weights]
    for w in ws:
        if len(w) != n:
            raise ValidationError(f"weight {list(w)} does not have length {n}")
    return _invariant_c(n, tuple(ws))


@lru_cache(maxsize=None)
def _invariant_c(n: int, ws: tuple[tuple[int, ...], ...]) -> int:
    if not ws:
        return 1
    if sum(map(sum, ws)) != 0:
        return 0
    *rest, last = ws
    shift = 0
    parts = []
    for w in rest:
        dual_weight(w)  # dominance check
        parts.append(tuple(v - w[-1] for v in w))
        shift += w[-1]
    # V^{w+p} = V^w (x) det^p; move all shifts onto the last factor
    target = tuple(v - shift for v in dual_weight(last))
    if target[-1] < 0:
        return 0
    return tensor_decomposition(n, parts).get(_strip(target), 0)


def _compositions(total: int, k: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        if total == 0:
            yield ()
        return
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, k - 1):
            yield (first,) + rest


def arrow_flows(q: Quiver, excess: Sequence[int], bound: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-negative integer flows ``f`` with ``sum_out f - sum_in f = excess[x]`` at every vertex.

    Vertices are processed in topological order; each vertex splits its
    outgoing total among its out-arrows.  ``bound`` caps any single arrow flow.
    """
    order = topological_order(q)
    stars = {x: vertex_star(q, x) for x in q.vertices}
    flow = [0] * len(q.arrows)

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(order):
            yield tuple(flow)
            return
        x = order[k]
        out, inc = stars[x]
        total = excess[x - 1] + sum(flow[a] for a in inc)
        if not out:
            if total == 0:
                yield from rec(k + 1)
            return
        if total < 0:
            return
        if bound is not None and total > bound:
            raise BoundExceeded(f"arrow flow out of vertex {x} reaches {total} > {bound}")
        for split in _compositions(total, len(out)):
            for a, f in zip(out, split):
                flow[a] = f
            yield from rec(k + 1)
        for a in out:
            flow[a] = 0

    yield from rec(0)


def _partitions_of(size: int, parts: int) -> list[Partition]:
    out: list[Partition] = []

    def rec(left: int, cap: int, acc: list[int]) -> None:
        if left == 0:
            out.append(tuple(acc))
            return
        if len(acc) == parts:
            return
        for v in range(min(left, cap), 0, -1):
            acc.append(v)
            rec(left - v, v, acc)
            acc.pop()

    rec(size, size, [])
    return out


def multiplicity_formula(
    q: Quiver, dims: Sequence[int], lam: Sequence[Sequence[int]], bound: int | None = None
) -> int:
    """``m_Q(lam)`` as a sum over arrow weights of products of vertex invariants."""
    validate_quiver(q)
    dims = validate_dims(q, dims)
    lam = validate_family(dims, lam)
    excess = [sum(w) for w in lam]
    arrows = q.arrows
    stars = {x: vertex_star(q, x) for x in q.vertices}
    # vertex x can be evaluated once its last incident arrow is assigned
    ready_after: dict[int, list[int]] = {}
    for x in q.vertices:
        out, inc = stars[x]
        ready_after.setdefault(max(out + inc, default=-1), []).append(x)
    lam_dual = [dual_weight(w) for w in lam]

    total = 0
    for flow in arrow_flows(q, excess, bound):
        choices = []
        for a, (x, y) in enumerate(arrows):
            nx, ny = dims[x - 1], dims[y - 1]
            choices.append(
                [p + (0,) * (nx - len(p)) for p in _partitions_of(flow[a], min(nx, ny))]
            )
        mus: list[tuple[int, ...]] = [()] * len(arrows)

        def vertex_factor(x: int) -> int:
            out, inc = stars[x]
            n = dims[x - 1]
            ws = [lam_dual[x - 1]]
            ws.extend(mus[a] for a in out)
            ws.extend(dual_weight(d_map(mus[a], n)) for a in inc)
            return _invariant_c(n, tuple(ws))

        def rec(a: int, acc: int) -> int:
            if a == len(arrows):
                return acc
            s = 0
            for mu in choices[a]:
                mus[a] = mu
                f = acc
                for x in ready_after.get(a, ()):
                    f *= vertex_factor(x)
                    if not f:
                        break
                if f:
                    s += rec(a + 1, f)
            return s

        base = 1
        for x in ready_after.get(-1, ()):
            base *= vertex_factor(x)
        if base:
            total += rec(0, base)
    return total


def torus_multiplicity(q: Quiver, lam: Sequence[int]) -> int:
    """Number of exponent vectors ``e >= 0`` on the arrows with vertex weights ``lam``.

    Uses a memoized sweep over arrows whose state is the remaining excess at
    each vertex; arrow flows are capped by the total positive excess, which is
    exact for acyclic quivers.
    """
    validate_quiver(q)
    if len(lam) != q.num_vertices:
        raise ValidationError(f"expected {q.num_vertices} weights, got {len(lam)}")
    lam = tuple(int(v) for v in lam)
    if sum(lam) != 0:
        return 0
    cap = sum(v for v in lam if v > 0)
    arrows = q.arrows
    # remaining-degree bookkeeping: after arrow k, vertex x is closed if no later arrow touches it
    last_touch = {x: -1 for x in q.vertices}
    for k, (s, t) in enumerate(arrows):
        last_touch[s] = last_touch[t] = k
    if any(last_touch[x] == -1 and lam[x - 1] != 0 for x in q.vertices):
        return 0

    @lru_cache(maxsize=None)
    def rec(k: int, rem: tuple[int, ...]) -> int:
        if k == len(arrows):
            return int(not any(rem))
        s, t = arrows[k]
        count = 0
        for e in range(cap + 1):
            r = list(rem)
            r[s - 1] -= e
            r[t - 1] += e
            if last_touch[s] == k and r[s - 1] != 0:
                if r[s - 1] < 0:
                    break
                continue
            if last_touch[t] == k and r[t - 1] != 0:
                continue
            count += rec(k + 1, tuple(r))
        return count

    return rec(0, lam)
