"""Quivers, dimension vectors and dominant weights.

Vertices are numbered ``1..num_vertices``.  Arrows are identified by their
position in :attr:`Quiver.arrows`, so parallel arrows stay distinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadVertexId,
    CyclicQuiver,
    Disconnected,
    LengthMismatch,
    NotDominant,
    SelfLoop,
    ShapeMismatch,
    TruncationViolation,
    ValidationError,
)

Weight = tuple[int, ...]
WeightFamily = tuple[Weight, ...]
Arrow = tuple[int, int]


@dataclass(frozen=True)
class Quiver:
    num_vertices: int
    arrows: tuple[Arrow, ...]

    def __init__(self, num_vertices: int, arrows: Sequence[Sequence[int]]):
        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "arrows", tuple((int(s), int(t)) for s, t in arrows))

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def __repr__(self) -> str:
        arrows = ", ".join(f"{s}->{t}" for s, t in self.arrows)
        return f"Quiver({self.num_vertices}, [{arrows}])"


def diamond() -> Quiver:
    """The quiver 1->2, 1->3, 2->4, 3->4."""
    return Quiver(4, [(1, 2), (1, 3), (2, 4), (3, 4)])


def a3() -> Quiver:
    """The quiver 1 -> 3 <- 2."""
    return Quiver(3, [(1, 3), (2, 3)])


def path(k: int) -> Quiver:
    """Equioriented path 1 -> 2 -> ... -> k."""
    return Quiver(k, [(i, i + 1) for i in range(1, k)])


def find_cycle(q: Quiver) -> list[int] | None:
    """Return a directed cycle as a closed vertex list, or None."""
    succ: dict[int, list[int]] = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        succ[s].append(t)
    color = dict.fromkeys(q.vertices, 0)
    parent: dict[int, int] = {}
    for root in q.vertices:
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                    break
                if color[w] == 1:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    cycle.reverse()
                    return cycle + [w]
            else:
                color[v] = 2
                stack.pop()
    return None


def validate_quiver(q: Quiver) -> None:
    if q.num_vertices < 1:
        raise ValidationError("a quiver needs at least one vertex")
    for a, (s, t) in enumerate(q.arrows):
        for v in (s, t):
            if not 1 <= v <= q.num_vertices:
                raise BadVertexId(f"arrow {a} ({s}->{t}) uses vertex {v} outside 1..{q.num_vertices}")
        if s == t:
            raise SelfLoop(f"arrow {a} is a loop at vertex {s}")
    cycle = find_cycle(q)
    if cycle is not None:
        raise CyclicQuiver(cycle)
    adj: dict[int, set[int]] = {v: set() for v in q.vertices}
    for s, t in q.arrows:
        adj[s].add(t)
        adj[t].add(s)
    seen = {1}
    todo = [1]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    if len(seen) != q.num_vertices:
        missing = sorted(set(q.vertices) - seen)
        raise Disconnected(f"vertices {missing} are not connected to vertex 1")


def validate_dims(q: Quiver, dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(n) for n in dims)
    if len(dims) != q.num_vertices:
        raise ShapeMismatch(f"expected {q.num_vertices} dimensions, got {len(dims)}")
    if any(n < 1 for n in dims):
        raise ValidationError(f"dimensions must be positive, got {list(dims)}")
    return dims


def is_dominant(w: Sequence[int]) -> bool:
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_dominant(w: Sequence[int]) -> Weight:
    w = tuple(int(v) for v in w)
    if not is_dominant(w):
        raise NotDominant(f"weight {list(w)} is not weakly decreasing")
    return w


def validate_family(dims: Sequence[int], lam: Sequence[Sequence[int]]) -> WeightFamily:
    """Check that ``lam`` has one dominant weight of length ``dims[x]`` per vertex."""
    if len(lam) != len(dims):
        raise ShapeMismatch(f"expected {len(dims)} weights, got {len(lam)}")
    out = []
    for x, (n, w) in enumerate(zip(dims, lam), start=1):
        if len(w) != n:
            raise ShapeMismatch(f"weight at vertex {x} has length {len(w)}, expected {n}")
        out.append(check_dominant(w))
    return tuple(out)


def dual_weight(w: Sequence[int]) -> Weight:
    """Highest weight of the dual representation: negate and reverse."""
    w = check_dominant(w)
    return tuple(-v for v in reversed(w))


def d_map(mu: Sequence[int], n_y: int) -> Weight:
    """Truncate ``mu`` to ``n_y`` coordinates, or pad it with zeros."""
    mu = check_dominant(mu)
    if mu and mu[-1] < 0:
        raise NotDominant(f"{list(mu)} is not a polynomial weight")
    if len(mu) > n_y:
        if any(mu[n_y:]):
            raise TruncationViolation(f"{list(mu)} has nonzero entries beyond position {n_y}")
        return mu[:n_y]
    return mu + (0,) * (n_y - len(mu))


def vertex_star(q: Quiver, x: int) -> tuple[list[int], list[int]]:
    """Ids of the arrows leaving and entering vertex ``x``, in arrow order."""
    if not 1 <= x <= q.num_vertices:
        raise BadVertexId(f"vertex {x} outside 1..{q.num_vertices}")
    out = [a for a, (s, _) in enumerate(q.arrows) if s == x]
    inc = [a for a, (_, t) in enumerate(q.arrows) if t == x]
    return out, inc


def topological_order(q: Quiver) -> list[int]:
    indeg = dict.fromkeys(q.vertices, 0)
    for _, t in q.arrows:
        indeg[t] += 1
    ready = [v for v in q.vertices if indeg[v] == 0]
    order = []
    while ready:
        v = min(ready)
        ready.remove(v)
        order.append(v)
        for s, t in q.arrows:
            if s == v:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    if len(order) != q.num_vertices:
        raise CyclicQuiver(find_cycle(q) or [])
    return order


def check_lengths(n: int, *weights: Sequence) -> None:
    for w in weights:
        if len(w) != n:
            raise LengthMismatch(f"expected length {n}, got {len(w)}")


def random_acyclic_quiver(rng, max_vertices: int = 4, parallel: float = 0.2) -> Quiver:
    """Orient a random connected graph along a random vertex order.

    ``rng`` is a :class:`random.Random`.  A random spanning tree keeps the
    quiver connected; extra edges and parallel copies are added at random.
    """
    k = rng.randint(2, max_vertices)
    order = list(range(1, k + 1))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    edges = []
    for i in range(1, k):
        edges.append((order[rng.randrange(i)], order[i]))
    for u in range(1, k + 1):
        for v in range(u + 1, k + 1):
            if (u, v) not in edges and (v, u) not in edges and rng.random() < 0.3:
                edges.append((u, v))
    arrows = []
    for u, v in edges:
        s, t = (u, v) if rank[u] < rank[v] else (v, u)
        arrows.append((s, t))
        if rng.random() < parallel:
            arrows.append((s, t))
    return Quiver(k, sorted(arrows))
