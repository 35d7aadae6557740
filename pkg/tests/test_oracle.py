import itertools
import random
from fractions import Fraction

import pytest

from quivermoment.errors import BoundExceeded, ValidationError
from quivermoment.oracle import (
    arrow_flows,
    invariant_c,
    lr_coefficient,
    multiplicity_formula,
    tensor_decomposition,
    torus_multiplicity,
)
from quivermoment.quiver import Quiver, a3, diamond, path
from quivermoment.selftest import grid_quivers


def weyl_dimension(p, n):
    p = tuple(p) + (0,) * (n - len(p))
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(p[i] - p[j] + j - i, j - i)
    return int(d)


def partitions_up_to(size, rows):
    out = []
    for k in range(size + 1):
        for p in itertools.product(range(k, -1, -1), repeat=rows):
            if sum(p) == k and all(p[i] >= p[i + 1] for i in range(rows - 1)):
                out.append(p)
    return out


def test_known_lr_values():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (1,), (2, 2)) == 1
    assert lr_coefficient((2, 1), (1,), (3, 1, 1)) == 0
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


def test_lr_rejects_non_partitions():
    with pytest.raises(ValidationError):
        lr_coefficient((1, 2), (1,), (2, 2))
    with pytest.raises(ValidationError):
        lr_coefficient((1, -1), (1,), (2,))


@pytest.mark.parametrize("n", [2, 3])
def test_tensor_decomposition_dimensions(n):
    # dim V^a dim V^b = sum_c mult(c) dim V^c, Weyl dimension formula as the check
    for a in partitions_up_to(3, n):
        for b in partitions_up_to(3, n):
            dec = tensor_decomposition(n, [a, b])
            assert weyl_dimension(a, n) * weyl_dimension(b, n) == sum(
                m * weyl_dimension(c, n) for c, m in dec.items()
            )


def test_lr_symmetric():
    parts = partitions_up_to(4, 3)
    for a, b in itertools.product(parts, repeat=2):
        for c in parts:
            if sum(c) == sum(a) + sum(b):
                assert lr_coefficient(a, b, c) == lr_coefficient(b, a, c)


def test_invariant_c_values():
    assert invariant_c(2, [(1, 0), (1, 0), (0, -1), (0, -1)]) == 2
    assert invariant_c(2, [(1, 0), (0, -1)]) == 1
    assert invariant_c(1, [(3,), (-3,)]) == 1
    assert invariant_c(2, [(1, 0), (1, 0)]) == 0
    assert invariant_c(3, []) == 1
    with pytest.raises(ValidationError):
        invariant_c(2, [(1, 0, 0)])


def test_invariant_c_matches_lr():
    # C(a, b, c) = c^{c*}_{a, b} for partitions
    for a, b in itertools.product(partitions_up_to(3, 3), repeat=2):
        for c in partitions_up_to(6, 3):
            if sum(c) == sum(a) + sum(b):
                dual = tuple(-v for v in reversed(c))
                assert invariant_c(3, [a, b, dual]) == lr_coefficient(a, b, c)


def test_arrow_flows_conservation():
    q = diamond()
    flows = list(arrow_flows(q, [3, 0, 0, -3]))
    assert len(flows) == 4
    for f in flows:
        net = [0] * 4
        for (s, t), v in zip(q.arrows, f):
            net[s - 1] += v
            net[t - 1] -= v
        assert net == [3, 0, 0, -3]
    with pytest.raises(BoundExceeded):
        list(arrow_flows(q, [3, 0, 0, -3], bound=1))


def test_named_multiplicities():
    assert multiplicity_formula(diamond(), [1, 1, 1, 1], [(2,), (0,), (0,), (-2,)]) == 3
    assert multiplicity_formula(a3(), [2, 2, 2], [(1, 0), (1, 0), (-1, -1)]) == 1
    assert multiplicity_formula(path(2), [2, 2], [(1, 0), (0, -1)]) == 1
    assert multiplicity_formula(path(2), [2, 2], [(0, 0), (0, 0)]) == 1
    assert multiplicity_formula(path(2), [1, 1], [(-1,), (1,)]) == 0


def test_torus_named_value():
    assert torus_multiplicity(diamond(), [2, 0, 0, -2]) == 3
    assert torus_multiplicity(Quiver(2, [(1, 2), (1, 2)]), [3, -3]) == 4
    assert torus_multiplicity(diamond(), [1, 0, 0, 0]) == 0


def test_torus_agrees_with_formula():
    for q in [a3(), path(3), diamond(), *grid_quivers()]:
        for lam in itertools.product(range(-2, 3), repeat=q.num_vertices):
            fam = [(v,) for v in lam]
            assert torus_multiplicity(q, lam) == multiplicity_formula(q, [1] * q.num_vertices, fam)


def test_formula_scaling_monotone_on_path():
    # m(N lam) > 0 whenever m(lam) > 0 (products of semi-invariants)
    rng = random.Random(3)
    q = path(2)
    for _ in range(20):
        w = tuple(sorted((rng.randint(0, 2) for _ in range(2)), reverse=True))
        lam = [w, tuple(-v for v in reversed(w))]
        if multiplicity_formula(q, [2, 2], lam):
            assert multiplicity_formula(q, [2, 2], [tuple(2 * v for v in x) for x in lam])
