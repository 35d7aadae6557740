import itertools

import pytest
from hypothesis import given, settings, strategies as st

from quivermoment.decision import count_integer_points, kt_coefficient
from quivermoment.errors import LengthMismatch
from quivermoment.hive import hive_block, hive_row_counts, kt_block, param_slot, rhombi
from quivermoment.lpmodel import audit_combinatorial, hive_program, instantiate, kt_program
from quivermoment.oracle import invariant_c
from quivermoment.selftest import dominant_weights


def _hive(n):
    names = [[f"w{k}[{i}]" for i in range(1, n + 1)] for k in range(3)]
    return hive_block(n, *(param_slot(s) for s in names))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 10, 20, 30])
def test_row_counts(n):
    block = _hive(n)
    expected = hive_row_counts(n)
    for tag, k in expected.items():
        assert block.count(tag) == k
    assert block.count("rhombus") == 3 * n * (n - 1) // 2
    assert block.count("boundary") == 3 * n
    assert len(block.variables) == (n + 1) * (n + 2) // 2
    assert len(rhombi(n)) == 3 * n * (n - 1) // 2


@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_coefficients_unimodular(n):
    for s in (3, 4, 5):
        assert audit_combinatorial(kt_program(n, s)).ok


def test_rhombi_are_unit_rhombi():
    for s1, s2, o1, o2 in rhombi(4):
        cells = {s1, s2, o1, o2}
        assert len(cells) == 4
        # opposite corners sum to the same point as the shared ones
        assert tuple(map(sum, zip(s1, s2))) == tuple(map(sum, zip(o1, o2)))


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        hive_block(2, param_slot(["a"]), param_slot(["b", "c"]), param_slot(["d", "e"]))
    with pytest.raises(LengthMismatch):
        kt_block(2, [param_slot(["a", "b"]), param_slot(["c"])])


def test_small_values():
    assert kt_coefficient(2, [(1, 0), (1, 0), (0, -1), (0, -1)]) == 2
    assert kt_coefficient(2, [(1, 0), (0, -1)]) == 1
    assert kt_coefficient(2, [(1, 0), (1, 0)]) == 0
    assert kt_coefficient(3, [(0, 0, 0)]) == 1
    assert kt_coefficient(3, [(1, 0, 0)]) == 0


def test_hive_matches_lr_oracle_n2():
    ws = dominant_weights(2, -2, 2)
    for a, b, c in itertools.product(ws, repeat=3):
        if sum(a) + sum(b) + sum(c) == 0:
            lp = instantiate(hive_program(2), [a, b, c])
            assert count_integer_points(lp) == invariant_c(2, [a, b, c])


def test_nonzero_sum_is_zero():
    assert kt_coefficient(2, [(1, 0), (1, 0), (1, 0)]) == 0


small = st.lists(st.integers(-2, 2), min_size=2, max_size=2).map(lambda v: tuple(sorted(v, reverse=True)))


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=3, max_size=4), st.randoms(use_true_random=False))
def test_slot_permutation_invariance(ws, rnd):
    perm = list(ws)
    rnd.shuffle(perm)
    assert kt_coefficient(2, ws) == kt_coefficient(2, perm)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=3, max_size=3), st.integers(-3, 3), st.integers(-3, 3))
def test_translation_invariance(ws, s, t):
    a, b, c = ws
    shifted = [tuple(v + s for v in a), tuple(v + t for v in b), tuple(v - s - t for v in c)]
    assert kt_coefficient(2, ws) == kt_coefficient(2, shifted)


@settings(max_examples=30, deadline=None)
@given(st.lists(small, min_size=4, max_size=4))
def test_four_slots_match_recursion(ws):
    # C(w1..w4) = sum over mu of C(mu*, w1, w2) C(mu, w3, w4)
    total = 0
    for mu in dominant_weights(2, -6, 6):
        dual = tuple(-v for v in reversed(mu))
        left = kt_coefficient(2, [dual, ws[0], ws[1]])
        if left:
            total += left * kt_coefficient(2, [mu, ws[2], ws[3]])
    assert kt_coefficient(2, ws) == total

