import itertools

import pytest

from quivermoment.quiver import Quiver, a3, diamond
from quivermoment.semistability import (
    NOT_COVERED,
    check_semistable,
    closed_form_a3,
    closed_form_diamond,
    diamond_patterns,
    sigma_to_lambda,
)


def test_sigma_to_lambda():
    assert sigma_to_lambda([1, -2], [2, 3]) == ((1, 1), (-2, -2, -2))
    with pytest.raises(ValueError):
        sigma_to_lambda([1], [1, 1])


def test_not_covered_has_no_truth_value():
    assert closed_form_diamond((1, 3, 1, 1), (0, 0, 0, 0)) is NOT_COVERED
    with pytest.raises(TypeError):
        bool(NOT_COVERED)
    with pytest.raises(TypeError):
        if closed_form_diamond((2, 1, 1, 1), (0, 0, 0, 0)):
            pass


def test_determinant_weights():
    # n1 = n3: det of the map from vertex 1 is a semi-invariant of weight (1, 0, -1)
    assert check_semistable(a3(), [2, 1, 2], [1, 0, -1])
    assert not check_semistable(a3(), [2, 1, 2], [-1, 0, 1])
    assert check_semistable(Quiver(2, [(1, 2)]), [3, 3], [2, -2])


@pytest.mark.parametrize("dims", list(itertools.product((1, 2), repeat=3)))
def test_a3_closed_form(dims):
    for sigma in itertools.product(range(-2, 3), repeat=3):
        assert closed_form_a3(dims, sigma) == check_semistable(a3(), dims, sigma)


@pytest.mark.parametrize("dims", diamond_patterns(1))
def test_diamond_closed_form_n1(dims):
    for sigma in itertools.product(range(-2, 3), repeat=4):
        expected = check_semistable(diamond(), dims, sigma)
        assert closed_form_diamond(dims, sigma) == expected
        if expected:
            assert sum(n * s for n, s in zip(dims, sigma)) == 0


def test_diamond_patterns_covered():
    for n in (1, 2, 5):
        for dims in diamond_patterns(n):
            assert closed_form_diamond(dims, (0, 0, 0, 0)) is True
