"""Weights of semi-invariants (the generic semi-stability problem).

``check_semistable`` reduces to moment-cone membership at the constant
weights ``lam_x = (sigma_x, ..., sigma_x)``.  The polytope grows with the
dimensions, so the reduction is exponential in the bit size of ``dims``; the
closed forms below are constant time but cover only a few quivers and
dimension patterns.
"""

from __future__ import annotations

import enum
from typing import Sequence

from .decision import decide_membership
from .quiver import Quiver, WeightFamily, validate_dims


class Coverage(enum.Enum):
    NOT_COVERED = "not_covered"

    def __bool__(self):
        raise TypeError("NOT_COVERED has no truth value")


NOT_COVERED = Coverage.NOT_COVERED


def sigma_to_lambda(sigma: Sequence[int], dims: Sequence[int]) -> WeightFamily:
    if len(sigma) != len(dims):
        raise ValueError(f"sigma has {len(sigma)} entries for {len(dims)} vertices")
    return tuple((int(s),) * int(n) for s, n in zip(sigma, dims))


def check_semistable(q: Quiver, dims: Sequence[int], sigma: Sequence[int]) -> bool:
    dims = validate_dims(q, dims)
    return decide_membership(q, dims, sigma_to_lambda(sigma, dims))


def closed_form_a3(dims: Sequence[int], sigma: Sequence[int]) -> bool:
    """Semi-invariant weights of ``1 -> 3 <- 2``.

    Outside the equal-dimension case the cone is the ray spanned by a single
    determinant, e.g. ``det(A)^k`` for ``n1 == n3``; semi-invariants are
    polynomials, so ``k >= 0`` and the source weight must be non-negative.
    """
    n1, n2, n3 = dims
    s1, s2, s3 = sigma
    if n1 == n2 == n3:
        return s1 >= 0 and s2 >= 0 and s1 + s2 + s3 == 0
    if n1 == n3 != n2:
        return s1 + s3 == 0 and s2 == 0 and s1 >= 0
    if n1 != n3 == n2:
        return s1 == 0 and s2 + s3 == 0 and s2 >= 0
    if n1 + n2 == n3:
        return s1 == s2 == -s3 and s1 >= 0
    return s1 == s2 == s3 == 0


def _diamond_n_n1_n_n1(n: int, s1: int, s2: int, s3: int, s4: int) -> bool:
    # dims [n, n+1, n, n+1]
    return (
        s1 + s3 >= 0
        and s1 + s2 + s4 >= 0
        and s2 >= 0
        and n * s1 + (n + 1) * s2 + n * s3 + (n + 1) * s4 == 0
    )


def closed_form_diamond(dims: Sequence[int], sigma: Sequence[int]) -> bool | Coverage:
    """Semi-invariant weights of the diamond ``1 -> 2, 1 -> 3, 2 -> 4, 3 -> 4``.

    Only the dimension patterns with ``n_4 <= n_1 + 1`` listed below are
    known in closed form; everything else returns ``NOT_COVERED``.
    """
    n1, n2, n3, n4 = dims
    s1, s2, s3, s4 = sigma
    n = n1
    if (n2, n3, n4) == (n, n, n):
        return (
            s1 >= 0
            and s1 + s2 >= 0
            and s1 + s3 >= 0
            and s1 + s2 + s3 >= 0
            and s1 + s2 + s3 + s4 == 0
        )
    if (n2, n3, n4) == (n, n, n + 1):
        return (
            s1 + s2 + s4 >= 0
            and s1 + s3 + s4 >= 0
            and s4 <= 0
            and n * (s1 + s2 + s3) + (n + 1) * s4 == 0
        )
    if (n2, n3, n4) == (n + 1, n, n + 1):
        return _diamond_n_n1_n_n1(n, s1, s2, s3, s4)
    if (n2, n3, n4) == (n, n + 1, n + 1):
        # vertices 2 and 3 swapped
        return _diamond_n_n1_n_n1(n, s1, s3, s2, s4)
    if (n2, n3, n4) == (n + 1, n + 1, n + 1):
        return s1 >= 0 and s2 >= 0 and s3 >= 0 and n * s1 + (n + 1) * (s2 + s3 + s4) == 0
    return NOT_COVERED


def diamond_patterns(n: int) -> list[tuple[int, int, int, int]]:
    """The dimension vectors handled by :func:`closed_form_diamond` for a given ``n``."""
    return [
        (n, n, n, n),
        (n, n, n, n + 1),
        (n, n + 1, n, n + 1),
        (n, n, n + 1, n + 1),
        (n, n + 1, n + 1, n + 1),
    ]
