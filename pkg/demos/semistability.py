"""Weights of semi-invariants: closed forms against the LP reduction."""

import itertools

from quivermoment import NOT_COVERED, a3, check_semistable, closed_form_a3, closed_form_diamond, diamond

# 1 -> 3 <- 2 with n1 = n2 = n3: det(A)^a det(B)^b has weight (a, b, -a - b)
dims = [2, 2, 2]
for sigma in [(1, 0, -1), (0, 1, -1), (1, 1, -2), (-1, 0, 1), (2, -1, -1)]:
    print(sigma, closed_form_a3(dims, sigma), check_semistable(a3(), dims, sigma))

# dims [1, 1, 2]: only (k, k, -k) with k >= 0 survives
print([s for s in itertools.product(range(-2, 3), repeat=3) if check_semistable(a3(), [1, 1, 2], s)])

# diamond, dims [n, n, n, n+1]
dims = [2, 2, 2, 3]
members = [s for s in itertools.product(range(-3, 4), repeat=4) if check_semistable(diamond(), dims, s)]
print(len(members), "weights in [-3,3]^4, e.g.", members[:3])
print(all(closed_form_diamond(dims, s) for s in members))

# outside the known patterns the closed form declines to answer
print(closed_form_diamond([1, 3, 1, 1], (0, 0, 0, 0)) is NOT_COVERED)
