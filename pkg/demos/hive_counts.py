"""Littlewood-Richardson coefficients as lattice points of hives."""

from quivermoment import invariant_c, kt_coefficient, lr_coefficient

# c^{321}_{21,21}: two LR tableaux of shape 321/21 and content 21
print("LR tableaux:", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))

# the same number as the count of integer hives with boundary (21, 21, (321)*)
print("hive count: ", kt_coefficient(3, [(2, 1, 0), (2, 1, 0), (-1, -2, -3)]))

# four tensor factors go through an auxiliary dominant weight
ws = [(1, 0), (1, 0), (0, -1), (0, -1)]
print("C(V, V, V*, V*) for GL(2):", kt_coefficient(2, ws), "lattice points,", invariant_c(2, ws), "by tensor products")

# weights that do not sum to zero carry no invariants
print("C((1,0),(1,0),(1,0)):", kt_coefficient(2, [(1, 0), (1, 0), (1, 0)]))
