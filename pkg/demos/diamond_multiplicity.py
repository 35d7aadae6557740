"""Multiplicities and moment cone membership on the diamond quiver."""

from quivermoment import (
    build_moment_polytope,
    decide_membership,
    diamond,
    membership,
    multiplicity,
    multiplicity_formula,
    torus_multiplicity,
)

q = diamond()
dims = [1, 1, 1, 1]
lam = [(2,), (0,), (0,), (-2,)]

prog = build_moment_polytope(q, dims)
print(prog.num_rows, "rows,", prog.num_vars, "variables,", len(prog.params), "weight parameters")

# the polynomials a*c, b*d on the two paths 1->2->4, 1->3->4: degree 2 gives 3 monomials
print("polytope count:", multiplicity(q, dims, lam))
print("flow formula:  ", multiplicity_formula(q, dims, lam))
print("torus count:   ", torus_multiplicity(q, [2, 0, 0, -2]))

# membership is an LP feasibility question; the certificate comes along
res = membership(q, dims, lam)
print("member:", res.member, "point:", [str(v) for v in res.certificate.point[:4]], "...")

res = membership(q, dims, [(-2,), (0,), (0,), (2,)])
print("member:", res.member, "Farkas multipliers:", sum(1 for y in res.certificate.farkas if y), "nonzero")

# saturation: scaling lam never changes the answer
for n in (1, 2, 3):
    print(n, decide_membership(q, [2, 1, 1, 2], [(n, 0), (0,), (0,), (0, -n)]))

# higher dimensions
print("m for dims [2,2,2,2]:", multiplicity(q, [2, 2, 2, 2], [(1, 1), (0, 0), (0, 0), (-1, -1)]))
