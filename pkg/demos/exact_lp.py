"""The exact rational LP engine on its own."""

from quivermoment import ConcreteLP, optimize, solve_feasibility, verify_certificate

# max x + y  s.t.  2x + y <= 3,  x + 3y <= 4,  x, y >= 0
lp = ConcreteLP.from_rows(2, [
    ({0: 2, 1: 1}, "<=", 3),
    ({0: 1, 1: 3}, "<=", 4),
    ({0: -1}, "<=", 0),
    ({1: -1}, "<=", 0),
])
res = optimize(lp, [1, 1])
print(res, verify_certificate(lp, res))

res = optimize(lp, [3, 1])
print("max 3x + y =", res.value, "at", tuple(map(str, res.point)))

# drop the upper bounds: the objective is unbounded along a ray
free = ConcreteLP.from_rows(2, [({0: -1}, "<=", 0), ({1: -1}, "<=", 0)])
res = optimize(free, [1, 1])
print(type(res).__name__, "ray", res.ray, verify_certificate(free, res))

# x >= 0 and x <= -1: y = (1, 1) combines the rows into 0 <= -1
bad = ConcreteLP.from_rows(1, [({0: -1}, "<=", 0), ({0: 1}, "<=", -1)])
res = solve_feasibility(bad)
print(res, verify_certificate(bad, res))
