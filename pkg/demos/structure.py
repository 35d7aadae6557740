"""Shape of the generated programs: sizes, coefficients, LP text."""

import time

from quivermoment import audit_combinatorial, build_moment_polytope, diamond, emit_lp_text, instantiate, path
from quivermoment.hive import hive_row_counts

for n in (1, 2, 5, 10, 30):
    print(n, hive_row_counts(n))

t = time.perf_counter()
prog = build_moment_polytope(diamond(), [20, 20, 20, 20])
print(f"diamond [20]*4: {prog.num_rows} rows, {prog.num_vars} vars in {time.perf_counter() - t:.2f}s")
# every coefficient, left and right side, is 0 or +-1
print(audit_combinatorial(prog))

kinds = {}
for k in prog.var_kinds:
    kinds[k] = kinds.get(k, 0) + 1
print(kinds)

# a small instance in the line-oriented text format
lp = instantiate(build_moment_polytope(path(2), [2, 1]), [(1, 0), (-1,)])
print(emit_lp_text(lp))
