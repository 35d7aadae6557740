"""Moment cone membership and multiplicities for acyclic quivers.

Builds a {0, +-1}-coefficient linear program whose integer points count the
multiplicity of an irreducible in the polynomial functions on a quiver
representation space, decides membership exactly, and checks counts against
Littlewood-Richardson based oracles.
"""

from .decision import (
    CountBudget,
    count_integer_points,
    decide_membership,
    kt_coefficient,
    membership,
    multiplicity,
)
from .exactlp import Feasible, Infeasible, Optimal, Unbounded, optimize, solve_feasibility, verify_certificate
from .hive import hive_block, kt_block
from .lpmodel import ConcreteLP, audit_combinatorial, build_moment_polytope, emit_lp_text, instantiate
from .oracle import invariant_c, lr_coefficient, multiplicity_formula, torus_multiplicity
from .quiver import Quiver, a3, d_map, diamond, dual_weight, path, validate_quiver, vertex_star
from .semistability import (
    NOT_COVERED,
    check_semistable,
    closed_form_a3,
    closed_form_diamond,
    sigma_to_lambda,
)

__all__ = [
    "CountBudget",
    "ConcreteLP",
    "Feasible",
    "Infeasible",
    "NOT_COVERED",
    "Optimal",
    "Quiver",
    "Unbounded",
    "a3",
    "audit_combinatorial",
    "build_moment_polytope",
    "check_semistable",
    "closed_form_a3",
    "closed_form_diamond",
    "count_integer_points",
    "d_map",
    "decide_membership",
    "diamond",
    "dual_weight",
    "emit_lp_text",
    "hive_block",
    "instantiate",
    "invariant_c",
    "kt_block",
    "kt_coefficient",
    "lr_coefficient",
    "membership",
    "multiplicity",
    "multiplicity_formula",
    "optimize",
    "path",
    "sigma_to_lambda",
    "solve_feasibility",
    "torus_multiplicity",
    "validate_quiver",
    "verify_certificate",
    "vertex_star",
]
