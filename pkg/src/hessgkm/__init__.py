"""
Combinatorics, GKM graphs and degree-2 cohomology of regular semisimple
Hessenberg varieties, computed exactly.
"""

from .betti import (
    b2_closed_form,
    betti_low_degree,
    component_count,
    flag_poincare,
    poincare_bruteforce,
    poincare_inductive,
)
from .classes import EquivariantClass, class_tau, class_x, class_y, class_y_star, dot_act
from .cohomology import GradedCohomology, h2_presentation, h2_rank, h2d_presentation
from .combinatorics import (
    HessenbergFunction,
    Partition,
    Permutation,
    bottom_set,
    hessenberg_functions,
    l_set,
    lambda_set,
    reduce,
)
from .gkm import build_graph, check_gkm, export_dot, export_json
from .rep import beta_formula, decompose, dot_action_character, h2d_decomposition_formula
from .symbolic import PoincarePolynomial, Polynomial

__version__ = "0.1.0"
