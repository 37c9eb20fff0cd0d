"""Generating sets, Green's structure and random-generation asymptotics for
finite transformation semigroups."""

from .errors import DomainError, InvalidInputError, NumericError, ResourceLimitError
from .transform import (Transformation, compose, conjugate, image, is_group_generator,
                        kernel, parse_transformation, rank)
from .semigroup import SemigroupTable, closure, contains, principal_ideal_membership
from .greens import DClassDecomposition, d_classes, ordered_elements
from .gensets import (GenSetReport, enumerate_irredundant_generating_sets, greedy,
                      is_irredundant, is_ubiquitous, satisfies_sufficient_condition,
                      semigroup_rank, small_generating_set)

from .exactprob import (binomial, bound_P, brute_force_G, brute_force_T, brute_force_V,
                        exact_G, exact_T, exact_V, fraction_to_decimal, stirling2)
from .asymptotics import (BoundEval, F1, F2, F3, F_single, F_two_var, G_three_var,
                          bounds_report, decay_rate_G, lambert_w, maximize_F_single,
                          maximize_F_two_var, maximize_G, omega, stationary_point_G)
from .montecarlo import Estimate, estimate, estimate_sufficient, random_transformation
from .table1 import (PUBLISHED_TABLE1, Table1Row, enumerate_subsemigroups,
                     enumerate_subsemigroups_T3, table1, table1_diff)

__version__ = '0.1.0'
