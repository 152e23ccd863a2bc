"""Exact arithmetic for free numerical semigroups and their monomial curves:
graded deformation bases, moduli quantities, delta-sequences, and two
independent brute-force oracles."""

from .errors import (
    CapExceededError,
    FreecurveError,
    InternalConsistencyError,
    LimitExceededError,
    NonIntegralRelationError,
    NotFreeError,
    NotMemberError,
    WindowNotCertifiedError,
)
from .semigroup import (
    EquationShape,
    FreeStructure,
    NumericalSemigroup,
    apery_set,
    conductor_recursive,
    free_structure,
    frobenius_bruteforce,
    gcd_tower,
    monomial_curve_equations,
    semigroup_membership,
)
from .basis import BasisElement, IndexFamily, build_E, build_basis, build_index_family
from .moduli import (
    at_infinity_tau2,
    b_sk_bruteforce,
    b_sk_formula,
    d_mk,
    dimension_bounds,
    dplus_l2_bounds,
    plane_branch_check,
    tau_plus_E,
    tau_report,
)
from .tjurina import enumerate_monomials, graded_dim, graded_profile
from .sequences import (
    BetaSequence,
    DeltaSequence,
    delta_to_beta,
    enumerate_deltas,
    is_delta_sequence,
    is_plane_branch,
    one_puiseux_family,
)
from .randomgen import random_free_semigroup, random_suite
from .verify import VerificationRecord, run_suite

__version__ = "0.1.0"
