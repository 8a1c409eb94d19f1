"""Betweenness above the tight m/3 bound.

Library and CLI for betweenness constraint instances: canonical text
format, generators, the complete-triple kernelization with its integer
YES threshold, exact rational moment calculus of the assignment-weight
random variable, and exact/heuristic arrangement solvers.

Hot kernels live in a compiled extension (batlb._native) with a
numpy-based fallback (batlb._pure); batlb.backend.BACKEND names the one
in use.
"""

from .backend import BACKEND
from .errors import (
    BatlbError,
    CaseWeightMismatchError,
    CountMismatchError,
    DuplicateConstraintError,
    DuplicateVariableError,
    InstanceSyntaxError,
    NegativeParameterError,
    NotIrreducibleError,
    TooLargeError,
    TooManyError,
    TooSmallError,
    VariableRangeError,
)
from .generators import constraint_universe_size, gen_complete, gen_planted, gen_random
from .instance import (
    Arrangement,
    Constraint,
    Instance,
    VarId,
    arrangement_from_order,
    check_arrangement,
    make_instance,
    normalize_constraint,
    order_from_arrangement,
    parse_instance,
    serialize_instance,
)
from .kernelize import (
    KernelDecision,
    ReductionResult,
    find_complete_triples,
    is_irreducible,
    kernelize,
    lift_arrangement,
    meets_yes_bound,
    reduce_instance,
    yes_threshold,
)
from .moments import (
    CASE_SUM_WEIGHTS_768,
    CASE_VALUES_768,
    CaseWeightReport,
    ProfileCounts,
    cross_term_closed_form,
    cross_term_lower_bound_check,
    first_moment,
    fourth_moment_enumerated,
    monte_carlo_moments,
    moments_direct,
    pair_expectation,
    profile_counts,
    second_moment_closed_form,
    second_moment_direct,
    second_moment_enumerated,
    verify_case_weights,
)
from .poly import WeightPolynomial, weight_polynomial
from .rational import Rational, rational_str
from .solvers import (
    Decision,
    SolveResult,
    decide_batlb,
    local_search,
    randomized_round,
    sample_compatible_arrangement,
    satisfied_count,
    solve_brute,
    solve_exact_dp,
)
from .weights import (
    Assignment4,
    assignment_weight,
    constraint_weight,
    expected_satisfied_exhaustive,
    weight6,
    weight_case,
)

__version__ = "0.1.0"
