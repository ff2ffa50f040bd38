"""Simultaneous rational approximations to zeta(5) and zeta(3) from an
eight-parameter family of cellular integrals.

The package splits along the natural seams of the construction:

``params``
    the parameter vectors, hyperplane forms, admissibility, and the
    symmetric coordinates;
``group``
    the order-5040 linear symmetry group and its orbit machinery;
``exact``
    exact big-integer and rational sequences: coefficient sums, the
    recursion, p-adic valuations, and the denominator-gain factor;
``asympt``
    growth rates from critical points, the valuation step function, and
    the worthiness score;
``analytic``
    high-precision quadrature and series evaluation with exact rational
    reconstruction;
``graphs``
    the 28-vertex pair graph and the symmetry-correspondence checks.
"""

from .params import (
    ParamVec8,
    ParamVec12,
    SymParams,
    HyperplaneValues,
    FSET,
    a_to_pq,
    pq_to_a,
    convergence_check,
    first_violated_form,
    form_name,
    hyperplane_values,
    to_symmetric,
    from_symmetric,
    h_matrix,
    vertex_table,
)
from .group import (
    GroupElement,
    Orbit,
    extended_group_order,
    extra_automorphism,
    factorial_ratio,
    form_permutation,
    full_group,
    generators,
    group_order,
    is_positive,
    orbit,
    perm_rep,
)
from .exact import (
    SequenceTriple,
    A_sum,
    I3_leading,
    Phi_n,
    Q_from_sum,
    Q_totsym,
    lcm_d,
    nu_p,
    totsym_sequences,
    valuation_report,
)
from .asympt import (
    DegenerateGrowthError,
    GrowthRates,
    StepFunction,
    WorthinessReport,
    cubic_from_vector,
    lambda_values,
    phi_limit,
    phi_step,
    worthiness,
)
from .analytic import (
    AmbiguousReconstructionError,
    DecompositionReport,
    DualParams,
    HPReal,
    QuadratureError,
    decompose,
    dual_params,
    eval_F7,
    eval_I,
    eval_J3,
    rationalize,
    zeta_constants,
)
from .graphs import (
    PairGraph,
    StabilizerReport,
    adjacency_text,
    automorphism_order,
    build_G8,
    pair_graph,
    stabilizer_check,
    verify_table,
)

__version__ = "0.1.0"
