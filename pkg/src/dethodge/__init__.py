"""dethodge: exact combinatorics of Hodge ideals, weight filtrations, and
Decomposition Theorem multiplicities for determinantal rank strata.

Everything is exact integer arithmetic: weight predicates, Gaussian
binomials, dimension formulas, and a polynomial-level differential
oracle for cross-validation.
"""

from .characters import (
    cauchy_check,
    dim_irrep,
    hilbert_function,
    lr_coefficient,
    tensor_decomposition_check,
    tensor_expansion,
)
from .hodgeideals import (
    IdealWeightSet,
    hodge_ideal_exponents,
    in_Fk_Sdet,
    in_hodge_ideal,
    in_symbolic_power,
    parse_ideal_descriptor,
    translate,
    verify_equivalence,
)
from .matrixspace import (
    MatrixSpace,
    Stratum,
    codim_stratum,
    dim_stratum,
    local_cohomology_degree,
)
from .mhmweights import (
    HodgeModuleTag,
    filtration_support_check,
    generation_level_Sdet,
    local_cohomology_weight,
    local_weight_ledger_check,
    square_start_levels_consistency,
    square_weight_layer,
    start_level,
    weight_of,
)
from .oracle import (
    ExactPoly,
    RankConstrainedSampler,
    dcep_cross_validation,
    highest_weight_vector,
    ideal_power_hilbert,
    minor,
    symbolic_membership,
    vanishes_on_rank,
)
from .qseries import (
    DecompositionTable,
    LaurentPoly,
    closed_form_OYp,
    grassmannian_poincare,
    pushforward_structure_checks,
    pushforward_DpY,
    pushforward_prefactor,
    q_binomial,
    solve_pushforward_OYp,
    stalk_poly,
    substitute_q2,
    verify_qbinomial_identity,
)
from .reporting import VerificationReport
from .repsets import (
    StratumWeightSet,
    classify,
    compose_weight,
    decompose_weight,
    grF_Dp_layer,
    in_Ukp,
    in_Wp,
    in_Wpd,
    lambda_p_mu,
    minimal_elements,
    parse_descriptor,
)
from .weights import (
    WeightBox,
    delta_p,
    dominant_tuples,
    dual,
    enumerate_box,
    is_dominant,
    is_partition,
    lambda_of_p,
    leq,
    pad,
    partitions_of,
    strip_zeros,
    weights_equal,
)

__version__ = "0.1.0"
