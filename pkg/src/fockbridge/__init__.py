"""fockbridge: exact symmetric-function families from Heisenberg algebra
representations, with verifiers for the identities they satisfy."""

__version__ = "0.1.0"

from .scalars import (
    IntPoly,
    ONE,
    Q,
    Scalar,
    SpecializationPoleError,
    T,
    ZERO,
    parse_scalar,
)
from .partitions import (
    EMPTY,
    Partition,
    SkewShape,
    core_quotient,
    from_core_quotient,
    parse_partition,
    partitions_of,
)
from .symfunc import (
    SymFunc,
    VarPoly,
    convert,
    evaluate_vars,
    hall_inner,
    kappa_eval,
    multiply,
    perp_apply,
    schur_tableaux,
    sym_h,
    sym_m,
    sym_p,
    sym_s,
    theta_apply,
)
from .heisenberg import (
    BundleFormatError,
    BundleRangeError,
    BundleRep,
    HeisenbergParams,
    Rep,
    StateVec,
    adjoint_rep,
    apply_B,
    apply_D,
    apply_U,
    bosonic_apply_B,
    compute_F,
    compute_G,
    graded_matrix,
    load_bundle,
    monomial_coeff,
    phi_map,
    rep_to_bundle,
    specialize_rep,
)
from .reps import (
    direct_sum,
    fermionic_rep,
    llt_q1_rep,
    macdonald_p_oracle,
    macdonald_rep,
    tensor,
)
from .identities import (
    ConverseReport,
    VerifyReport,
    diagnose_converse,
    h_kernel,
    h_multiplier,
    verify_bf,
    verify_cauchy,
    verify_du,
    verify_heisenberg,
    verify_pieri,
)

__all__ = [
    "__version__",
    "IntPoly", "Scalar", "parse_scalar", "SpecializationPoleError",
    "ONE", "ZERO", "Q", "T",
    "Partition", "SkewShape", "EMPTY", "parse_partition", "partitions_of",
    "core_quotient", "from_core_quotient",
    "SymFunc", "VarPoly", "sym_p", "sym_h", "sym_m", "sym_s",
    "convert", "multiply", "hall_inner", "perp_apply",
    "theta_apply", "kappa_eval", "schur_tableaux", "evaluate_vars",
    "Rep", "HeisenbergParams", "StateVec",
    "apply_B", "apply_U", "apply_D",
    "compute_F", "compute_G", "monomial_coeff", "phi_map",
    "bosonic_apply_B", "adjoint_rep", "specialize_rep", "graded_matrix",
    "rep_to_bundle", "load_bundle",
    "BundleRep", "BundleFormatError", "BundleRangeError",
    "fermionic_rep", "macdonald_rep", "macdonald_p_oracle",
    "direct_sum", "tensor", "llt_q1_rep",
    "VerifyReport", "ConverseReport",
    "h_multiplier", "h_kernel",
    "verify_heisenberg", "verify_pieri", "verify_du",
    "verify_cauchy", "verify_bf", "diagnose_converse",
]
