"""Gauss-polynomial (Q-number) calculus and the q-deformed harmonic
oscillator it generates, for positive real deformation values and roots of
unity: exact q-binomials, vanishing predicates, ladder matrices, the
reducibility classification of the number-basis representation, diagonal
Hamiltonians with their block spectra, and the scaling-function realization.
"""

from .gauss import (
    NotDivisibleError,
    QPoly,
    gauss_binomial,
    gauss_generating,
    partition_count,
    q_number,
)
from .hamiltonian import (
    ENERGY_UNIT,
    SpectrumReport,
    build_hamiltonian,
    eigensolver_agreement,
    hamiltonian_diagonal,
    hamiltonian_equivalence_check,
    inverse_root_check,
    palindrome_check,
    sorted_eigenvalues,
    spectrum_report,
)
from .ladder import (
    DimensionTooSmallError,
    RelationResidual,
    abs_qnumber_diag,
    build_adjoint_ladder,
    build_ladder,
    matrix_mismatch,
    number_operator,
    scaled_residual,
    truncation_safe_dim,
    verify_relations,
)
from .realization import (
    ScalingRecurrenceReport,
    realization_mismatch,
    realize_deformed,
    u_minus,
    u_plus,
    undeformed_ladder,
    unitarity_check,
    verify_scaling_recurrence,
)
from .reducibility import (
    IrreducibleFinite,
    IrreducibleInfinite,
    IrrepDecomposition,
    Reducible,
    RepClass,
    SubspaceReport,
    classify,
    decompose,
    verify_invariant_subspaces,
)
from .roots import (
    DeformParam,
    DegenerateRootError,
    HalfRoot,
    RealQ,
    RootOfUnity,
    abs_q_number,
    cos_pi_times,
    eval_at_root,
    param_value,
    q_bracket,
    q_number_is_zero,
    q_number_value,
    sin_pi_times,
    verify_bracket_relations,
)

__version__ = "0.1.0"

__all__ = [
    "ENERGY_UNIT",
    "DeformParam",
    "DegenerateRootError",
    "DimensionTooSmallError",
    "HalfRoot",
    "IrreducibleFinite",
    "IrreducibleInfinite",
    "IrrepDecomposition",
    "NotDivisibleError",
    "QPoly",
    "RealQ",
    "Reducible",
    "RelationResidual",
    "RepClass",
    "RootOfUnity",
    "ScalingRecurrenceReport",
    "SpectrumReport",
    "SubspaceReport",
    "abs_q_number",
    "abs_qnumber_diag",
    "build_adjoint_ladder",
    "build_hamiltonian",
    "build_ladder",
    "classify",
    "cos_pi_times",
    "decompose",
    "eigensolver_agreement",
    "eval_at_root",
    "gauss_binomial",
    "gauss_generating",
    "hamiltonian_diagonal",
    "hamiltonian_equivalence_check",
    "inverse_root_check",
    "matrix_mismatch",
    "number_operator",
    "palindrome_check",
    "param_value",
    "partition_count",
    "q_bracket",
    "q_number",
    "q_number_is_zero",
    "q_number_value",
    "realization_mismatch",
    "realize_deformed",
    "scaled_residual",
    "sin_pi_times",
    "sorted_eigenvalues",
    "spectrum_report",
    "truncation_safe_dim",
    "u_minus",
    "u_plus",
    "undeformed_ladder",
    "unitarity_check",
    "verify_bracket_relations",
    "verify_invariant_subspaces",
    "verify_relations",
    "__version__",
]
