"""Yang-Baxter defects, interaction-depth filtrations, and Bethe solvability
witnesses for finite-dimensional R-matrix realizations.

The heavy lifting lives in the C++ extension module; this package re-exports
its public surface. Model tokens mirror the CLI: "identity", "swap", "xxx",
"xxz[:eta]", "perturbed_swap:eps", "random_gate:seed", "file:path".
"""

from rigidity._core import (
    BetheSolution,
    ComplexMatrix,
    bethe_residual,
    bethe_solve,
    boundary_scan_json,
    build_hamiltonian,
    build_r,
    check_ybe,
    compare_spectrum_json,
    dichotomy_report_json,
    embed_adjacent,
    embed_pair,
    filtration_dims,
    frobenius_norm,
    hermitian_eigenvalues,
    kron,
    matrix_from_json,
    matrix_to_json,
    max_ambient_dim,
    monodromy,
    pairwise_generation_rank,
    span_rank,
    swap_operator,
    transfer_commutator_relative,
    transfer_matrix,
    yb_defect_constant,
    yb_defect_spectral,
)

__all__ = [
    "BetheSolution",
    "ComplexMatrix",
    "bethe_residual",
    "bethe_solve",
    "boundary_scan_json",
    "build_hamiltonian",
    "build_r",
    "check_ybe",
    "compare_spectrum_json",
    "dichotomy_report_json",
    "embed_adjacent",
    "embed_pair",
    "filtration_dims",
    "frobenius_norm",
    "hermitian_eigenvalues",
    "kron",
    "matrix_from_json",
    "matrix_to_json",
    "max_ambient_dim",
    "monodromy",
    "pairwise_generation_rank",
    "span_rank",
    "swap_operator",
    "transfer_commutator_relative",
    "transfer_matrix",
    "yb_defect_constant",
    "yb_defect_spectral",
]

__version__ = "0.1.0"
