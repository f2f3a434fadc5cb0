#pragma once

// The structural invariant suite: one check per documented invariant, shared
// between the per-module unit tests and the acceptance run. Randomized
// checks use the fixed seeds recorded here.

#include <string>
#include <vector>

namespace properties {

struct PropResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// linalg
PropResult kron_associative();
PropResult kron_multiplicative();
PropResult span_rank_recombination_invariant();
PropResult eigenvalue_trace_and_shift();

// leg_embedding
PropResult disjoint_support_commutation();
PropResult conjugation_coherence();
PropResult invertibility_preservation();

// yang_baxter
PropResult defect_antisymmetry();
PropResult defect_conjugation_covariance();
PropResult defect_cubic_scaling();
PropResult pairwise_rank_monotone_bounded();

// filtration
PropResult dims_monotone_bounded_idempotent();
PropResult filtration_basis_independence();
PropResult product_dominates_commutator();
PropResult identity_scan_constrained();

// models
PropResult swap_equals_xxx_at_zero();
PropResult hamiltonian_hermitian();
PropResult translation_invariance();
PropResult magnetization_commutes();

// transfer_bethe
PropResult ybe_implies_commutation();
PropResult contrapositive_witness();
PropResult bethe_energies_in_ed();
PropResult bethe_roots_conjugation_closed();
PropResult momentum_quantization();

std::vector<PropResult> run_all();

}  // namespace properties
