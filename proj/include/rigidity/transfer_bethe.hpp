#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/config.hpp"
#include "rigidity/yang_baxter.hpp"

namespace rigidity {

// Conventions used throughout this module, chosen as one coherent set:
// bond h = P - I, rapidity factors (lambda +- i/2), magnon energy
// eps(lambda) = -1 / (lambda^2 + 1/4) = -2 (1 - cos k). Exact
// diagonalization, not the closed formula, is the acceptance arbiter, so a
// convention slip would surface immediately in the spectrum comparison.

/// Ordered product R_{a,n}(u) ... R_{a,1}(u) on auxiliary (x) chain space;
/// the auxiliary factor is placed first and the chain sites follow. The
/// result acts on d^(n+1) dimensions.
ComplexMatrix monodromy(const RMatrixSpec& r, Complex u, std::size_t n);

/// t(u) = partial trace of the monodromy over the auxiliary factor.
ComplexMatrix transfer_matrix(const RMatrixSpec& r, Complex u, std::size_t n);

/// || t(u) t(v) - t(v) t(u) ||_F.
double transfer_commutator_norm(const RMatrixSpec& r, Complex u, Complex v, std::size_t n);

/// Same, normalized by ||t(u)||_F ||t(v)||_F.
double transfer_commutator_relative(const RMatrixSpec& r, Complex u, Complex v, std::size_t n);

/// Cyclic shift on (C^d)^(x)n moving the content of site i to site i+1
/// (site n wraps to 1). For the XXX family, t(0) equals this operator.
ComplexMatrix cyclic_shift_operator(std::size_t n, std::size_t d);

/// One accepted root configuration of the XXX Bethe equations
///   ((l_j + i/2)/(l_j - i/2))^N = prod_{k != j} (l_j - l_k + i)/(l_j - l_k - i).
struct BetheSolution {
    std::size_t n_sites = 0;
    std::size_t n_magnons = 0;
    std::vector<Complex> roots;
    double residual = 0.0;        // max |lhs_j - rhs_j| of the ratio form
    double energy = 0.0;          // sum_j -1/(l_j^2 + 1/4)
    Complex momentum_phase{1.0, 0.0};  // prod_j (l_j + i/2)/(l_j - i/2)
};

/// Per-root residuals lhs_j - rhs_j of the ratio-form equations. Roots must
/// be pairwise distinct and clear of the poles at +-i/2 (std::domain_error
/// otherwise).
std::vector<Complex> bethe_residual(const std::vector<Complex>& roots, std::size_t n_sites);

struct BetheSolveOptions {
    double residual_tol = 1e-10;   // acceptance bound on the ratio residual
    double separation_tol = 1e-6;  // minimum pairwise root distance
    double quantization_tol = 1e-8;  // |phase^N - 1| bound
    std::size_t max_newton_iterations = 200;
};

/// Finds root configurations for the M-magnon sector of an N-site periodic
/// chain. Newton iteration on the pole-cleared polynomial form of the
/// equations runs from a deterministic seed schedule (single-magnon
/// cotangent grid combinations plus conjugate-paired string seeds), then a
/// log-form Newton polish drives the ratio residual to solver precision.
/// Converged configurations are filtered (pairwise-distinct roots, distance
/// from the +-i/2 poles, momentum quantization, residual bound) and
/// deduplicated up to root permutation. Seeds that fail to converge are
/// dropped silently; finding fewer solutions than the sector multiplicity is
/// reported by the caller, not fatal. Requires M <= N/2 and N <= 12.
std::vector<BetheSolution> bethe_solve(std::size_t n_sites, std::size_t n_magnons,
                                       const BetheSolveOptions& options = {});

struct SpectrumMatch {
    std::size_t bethe_index = 0;
    std::size_t ed_index = 0;
    double delta = 0.0;
};

struct SpectrumComparison {
    std::size_t n_sites = 0;
    std::size_t n_magnons = 0;
    std::vector<double> ed_eigenvalues;   // M-magnon sector, ascending
    std::vector<BetheSolution> bethe;     // accepted solutions, M' = 0..M
    std::vector<SpectrumMatch> matches;
    double max_mismatch = 0.0;
    bool all_matched = false;
    std::size_t covered_levels = 0;
    std::size_t distinct_levels = 0;
    std::string coverage;  // "covered/distinct"
};

/// Restricts exact diagonalization of the periodic XXX chain to the
/// M-magnon sector (total magnetization commutes with H, and the block
/// structure is verified before extraction) and matches Bethe energies
/// against it greedily, nearest first, with ED degeneracy multiplicities
/// respected. The Bethe list contains the M-magnon solutions together with
/// the descendants of every lower sector M' < M, whose energies reappear in
/// this sector with unchanged values; this makes the coverage figure
/// meaningful for the whole sector. Requires N <= 10 for full-sector ED.
SpectrumComparison compare_spectrum(std::size_t n_sites, std::size_t n_magnons,
                                    bool periodic = true,
                                    double tol_spec = Tolerances{}.tol_spec);

/// Eigenvalues of H restricted to the M-magnon block. Throws
/// std::domain_error when H couples different magnetization sectors beyond
/// the tolerance.
std::vector<double> magnon_sector_eigenvalues(const ComplexMatrix& hamiltonian, std::size_t n_sites,
                                              std::size_t n_magnons,
                                              double tol = 1e-10);

}  // namespace rigidity
