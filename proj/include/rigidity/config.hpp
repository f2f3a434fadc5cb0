#pragma once

#include <cstddef>

namespace rigidity {

/// Numerical cutoffs used across the library. Every routine that makes a
/// floating-point decision takes one of these values explicitly; the
/// defaults below are the single source of truth.
struct Tolerances {
    /// Relative singular-value cutoff for rank decisions.
    double tol_rank = 1e-9;
    /// Accepted relative deviation from Hermiticity in the eigensolver.
    double tol_herm = 1e-9;
    /// Accepted relative Yang-Baxter defect.
    double tol_ybe = 1e-10;
    /// Bethe-vs-exact-diagonalization energy match tolerance.
    double tol_spec = 1e-6;
};

/// Default ceiling on ambient operator dimension (2^12, i.e. 12 sites of C^2).
/// Dense storage is O(dim^2); 4096^2 complex entries is about 256 MB.
inline constexpr std::size_t kDefaultMaxAmbientDim = 4096;

/// Current ambient-dimension ceiling. Reads RIGIDITY_MAX_DIM from the
/// environment once; falls back to kDefaultMaxAmbientDim.
std::size_t max_ambient_dim();

}  // namespace rigidity
