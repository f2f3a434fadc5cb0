#pragma once

#include <cstddef>

#include "rigidity/complex_matrix.hpp"

namespace rigidity {

/// An ordered pair of sites inside an n-site chain with local dimension
/// local_dim. Sites are 1-based so that R_12, R_23, R_13 read as written.
struct SitePair {
    std::size_t i;
    std::size_t j;
    std::size_t n;
    std::size_t local_dim;

    /// Throws std::invalid_argument unless 1 <= i < j <= n and n >= 2.
    void validate() const;
};

/// id^(i-1) (x) r (x) id^(n-i-1): the two-site operator r acting on factors
/// (i, i+1) of (C^d)^(x)n. r.dim must equal d^2 and 1 <= i <= n-1.
ComplexMatrix embed_adjacent(const ComplexMatrix& r, std::size_t i, std::size_t n, std::size_t d);

/// Permutation operator exchanging tensor factors i and j. Involutive, real
/// 0/1 entries.
ComplexMatrix swap_operator(std::size_t i, std::size_t j, std::size_t n, std::size_t d);

/// Embeds r on the (possibly non-adjacent) pair of factors. Adjacent pairs
/// reduce to embed_adjacent. A non-adjacent pair (i, j) is handled by
/// conjugating the adjacent embedding at (i, i+1) with the chain of adjacent
/// swaps that moves factor j down to position i+1; for (1,3) on three sites
/// this is exactly P_23 R_12 P_23. The conjugation is performed as an exact
/// index relabeling, so no floating-point rounding is introduced.
ComplexMatrix embed_pair(const ComplexMatrix& r, const SitePair& pair);

}  // namespace rigidity
