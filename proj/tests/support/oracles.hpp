#pragma once

// Independent oracles for the test suites. Everything here is built from
// first principles (index formulas, naive triple-loop products, permutation
// combinatorics, Gram matrices) and deliberately avoids the library's
// embedding, multiplication fast paths, and rank machinery, so that
// agreement between the two routes is meaningful.

#include <complex>
#include <cstddef>
#include <vector>

#include "rigidity/complex_matrix.hpp"

namespace oracles {

using rigidity::Complex;
using rigidity::ComplexMatrix;

ComplexMatrix naive_mult(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Permutation operator on (C^d)^(x)n from a site permutation sigma
/// (0-based, sigma[s] = where the content of site s goes).
ComplexMatrix permutation_operator(const std::vector<std::size_t>& sigma, std::size_t d);

/// Two-site gate embedded on adjacent sites (i, i+1), 1-based, by index
/// formula.
ComplexMatrix naive_embed_adjacent(const ComplexMatrix& r, std::size_t i, std::size_t n, std::size_t d);

/// Constant Yang-Baxter defect assembled with naive products and the
/// P23 R12 P23 construction.
ComplexMatrix naive_defect_constant(const ComplexMatrix& r, std::size_t d);

/// Spectral difference-form defect from three explicit gates.
ComplexMatrix naive_defect_spectral(const ComplexMatrix& r_uv, const ComplexMatrix& r_u,
                                    const ComplexMatrix& r_v, std::size_t d);

/// Rank of the span of a family of operators via the eigenvalues of its
/// Gram matrix (trace pairing), a route disjoint from the library's
/// QR-plus-SVD stack rank. rel_tol applies to the Gram eigenvalues.
std::size_t gram_rank(const std::vector<ComplexMatrix>& mats, double rel_tol = 1e-6);

/// Brute-force word enumeration: spans of all words of length <= k in the
/// generators (empty word included), one rank per level, deduplicating
/// repeated words by value so the enumeration stays finite. No span-based
/// pruning is involved.
std::vector<std::size_t> word_span_dims_dense(const std::vector<ComplexMatrix>& generators,
                                              std::size_t max_len);

/// Same level ranks for permutation generators, computed entirely in the
/// symmetric group: balls in the Cayley graph, Gram entries d^{cycles},
/// never materializing an operator. gens are site permutations (0-based).
std::vector<std::size_t> word_span_dims_permutation(const std::vector<std::vector<std::size_t>>& gens,
                                                    std::size_t n_sites, std::size_t d,
                                                    std::size_t max_len);

/// Stable value of a nondecreasing dims profile (last entry).
std::size_t stable_rank(const std::vector<std::size_t>& dims);

}  // namespace oracles
