#include "rigidity/leg_embedding.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigidity/config.hpp"

namespace rigidity {

namespace {

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (out > max_ambient_dim() / base) {
            throw std::invalid_argument("leg_embedding: dimension " + std::to_string(base) + "^" +
                                        std::to_string(exp) + " exceeds the ceiling " +
                                        std::to_string(max_ambient_dim()));
        }
        out *= base;
    }
    return out;
}

// Index permutation on {0 .. d^n - 1} induced by exchanging digits i and j
// (1-based, most significant digit = site 1).
std::vector<std::size_t> swap_index_permutation(std::size_t i, std::size_t j, std::size_t n, std::size_t d) {
    const std::size_t dim = pow_size(d, n);
    std::vector<std::size_t> perm(dim);
    std::vector<std::size_t> digits(n);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t t = idx;
        for (std::size_t s = n; s-- > 0;) {
            digits[s] = t % d;
            t /= d;
        }
        std::swap(digits[i - 1], digits[j - 1]);
        std::size_t out = 0;
        for (std::size_t s = 0; s < n; ++s) out = out * d + digits[s];
        perm[idx] = out;
    }
    return perm;
}

}  // namespace

void SitePair::validate() const {
    if (n < 2 || i < 1 || j <= i || j > n) {
        throw std::invalid_argument("SitePair: need 1 <= i < j <= n and n >= 2, got i=" +
                                    std::to_string(i) + " j=" + std::to_string(j) + " n=" + std::to_string(n));
    }
    if (local_dim < 1) throw std::invalid_argument("SitePair: local_dim must be positive");
}

ComplexMatrix embed_adjacent(const ComplexMatrix& r, std::size_t i, std::size_t n, std::size_t d) {
    if (d < 1 || n < 2 || i < 1 || i > n - 1) {
        throw std::invalid_argument("embed_adjacent: need 1 <= i <= n-1, n >= 2");
    }
    if (r.dim() != d * d) {
        throw std::invalid_argument("embed_adjacent: operator dimension " + std::to_string(r.dim()) +
                                    " does not match local_dim^2 = " + std::to_string(d * d));
    }
    const std::size_t dim = pow_size(d, n);
    const std::size_t left = pow_size(d, i - 1);
    const std::size_t right = pow_size(d, n - i - 1);
    const std::size_t block = d * d * right;

    ComplexMatrix out(dim);
    for (std::size_t x = 0; x < left; ++x) {
        const std::size_t base = x * block;
        for (std::size_t ab = 0; ab < d * d; ++ab) {
            for (std::size_t cd = 0; cd < d * d; ++cd) {
                const Complex v = r(ab, cd);
                if (v.real() == 0.0 && v.imag() == 0.0) continue;
                for (std::size_t y = 0; y < right; ++y) {
                    out(base + ab * right + y, base + cd * right + y) = v;
                }
            }
        }
    }
    return out;
}

ComplexMatrix swap_operator(std::size_t i, std::size_t j, std::size_t n, std::size_t d) {
    if (i < 1 || j <= i || j > n) throw std::invalid_argument("swap_operator: need 1 <= i < j <= n");
    const auto perm = swap_index_permutation(i, j, n, d);
    ComplexMatrix out(perm.size());
    for (std::size_t col = 0; col < perm.size(); ++col) out(perm[col], col) = Complex{1.0, 0.0};
    return out;
}

ComplexMatrix embed_pair(const ComplexMatrix& r, const SitePair& pair) {
    pair.validate();
    const std::size_t d = pair.local_dim;
    if (r.dim() != d * d) {
        throw std::invalid_argument("embed_pair: operator dimension " + std::to_string(r.dim()) +
                                    " does not match local_dim^2 = " + std::to_string(d * d));
    }
    if (pair.j == pair.i + 1) return embed_adjacent(r, pair.i, pair.n, d);

    // Compose the adjacent-transposition chain that relocates factor j to
    // position i+1 into one index permutation sigma, then conjugate the
    // adjacent embedding by relabeling: (S A S^{-1})[sigma(r), sigma(c)] = A[r, c].
    const std::size_t dim = pow_size(d, pair.n);
    std::vector<std::size_t> sigma(dim);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    for (std::size_t k = pair.j - 1; k >= pair.i + 1; --k) {
        const auto step = swap_index_permutation(k, k + 1, pair.n, d);
        // sigma := sigma o step, matching S = S_prev * Swap(k, k+1).
        std::vector<std::size_t> next(dim);
        for (std::size_t idx = 0; idx < dim; ++idx) next[idx] = sigma[step[idx]];
        sigma = std::move(next);
    }

    const ComplexMatrix adjacent = embed_adjacent(r, pair.i, pair.n, d);
    ComplexMatrix out(dim);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            const Complex v = adjacent(row, col);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            out(sigma[row], sigma[col]) = v;
        }
    }
    return out;
}

}  // namespace rigidity
