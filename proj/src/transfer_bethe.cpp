#include "rigidity/transfer_bethe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rigidity/leg_embedding.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/models.hpp"

namespace rigidity {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
const Complex kHalfI{0.0, 0.5};
const Complex kI{0.0, 1.0};

std::size_t pow_size(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exp; ++k) {
        if (out > max_ambient_dim() / base) {
            throw std::invalid_argument("transfer_bethe: dimension " + std::to_string(base) + "^" +
                                        std::to_string(exp) + " exceeds the ceiling");
        }
        out *= base;
    }
    return out;
}

}  // namespace

ComplexMatrix monodromy(const RMatrixSpec& r, Complex u, std::size_t n) {
    if (r.kind != RKind::spectral) {
        throw std::invalid_argument("monodromy: expected a spectral R-matrix family");
    }
    if (n < 1) throw std::invalid_argument("monodromy: need n >= 1");
    const std::size_t d = r.local_dim;
    pow_size(d, n + 1);
    const ComplexMatrix gate = r.at(u);

    // Auxiliary space first: T(u) = R_{a,n}(u) ... R_{a,1}(u) with the
    // auxiliary factor at position 1 and chain site k at position k + 1.
    ComplexMatrix t = embed_pair(gate, SitePair{1, n + 1, n + 1, d});
    for (std::size_t k = n - 1; k >= 1; --k) {
        t = t * embed_pair(gate, SitePair{1, k + 1, n + 1, d});
    }
    return t;
}

ComplexMatrix transfer_matrix(const RMatrixSpec& r, Complex u, std::size_t n) {
    const ComplexMatrix full = monodromy(r, u, n);
    const std::size_t d = r.local_dim;
    const std::size_t chain = full.dim() / d;
    ComplexMatrix t(chain);
    for (std::size_t a = 0; a < d; ++a) {
        const std::size_t off = a * chain;
        for (std::size_t i = 0; i < chain; ++i)
            for (std::size_t j = 0; j < chain; ++j) t(i, j) += full(off + i, off + j);
    }
    return t;
}

double transfer_commutator_norm(const RMatrixSpec& r, Complex u, Complex v, std::size_t n) {
    const ComplexMatrix tu = transfer_matrix(r, u, n);
    const ComplexMatrix tv = transfer_matrix(r, v, n);
    return frobenius_norm(tu * tv - tv * tu);
}

double transfer_commutator_relative(const RMatrixSpec& r, Complex u, Complex v, std::size_t n) {
    const ComplexMatrix tu = transfer_matrix(r, u, n);
    const ComplexMatrix tv = transfer_matrix(r, v, n);
    const double denom = frobenius_norm(tu) * frobenius_norm(tv);
    const double num = frobenius_norm(tu * tv - tv * tu);
    return denom > 0.0 ? num / denom : num;
}

ComplexMatrix cyclic_shift_operator(std::size_t n, std::size_t d) {
    const std::size_t dim = pow_size(d, n);
    ComplexMatrix out(dim);
    std::vector<std::size_t> digits(n);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::size_t t = idx;
        for (std::size_t s = n; s-- > 0;) {
            digits[s] = t % d;
            t /= d;
        }
        std::rotate(digits.begin(), digits.begin() + (n - 1), digits.end());
        std::size_t target = 0;
        for (std::size_t s = 0; s < n; ++s) target = target * d + digits[s];
        out(target, idx) = 1.0;
        std::rotate(digits.begin(), digits.begin() + 1, digits.end());
    }
    return out;
}

namespace {

// ---- XXX Bethe machinery ------------------------------------------------
//
// Ratio form:  ((l_j + i/2)/(l_j - i/2))^N = prod_{k!=j} (l_j-l_k+i)/(l_j-l_k-i)
// Polynomial form (pole-cleared, used for the Newton search):
//   F_j = (l_j + i/2)^N prod_{k!=j}(l_j-l_k-i) - (l_j - i/2)^N prod_{k!=j}(l_j-l_k+i)

using Roots = std::vector<Complex>;

Complex pair_product(const Roots& l, std::size_t j, Complex shift, std::size_t excluded) {
    Complex out{1.0, 0.0};
    for (std::size_t k = 0; k < l.size(); ++k) {
        if (k == j || k == excluded) continue;
        out *= l[j] - l[k] + shift;
    }
    return out;
}

Roots poly_form(const Roots& l, std::size_t n_sites) {
    const std::size_t m = l.size();
    Roots out(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex p1 = std::pow(l[j] + kHalfI, static_cast<double>(n_sites));
        const Complex p2 = std::pow(l[j] - kHalfI, static_cast<double>(n_sites));
        out[j] = p1 * pair_product(l, j, -kI, m) - p2 * pair_product(l, j, kI, m);
    }
    return out;
}

Eigen::MatrixXcd poly_jacobian(const Roots& l, std::size_t n_sites) {
    const std::size_t m = l.size();
    const double nd = static_cast<double>(n_sites);
    Eigen::MatrixXcd jac(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex p1 = std::pow(l[j] + kHalfI, nd);
        const Complex p2 = std::pow(l[j] - kHalfI, nd);
        const Complex dp1 = nd * std::pow(l[j] + kHalfI, nd - 1.0);
        const Complex dp2 = nd * std::pow(l[j] - kHalfI, nd - 1.0);
        Complex s1{0.0, 0.0};
        Complex s2{0.0, 0.0};
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            s1 += pair_product(l, j, -kI, k);
            s2 += pair_product(l, j, kI, k);
        }
        jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
            dp1 * pair_product(l, j, -kI, m) + p1 * s1 - dp2 * pair_product(l, j, kI, m) - p2 * s2;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == j) continue;
            jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
                -p1 * pair_product(l, j, -kI, k) + p2 * pair_product(l, j, kI, k);
        }
    }
    return jac;
}

bool all_finite(const Roots& l) {
    for (const auto& z : l) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double vec_norm(const Roots& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

bool newton_poly(Roots& l, std::size_t n_sites, std::size_t max_iters) {
    const std::size_t m = l.size();
    for (std::size_t it = 0; it < max_iters; ++it) {
        const Roots f = poly_form(l, n_sites);
        if (!all_finite(f)) return false;
        const double fnorm = vec_norm(f);
        if (fnorm < 1e-13) return true;
        const Eigen::MatrixXcd jac = poly_jacobian(l, n_sites);
        if (!jac.allFinite()) return false;
        Eigen::VectorXcd rhs(m);
        for (std::size_t j = 0; j < m; ++j) rhs(static_cast<Eigen::Index>(j)) = f[j];
        const Eigen::VectorXcd step = jac.fullPivLu().solve(rhs);
        if (!step.allFinite()) return false;
        double damping = 1.0;
        Roots candidate = l;
        for (int halvings = 0; halvings < 40; ++halvings) {
            for (std::size_t j = 0; j < m; ++j) candidate[j] = l[j] - damping * step(static_cast<Eigen::Index>(j));
            const Roots fc = poly_form(candidate, n_sites);
            if (all_finite(fc) && vec_norm(fc) < fnorm) break;
            damping *= 0.5;
        }
        l = candidate;
    }
    return vec_norm(poly_form(l, n_sites)) < 1e-10;
}

// Log-form polish near a converged root: branch integers are frozen from the
// current point, after which Newton on
//   f_j = N Log((l+i/2)/(l-i/2)) - sum_k Log(...) - 2 pi i m_j
// is smooth and drives the ratio residual to solver precision.
void polish_log_form(Roots& l, std::size_t n_sites, std::size_t max_steps = 24) {
    const std::size_t m = l.size();
    const double nd = static_cast<double>(n_sites);
    std::vector<long> branch(m, 0);
    auto evaluate = [&](const Roots& x, bool set_branch) {
        Roots out(m);
        for (std::size_t j = 0; j < m; ++j) {
            Complex v = nd * std::log((x[j] + kHalfI) / (x[j] - kHalfI));
            for (std::size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                v -= std::log((x[j] - x[k] + kI) / (x[j] - x[k] - kI));
            }
            if (set_branch) branch[j] = std::lround(v.imag() / (2.0 * kPi));
            out[j] = v - Complex{0.0, 2.0 * kPi * static_cast<double>(branch[j])};
        }
        return out;
    };
    Roots f = evaluate(l, /*set_branch=*/true);
    if (!all_finite(f)) return;
    for (std::size_t it = 0; it < max_steps; ++it) {
        if (vec_norm(f) < 1e-15) break;
        Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            Complex diag = nd * (1.0 / (l[j] + kHalfI) - 1.0 / (l[j] - kHalfI));
            for (std::size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                const Complex t = 1.0 / (l[j] - l[k] + kI) - 1.0 / (l[j] - l[k] - kI);
                diag -= t;
                jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = t;
            }
            jac(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) = diag;
        }
        if (!jac.allFinite()) return;
        Eigen::VectorXcd rhs(m);
        for (std::size_t j = 0; j < m; ++j) rhs(static_cast<Eigen::Index>(j)) = f[j];
        const Eigen::VectorXcd step = jac.fullPivLu().solve(rhs);
        if (!step.allFinite()) return;
        Roots candidate(m);
        for (std::size_t j = 0; j < m; ++j) candidate[j] = l[j] - step(static_cast<Eigen::Index>(j));
        const Roots fc = evaluate(candidate, /*set_branch=*/false);
        if (!all_finite(fc)) return;
        l = candidate;
        f = fc;
    }
}

double max_ratio_residual(const Roots& l, std::size_t n_sites) {
    double worst = 0.0;
    for (std::size_t j = 0; j < l.size(); ++j) {
        const Complex lhs = std::pow((l[j] + kHalfI) / (l[j] - kHalfI), static_cast<double>(n_sites));
        Complex rhs{1.0, 0.0};
        for (std::size_t k = 0; k < l.size(); ++k) {
            if (k == j) continue;
            rhs *= (l[j] - l[k] + kI) / (l[j] - l[k] - kI);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double solution_energy(const Roots& l) {
    Complex e{0.0, 0.0};
    for (const auto& z : l) e += -1.0 / (z * z + 0.25);
    return e.real();
}

Complex solution_momentum_phase(const Roots& l) {
    Complex ph{1.0, 0.0};
    for (const auto& z : l) ph *= (z + kHalfI) / (z - kHalfI);
    return ph;
}

Roots sorted_roots(Roots l) {
    std::sort(l.begin(), l.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return l;
}

std::vector<Roots> seed_schedule(std::size_t n_sites, std::size_t n_magnons) {
    std::vector<double> cot_grid;
    for (std::size_t m = 1; m < n_sites; ++m) {
        cot_grid.push_back(0.5 / std::tan(kPi * static_cast<double>(m) / static_cast<double>(n_sites)));
    }
    std::vector<Roots> seeds;
    if (n_magnons == 1) {
        for (double c : cot_grid) seeds.push_back({Complex{c, 0.0}});
        return seeds;
    }

    std::vector<double> centers{0.0};
    centers.insert(centers.end(), cot_grid.begin(), cot_grid.end());
    for (std::size_t k = 0; k + 1 < cot_grid.size(); ++k) {
        centers.push_back(0.5 * (cot_grid[k] + cot_grid[k + 1]));
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    const double string_offsets[] = {0.35, 0.45, 0.55, 0.65};

    if (n_magnons == 2) {
        for (std::size_t a = 0; a < cot_grid.size(); ++a)
            for (std::size_t b = a + 1; b < cot_grid.size(); ++b)
                seeds.push_back({Complex{cot_grid[a], 0.0}, Complex{cot_grid[b], 0.0}});
        for (double x : centers)
            for (double y : string_offsets) seeds.push_back({Complex{x, y}, Complex{x, -y}});
        return seeds;
    }

    // Generic M: real combinations plus one string pair over real fillings.
    std::vector<std::size_t> pick(n_magnons);
    std::vector<std::size_t> idx(cot_grid.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::vector<bool> mask(cot_grid.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n_magnons), true);
    std::sort(mask.begin(), mask.end());
    do {
        Roots s;
        for (std::size_t k = 0; k < mask.size(); ++k)
            if (mask[k]) s.push_back(Complex{cot_grid[k], 0.0});
        if (s.size() == n_magnons) seeds.push_back(std::move(s));
    } while (std::next_permutation(mask.begin(), mask.end()));

    if (n_magnons >= 2) {
        std::vector<bool> fill(cot_grid.size(), false);
        std::fill(fill.begin(), fill.begin() + static_cast<long>(n_magnons - 2), true);
        std::sort(fill.begin(), fill.end());
        do {
            Roots rest;
            for (std::size_t k = 0; k < fill.size(); ++k)
                if (fill[k]) rest.push_back(Complex{cot_grid[k], 0.0});
            if (rest.size() != n_magnons - 2) continue;
            for (double x : centers) {
                for (double y : {0.45, 0.55}) {
                    Roots s = rest;
                    s.push_back(Complex{x, y});
                    s.push_back(Complex{x, -y});
                    seeds.push_back(std::move(s));
                }
            }
        } while (std::next_permutation(fill.begin(), fill.end()));
    }
    return seeds;
}

}  // namespace

std::vector<Complex> bethe_residual(const std::vector<Complex>& roots, std::size_t n_sites) {
    if (n_sites < 2) throw std::invalid_argument("bethe_residual: need N >= 2");
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (std::min(std::abs(roots[a] - kHalfI), std::abs(roots[a] + kHalfI)) < 1e-12) {
            throw std::domain_error("bethe_residual: root at +-i/2 is a pole of the equations");
        }
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            if (std::abs(roots[a] - roots[b]) < 1e-12) {
                throw std::invalid_argument("bethe_residual: roots must be pairwise distinct");
            }
        }
    }
    std::vector<Complex> out(roots.size());
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const Complex lhs = std::pow((roots[j] + kHalfI) / (roots[j] - kHalfI), static_cast<double>(n_sites));
        Complex rhs{1.0, 0.0};
        for (std::size_t k = 0; k < roots.size(); ++k) {
            if (k == j) continue;
            rhs *= (roots[j] - roots[k] + kI) / (roots[j] - roots[k] - kI);
        }
        out[j] = lhs - rhs;
    }
    return out;
}

std::vector<BetheSolution> bethe_solve(std::size_t n_sites, std::size_t n_magnons,
                                       const BetheSolveOptions& options) {
    if (n_sites < 2 || n_sites > 12) throw std::invalid_argument("bethe_solve: need 2 <= N <= 12");
    if (n_magnons < 1 || 2 * n_magnons > n_sites) {
        throw std::invalid_argument("bethe_solve: need 1 <= M <= N/2");
    }

    std::vector<BetheSolution> accepted;
    std::vector<Roots> canonical;

    for (const Roots& seed : seed_schedule(n_sites, n_magnons)) {
        Roots l = seed;
        if (!newton_poly(l, n_sites, options.max_newton_iterations)) continue;
        polish_log_form(l, n_sites);
        if (!all_finite(l)) continue;

        bool reject = false;
        for (std::size_t a = 0; a < l.size() && !reject; ++a) {
            if (std::abs(l[a]) > 1e6) reject = true;
            if (std::min(std::abs(l[a] - kHalfI), std::abs(l[a] + kHalfI)) < options.separation_tol) reject = true;
            for (std::size_t b = a + 1; b < l.size(); ++b) {
                if (std::abs(l[a] - l[b]) < options.separation_tol) reject = true;
            }
        }
        if (reject) continue;

        const Complex phase = solution_momentum_phase(l);
        if (std::abs(std::abs(phase) - 1.0) > options.quantization_tol) continue;
        Complex phase_power{1.0, 0.0};
        for (std::size_t k = 0; k < n_sites; ++k) phase_power *= phase;
        if (std::abs(phase_power - Complex{1.0, 0.0}) > options.quantization_tol) continue;

        const double residual = max_ratio_residual(l, n_sites);
        if (residual > options.residual_tol) continue;

        const Roots key = sorted_roots(l);
        bool duplicate = false;
        for (const Roots& existing : canonical) {
            double dist = 0.0;
            for (std::size_t k = 0; k < key.size(); ++k) dist = std::max(dist, std::abs(key[k] - existing[k]));
            if (dist < 1e-6) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;
        canonical.push_back(key);

        BetheSolution solution;
        solution.n_sites = n_sites;
        solution.n_magnons = n_magnons;
        solution.roots = key;
        solution.residual = residual;
        solution.energy = solution_energy(key);
        solution.momentum_phase = phase;
        accepted.push_back(std::move(solution));
    }

    std::sort(accepted.begin(), accepted.end(), [](const BetheSolution& a, const BetheSolution& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        for (std::size_t k = 0; k < a.roots.size(); ++k) {
            if (a.roots[k].real() != b.roots[k].real()) return a.roots[k].real() < b.roots[k].real();
            if (a.roots[k].imag() != b.roots[k].imag()) return a.roots[k].imag() < b.roots[k].imag();
        }
        return false;
    });
    return accepted;
}

std::vector<double> magnon_sector_eigenvalues(const ComplexMatrix& hamiltonian, std::size_t n_sites,
                                              std::size_t n_magnons, double tol) {
    const std::size_t dim = pow_size(2, n_sites);
    if (hamiltonian.dim() != dim) {
        throw std::invalid_argument("magnon_sector_eigenvalues: H dimension does not match 2^n");
    }
    std::vector<std::size_t> sector;
    for (std::size_t b = 0; b < dim; ++b) {
        if (static_cast<std::size_t>(std::popcount(static_cast<unsigned long long>(b))) == n_magnons) sector.push_back(b);
    }
    // The sector decomposition is only valid when H conserves magnetization;
    // verify the off-block coupling before extracting.
    const double scale = frobenius_norm(hamiltonian);
    double off_block = 0.0;
    for (std::size_t b : sector) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (static_cast<std::size_t>(std::popcount(static_cast<unsigned long long>(c))) == n_magnons) continue;
            off_block += std::norm(hamiltonian(b, c));
        }
    }
    if (std::sqrt(off_block) > tol * std::max(scale, 1.0)) {
        throw std::domain_error("magnon_sector_eigenvalues: H couples magnetization sectors (" +
                                std::to_string(std::sqrt(off_block)) + ")");
    }
    ComplexMatrix block(sector.empty() ? 1 : sector.size());
    for (std::size_t a = 0; a < sector.size(); ++a)
        for (std::size_t b = 0; b < sector.size(); ++b) block(a, b) = hamiltonian(sector[a], sector[b]);
    if (sector.empty()) return {};
    return hermitian_eigenvalues(block, 1e-9);
}

SpectrumComparison compare_spectrum(std::size_t n_sites, std::size_t n_magnons, bool periodic,
                                    double tol_spec) {
    if (n_sites > 10) throw std::invalid_argument("compare_spectrum: full-sector ED is limited to N <= 10");
    if (!periodic) throw std::invalid_argument("compare_spectrum: the Bethe equations assume a periodic chain");
    if (2 * n_magnons > n_sites) throw std::invalid_argument("compare_spectrum: need M <= N/2");

    SpectrumComparison cmp;
    cmp.n_sites = n_sites;
    cmp.n_magnons = n_magnons;

    const ModelId xxx = parse_model("xxx");
    const ComplexMatrix h = build_hamiltonian(xxx, n_sites, /*periodic=*/true);
    cmp.ed_eigenvalues = magnon_sector_eigenvalues(h, n_sites, n_magnons, 1e-10);

    // The M-magnon sector consists of the M-magnon primaries together with
    // descendants of every lower sector, whose energies repeat unchanged.
    BetheSolution vacuum;
    vacuum.n_sites = n_sites;
    vacuum.n_magnons = 0;
    vacuum.energy = 0.0;
    vacuum.residual = 0.0;
    vacuum.momentum_phase = Complex{1.0, 0.0};
    cmp.bethe.push_back(vacuum);
    for (std::size_t m = 1; m <= n_magnons; ++m) {
        for (auto& solution : bethe_solve(n_sites, m)) cmp.bethe.push_back(std::move(solution));
    }

    // Greedy nearest matching with ED degeneracy multiplicities respected:
    // every ED index can absorb at most one Bethe energy, and claims beyond
    // a level's multiplicity surface as unmatched solutions.
    std::vector<bool> used(cmp.ed_eigenvalues.size(), false);
    cmp.max_mismatch = 0.0;
    cmp.all_matched = true;
    for (std::size_t bi = 0; bi < cmp.bethe.size(); ++bi) {
        double best = -1.0;
        std::size_t best_index = 0;
        for (std::size_t ei = 0; ei < cmp.ed_eigenvalues.size(); ++ei) {
            if (used[ei]) continue;
            const double delta = std::abs(cmp.ed_eigenvalues[ei] - cmp.bethe[bi].energy);
            if (best < 0.0 || delta < best) {
                best = delta;
                best_index = ei;
            }
        }
        if (best < 0.0 || best > tol_spec) {
            cmp.all_matched = false;
            continue;
        }
        used[best_index] = true;
        cmp.matches.push_back(SpectrumMatch{bi, best_index, best});
        cmp.max_mismatch = std::max(cmp.max_mismatch, best);
    }

    // Coverage over distinct sector levels.
    std::vector<double> distinct;
    for (double e : cmp.ed_eigenvalues) {
        if (distinct.empty() || std::abs(e - distinct.back()) > 1e-8) distinct.push_back(e);
    }
    std::size_t covered = 0;
    for (double level : distinct) {
        for (const auto& solution : cmp.bethe) {
            if (std::abs(level - solution.energy) <= tol_spec) {
                ++covered;
                break;
            }
        }
    }
    cmp.covered_levels = covered;
    cmp.distinct_levels = distinct.size();
    cmp.coverage = std::to_string(covered) + "/" + std::to_string(distinct.size());
    return cmp;
}

}  // namespace rigidity
