#include "rigidity/models.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "rigidity/leg_embedding.hpp"
#include "rigidity/matrix_io.hpp"

namespace rigidity {

namespace {

ComplexMatrix swap_gate_matrix() {
    ComplexMatrix p(4);
    p(0, 0) = 1.0;
    p(1, 2) = 1.0;
    p(2, 1) = 1.0;
    p(3, 3) = 1.0;
    return p;
}

// E11 (x) E22: the |01><01| projector on two sites.
ComplexMatrix perturbation_direction() {
    ComplexMatrix e(4);
    e(1, 1) = 1.0;
    return e;
}

ComplexMatrix xxz_gate(double eta, Complex u) {
    const Complex a = std::sin(u + Complex{eta, 0.0});
    const Complex b = std::sin(u);
    const Complex c{std::sin(eta), 0.0};
    ComplexMatrix m(4);
    m(0, 0) = a;
    m(3, 3) = a;
    m(1, 1) = b;
    m(2, 2) = b;
    m(1, 2) = c;
    m(2, 1) = c;
    return m;
}

// splitmix64 + Box-Muller keeps the random gate reproducible independent of
// standard-library distribution details.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() {  // (0, 1]
        return (static_cast<double>(next() >> 11) + 1.0) * (1.0 / 9007199254740992.0);
    }
};

ComplexMatrix random_unitary_gate(std::uint64_t seed) {
    SplitMix64 rng{seed ^ 0xabcdef0123456789ull};
    constexpr double two_pi = 6.283185307179586476925286766559;
    auto gaussian = [&rng, two_pi]() {
        const double u1 = rng.uniform();
        const double u2 = rng.uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    };
    Eigen::Matrix4cd ginibre;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ginibre(i, j) = Complex{gaussian(), gaussian()};
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(ginibre);
    Eigen::Matrix4cd q = qr.householderQ();
    const Eigen::Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the diagonal phases so the gate is a deterministic function of the
    // seed rather than of the QR sign conventions.
    for (int j = 0; j < 4; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : Complex{1.0, 0.0};
    }
    ComplexMatrix out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = q(i, j);
    return out;
}

std::vector<Complex> default_samples() {
    return {Complex{-1.0, 0.0}, Complex{-0.5, 0.0}, Complex{0.5, 0.0}, Complex{1.0, 0.0}};
}

ComplexMatrix xxx_bond() {
    // h = P - I: each bond contributes -2 on its singlet.
    ComplexMatrix h = swap_gate_matrix();
    h -= ComplexMatrix::identity(4);
    return h;
}

ComplexMatrix xxz_bond(double eta) {
    // h = (sx sx + sy sy + Delta (sz sz - I)) / 2, Delta = cos(eta);
    // reduces to P - I at Delta = 1.
    const double delta = std::cos(eta);
    ComplexMatrix h(4);
    h(1, 2) = 1.0;  // (sx sx + sy sy) / 2 flips |01> <-> |10>
    h(2, 1) = 1.0;
    h(1, 1) = -delta;  // (Delta/2) (sz sz - I) on the anti-aligned pair
    h(2, 2) = -delta;
    return h;
}

}  // namespace

std::string ModelId::name() const {
    switch (kind) {
        case ModelKind::identity: return "identity";
        case ModelKind::swap_gate: return "swap";
        case ModelKind::xxx_rational: return "xxx";
        case ModelKind::xxz_trig: return "xxz:" + std::to_string(eta);
        case ModelKind::perturbed_swap: return "perturbed_swap:" + std::to_string(epsilon);
        case ModelKind::random_gate: return "random_gate:" + std::to_string(seed);
        case ModelKind::constant_file: return "file:" + path;
    }
    return "unknown";
}

ModelId parse_model(const std::string& token) {
    const auto colon = token.find(':');
    const std::string head = colon == std::string::npos ? token : token.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string{} : token.substr(colon + 1);

    auto parse_double = [&](const std::string& text) {
        try {
            std::size_t used = 0;
            const double value = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return value;
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_model: bad numeric argument '" + text + "' in '" + token + "'");
        }
    };

    ModelId id;
    if (head == "identity") {
        id.kind = ModelKind::identity;
    } else if (head == "swap") {
        id.kind = ModelKind::swap_gate;
    } else if (head == "xxx" || head == "xxx_rational") {
        id.kind = ModelKind::xxx_rational;
    } else if (head == "xxz" || head == "xxz_trig") {
        id.kind = ModelKind::xxz_trig;
        if (!arg.empty()) id.eta = parse_double(arg);
    } else if (head == "perturbed_swap") {
        id.kind = ModelKind::perturbed_swap;
        id.epsilon = arg.empty() ? 0.1 : parse_double(arg);
        if (id.epsilon == 0.0) {
            throw std::invalid_argument("parse_model: perturbed_swap needs a nonzero epsilon");
        }
    } else if (head == "random_gate") {
        if (arg.empty()) throw std::invalid_argument("parse_model: random_gate needs a seed, e.g. random_gate:42");
        id.kind = ModelKind::random_gate;
        try {
            id.seed = std::stoull(arg);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_model: bad seed '" + arg + "' in '" + token + "'");
        }
    } else if (head == "file") {
        if (arg.empty()) throw std::invalid_argument("parse_model: file needs a path, e.g. file:r.json");
        id.kind = ModelKind::constant_file;
        id.path = arg;
    } else {
        throw std::invalid_argument("parse_model: unknown model '" + token + "'");
    }
    return id;
}

RMatrixSpec build_r(const ModelId& model) {
    switch (model.kind) {
        case ModelKind::identity:
            return RMatrixSpec::constant(ComplexMatrix::identity(4));
        case ModelKind::swap_gate:
            return RMatrixSpec::constant(swap_gate_matrix());
        case ModelKind::xxx_rational:
            return RMatrixSpec::spectral(
                2,
                [](Complex u) {
                    ComplexMatrix m = ComplexMatrix::identity(4);
                    m *= u;
                    m += swap_gate_matrix();
                    return m;
                },
                default_samples());
        case ModelKind::xxz_trig: {
            const double eta = model.eta;
            return RMatrixSpec::spectral(
                2, [eta](Complex u) { return xxz_gate(eta, u); }, default_samples());
        }
        case ModelKind::perturbed_swap: {
            ComplexMatrix m = swap_gate_matrix();
            ComplexMatrix p = perturbation_direction();
            p *= Complex{model.epsilon, 0.0};
            m += p;
            return RMatrixSpec::constant(std::move(m));
        }
        case ModelKind::random_gate:
            return RMatrixSpec::constant(random_unitary_gate(model.seed));
        case ModelKind::constant_file:
            return RMatrixSpec::constant(load_matrix(model.path));
    }
    throw std::invalid_argument("build_r: unknown model kind");
}

RMatrixSpec rational_extension(const ModelId& model) {
    RMatrixSpec base = build_r(model);
    if (base.kind == RKind::spectral) return base;
    const ComplexMatrix gate = base.matrix;
    const std::size_t d = base.local_dim;
    return RMatrixSpec::spectral(
        d,
        [gate](Complex u) {
            ComplexMatrix m = ComplexMatrix::identity(gate.dim());
            m *= u;
            m += gate;
            return m;
        },
        default_samples());
}

ComplexMatrix build_hamiltonian(const ModelId& model, std::size_t n, bool periodic) {
    if (n < 2) throw std::invalid_argument("build_hamiltonian: need n >= 2");
    ComplexMatrix bond(4);
    switch (model.kind) {
        case ModelKind::xxx_rational: bond = xxx_bond(); break;
        case ModelKind::xxz_trig: bond = xxz_bond(model.eta); break;
        default:
            throw std::invalid_argument("build_hamiltonian: model '" + model.name() +
                                        "' has no Hamiltonian; use xxx or xxz");
    }
    std::size_t dim = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (dim > max_ambient_dim() / 2) {
            throw std::invalid_argument("build_hamiltonian: 2^" + std::to_string(n) + " exceeds the ceiling");
        }
        dim *= 2;
    }
    ComplexMatrix h(dim);
    for (std::size_t i = 1; i + 1 <= n; ++i) h += embed_adjacent(bond, i, n, 2);
    if (periodic) {
        // Both bond gates are symmetric under exchanging their two sites, so
        // the (n, 1) wrap bond equals the embedding on the ordered pair (1, n).
        h += embed_pair(bond, SitePair{1, n, n, 2});
    }
    return h;
}

std::vector<ModelId> default_catalog() {
    std::vector<ModelId> catalog;
    catalog.push_back(parse_model("identity"));
    catalog.push_back(parse_model("swap"));
    catalog.push_back(parse_model("xxx"));
    catalog.push_back(parse_model("xxz"));
    catalog.push_back(parse_model("perturbed_swap:0.1"));
    catalog.push_back(parse_model("random_gate:42"));
    return catalog;
}

}  // namespace rigidity
