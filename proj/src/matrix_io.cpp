#include "rigidity/matrix_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace rigidity {

namespace {
using json = nlohmann::ordered_json;
}

std::string matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const auto& e : m.entries()) entries.push_back(json::array({e.real(), e.imag()}));
    json out;
    out["dim"] = m.dim();
    out["entries"] = std::move(entries);
    return out.dump();
}

ComplexMatrix matrix_from_json(const std::string& text) {
    json parsed;
    try {
        parsed = json::parse(text);
    } catch (const json::parse_error& err) {
        throw std::invalid_argument(std::string("matrix_from_json: ") + err.what());
    }
    if (!parsed.is_object() || !parsed.contains("dim") || !parsed.contains("entries")) {
        throw std::invalid_argument("matrix_from_json: expected {\"dim\", \"entries\"}");
    }
    const std::size_t dim = parsed.at("dim").get<std::size_t>();
    const auto& raw = parsed.at("entries");
    if (!raw.is_array()) throw std::invalid_argument("matrix_from_json: entries must be an array");
    std::vector<Complex> entries;
    entries.reserve(raw.size());
    for (const auto& pair : raw) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("matrix_from_json: each entry must be [re, im]");
        }
        entries.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return ComplexMatrix::from_entries(dim, std::move(entries));
}

void save_matrix(const ComplexMatrix& m, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_matrix: cannot open " + path);
    out << matrix_to_json(m) << '\n';
}

ComplexMatrix load_matrix(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_matrix: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return matrix_from_json(text);
}

}  // namespace rigidity
