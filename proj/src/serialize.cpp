#include "rigidity/serialize.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace rigidity {

namespace {

using json = nlohmann::ordered_json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json ybe_to_json_value(const YbeReport& report) {
    json samples = json::array();
    for (const auto& s : report.samples) {
        json entry;
        if (s.u && s.v) {
            entry["u"] = complex_to_json(*s.u);
            entry["v"] = complex_to_json(*s.v);
        }
        entry["defect_fro"] = s.defect_rel;
        entry["defect_abs"] = s.defect_abs;
        samples.push_back(std::move(entry));
    }
    json out;
    out["kind"] = report.kind;
    out["samples"] = std::move(samples);
    out["max_defect"] = report.max_defect;
    out["tolerance"] = report.tolerance;
    out["passes"] = report.passes;
    out["checked_samples"] = report.checked_samples;
    out["pairwise_generation_asserted"] = report.pairwise_generation_asserted;
    out["boundary_free"] = report.boundary_free;
    return out;
}

json filtration_to_json_value(const FiltrationReport& report) {
    json out;
    out["mode"] = to_string(report.mode);
    out["dims"] = report.dims;
    if (report.termination_depth) {
        out["termination_depth"] = *report.termination_depth;
    } else {
        out["termination_depth"] = nullptr;
    }
    out["new_counts"] = report.new_counts;
    out["saturated"] = report.saturated;
    out["ambient_dim"] = report.ambient_dim;
    out["max_depth_searched"] = report.max_depth_searched;
    return out;
}

json scan_to_json_value(const BoundaryScan& scan) {
    json reports = json::array();
    for (std::size_t k = 0; k < scan.reports.size(); ++k) {
        json entry = filtration_to_json_value(scan.reports[k]);
        entry["n"] = scan.n_values[k];
        reports.push_back(std::move(entry));
    }
    json out;
    out["reports"] = std::move(reports);
    out["verdict"] = scan.verdict;
    return out;
}

json solution_to_json_value(const BetheSolution& s) {
    json roots = json::array();
    for (const auto& z : s.roots) roots.push_back(complex_to_json(z));
    json out;
    out["n_sites"] = s.n_sites;
    out["n_magnons"] = s.n_magnons;
    out["roots"] = std::move(roots);
    out["energy"] = s.energy;
    out["residual"] = s.residual;
    out["momentum_phase"] = complex_to_json(s.momentum_phase);
    return out;
}

json comparison_to_json_value(const SpectrumComparison& cmp) {
    json bethe = json::array();
    for (const auto& s : cmp.bethe) {
        json entry;
        json roots = json::array();
        for (const auto& z : s.roots) roots.push_back(complex_to_json(z));
        entry["roots"] = std::move(roots);
        entry["energy"] = s.energy;
        entry["residual"] = s.residual;
        entry["n_magnons"] = s.n_magnons;
        bethe.push_back(std::move(entry));
    }
    json matches = json::array();
    for (const auto& m : cmp.matches) {
        matches.push_back(json::array({m.bethe_index, m.ed_index, m.delta}));
    }
    json out;
    out["N"] = cmp.n_sites;
    out["M"] = cmp.n_magnons;
    out["ed"] = cmp.ed_eigenvalues;
    out["bethe"] = std::move(bethe);
    out["matches"] = std::move(matches);
    out["max_mismatch"] = cmp.max_mismatch;
    out["all_matched"] = cmp.all_matched;
    out["coverage"] = cmp.coverage;
    return out;
}

std::string dump(const json& value, int indent) { return value.dump(indent) + "\n"; }

}  // namespace

std::string to_json(const YbeReport& report, int indent) { return dump(ybe_to_json_value(report), indent); }
std::string to_json(const FiltrationReport& report, int indent) {
    return dump(filtration_to_json_value(report), indent);
}
std::string to_json(const BoundaryScan& scan, int indent) { return dump(scan_to_json_value(scan), indent); }
std::string to_json(const BetheSolution& solution, int indent) {
    return dump(solution_to_json_value(solution), indent);
}
std::string to_json(const std::vector<BetheSolution>& solutions, int indent) {
    json arr = json::array();
    for (const auto& s : solutions) arr.push_back(solution_to_json_value(s));
    return dump(arr, indent);
}
std::string to_json(const SpectrumComparison& comparison, int indent) {
    return dump(comparison_to_json_value(comparison), indent);
}

namespace {

std::string format_double(double v) {
    json j = v;
    return j.dump();
}

}  // namespace

std::string to_csv(const YbeReport& report) {
    std::ostringstream out;
    out << "u_re,u_im,v_re,v_im,defect_rel,defect_abs\n";
    for (const auto& s : report.samples) {
        if (s.u && s.v) {
            out << format_double(s.u->real()) << ',' << format_double(s.u->imag()) << ','
                << format_double(s.v->real()) << ',' << format_double(s.v->imag()) << ',';
        } else {
            out << ",,,,";
        }
        out << format_double(s.defect_rel) << ',' << format_double(s.defect_abs) << '\n';
    }
    return out.str();
}

std::string to_csv(const BoundaryScan& scan) {
    std::ostringstream out;
    out << "n,mode,ambient_dim,dims,termination_depth,saturated,verdict\n";
    for (std::size_t k = 0; k < scan.reports.size(); ++k) {
        const auto& rep = scan.reports[k];
        out << scan.n_values[k] << ',' << to_string(rep.mode) << ',' << rep.ambient_dim << ',';
        for (std::size_t i = 0; i < rep.dims.size(); ++i) {
            if (i) out << ';';
            out << rep.dims[i];
        }
        out << ',';
        if (rep.termination_depth) out << *rep.termination_depth;
        out << ',' << (rep.saturated ? "true" : "false") << ',' << scan.verdict << '\n';
    }
    return out.str();
}

std::string to_csv(const std::vector<BetheSolution>& solutions) {
    std::ostringstream out;
    out << "index,n_magnons,energy,residual,momentum_re,momentum_im,roots\n";
    for (std::size_t k = 0; k < solutions.size(); ++k) {
        const auto& s = solutions[k];
        out << k << ',' << s.n_magnons << ',' << format_double(s.energy) << ','
            << format_double(s.residual) << ',' << format_double(s.momentum_phase.real()) << ','
            << format_double(s.momentum_phase.imag()) << ',';
        for (std::size_t i = 0; i < s.roots.size(); ++i) {
            if (i) out << ';';
            out << format_double(s.roots[i].real()) << '+' << format_double(s.roots[i].imag()) << 'j';
        }
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const SpectrumComparison& cmp) {
    std::ostringstream out;
    out << "bethe_index,ed_index,bethe_energy,ed_energy,delta\n";
    for (const auto& m : cmp.matches) {
        out << m.bethe_index << ',' << m.ed_index << ','
            << format_double(cmp.bethe[m.bethe_index].energy) << ','
            << format_double(cmp.ed_eigenvalues[m.ed_index]) << ',' << format_double(m.delta) << '\n';
    }
    return out.str();
}

}  // namespace rigidity
