#include "rigidity/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

#include "rigidity/serialize.hpp"

namespace rigidity {

namespace {
using json = nlohmann::ordered_json;
}

DichotomyReport run_dichotomy_report(const std::vector<ModelId>& models, const ReportOptions& options) {
    DichotomyReport report;
    report.tolerances = options.tolerances;

    for (const ModelId& model : models) {
        ModelReportRow row;
        row.model = model.name();
        const RMatrixSpec spec = build_r(model);

        row.ybe = check_boundary_free(spec, options.tolerances.tol_ybe);

        const RMatrixSpec constant_face =
            spec.kind == RKind::constant ? spec : RMatrixSpec::constant(spec.at(Complex{0.5, 0.0}));
        row.filtration = boundary_scan(constant_face, options.filtration_n_min, options.filtration_n_max,
                                       options.filtration_max_depth, options.tolerances.tol_rank);

        // Transfer commutation probe on the rational extension of the gate
        // (spectral models run as themselves).
        const RMatrixSpec family = rational_extension(model);
        double worst = 0.0;
        for (const auto& [u, v] : default_spectral_grid(family)) {
            worst = std::max(worst, transfer_commutator_relative(family, u, v, options.transfer_sites));
        }
        row.transfer_commutator_rel = worst;
        row.transfer_commutes = worst <= 100.0 * options.tolerances.tol_ybe;

        if (model.kind == ModelKind::xxx_rational) {
            row.spectrum = compare_spectrum(options.spectrum_sites, options.spectrum_magnons,
                                            /*periodic=*/true, options.tolerances.tol_spec);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string to_json(const DichotomyReport& report, int indent) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json entry;
        entry["model"] = row.model;
        entry["ybe"] = json::parse(to_json(row.ybe, 0));
        entry["filtration"] = json::parse(to_json(row.filtration, 0));
        if (row.transfer_commutator_rel) {
            entry["transfer_commutator_rel"] = *row.transfer_commutator_rel;
            entry["transfer_commutes"] = *row.transfer_commutes;
        }
        if (row.spectrum) {
            entry["spectrum"] = json::parse(to_json(*row.spectrum, 0));
        }
        json verdicts;
        verdicts["ybe"] = row.ybe.passes ? "pass" : "fail";
        verdicts["filtration"] = row.filtration.verdict;
        if (row.transfer_commutes) verdicts["transfer_commutation"] = *row.transfer_commutes ? "pass" : "fail";
        if (row.spectrum) {
            verdicts["spectrum"] =
                (row.spectrum->all_matched && row.spectrum->max_mismatch <= report.tolerances.tol_spec) ? "pass"
                                                                                                        : "fail";
        }
        entry["verdicts"] = std::move(verdicts);
        rows.push_back(std::move(entry));
    }
    json out;
    out["models"] = std::move(rows);
    json tol;
    tol["tol_rank"] = report.tolerances.tol_rank;
    tol["tol_herm"] = report.tolerances.tol_herm;
    tol["tol_ybe"] = report.tolerances.tol_ybe;
    tol["tol_spec"] = report.tolerances.tol_spec;
    out["tolerances"] = std::move(tol);
    return out.dump(indent) + "\n";
}

std::string to_csv(const DichotomyReport& report) {
    std::ostringstream out;
    out << "model,ybe,max_defect,filtration,transfer_commutator_rel,transfer_commutation,spectrum_coverage,"
           "spectrum_max_mismatch\n";
    for (const auto& row : report.rows) {
        out << row.model << ',' << (row.ybe.passes ? "pass" : "fail") << ','
            << json(row.ybe.max_defect).dump() << ',' << row.filtration.verdict << ',';
        if (row.transfer_commutator_rel) out << json(*row.transfer_commutator_rel).dump();
        out << ',';
        if (row.transfer_commutes) out << (*row.transfer_commutes ? "pass" : "fail");
        out << ',';
        if (row.spectrum) out << row.spectrum->coverage;
        out << ',';
        if (row.spectrum) out << json(row.spectrum->max_mismatch).dump();
        out << '\n';
    }
    return out.str();
}

}  // namespace rigidity
