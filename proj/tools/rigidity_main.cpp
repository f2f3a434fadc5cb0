// Command-line front end: every analysis as a subcommand with JSON (or CSV)
// output. Exit codes: 0 = computed and passed, 1 = computed but the verdict
// failed, 2 = usage or input error. Verdict-as-exit-code applies to
// check-ybe and spectrum; filtration, bethe, and report exit 0 whenever the
// computation succeeds.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rigidity/config.hpp"
#include "rigidity/models.hpp"
#include "rigidity/report.hpp"
#include "rigidity/serialize.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::string model = "swap";
    std::string out_path;
    std::string format = "json";
    rigidity::Tolerances tolerances;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_model = true) {
    if (with_model) {
        cmd->add_option("--model", opts.model,
                        "Model token: identity, swap, xxx, xxz[:eta], perturbed_swap:eps, "
                        "random_gate:seed, file:path");
    }
    cmd->add_option("--out", opts.out_path, "Write the report to this file instead of stdout");
    cmd->add_option("--format", opts.format, "Output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol-rank", opts.tolerances.tol_rank, "Rank decision tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-herm", opts.tolerances.tol_herm, "Hermiticity tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-ybe", opts.tolerances.tol_ybe, "Yang-Baxter defect tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol-spec", opts.tolerances.tol_spec, "Spectrum match tolerance")
        ->check(CLI::PositiveNumber);
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + opts.out_path);
    file << text;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const std::size_t n = std::stoul(text);
            return {n, n};
        }
        return {std::stoul(text.substr(0, sep)), std::stoul(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "', expected A..B");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yang-Baxter defects, interaction-depth filtrations, and Bethe solvability witnesses"};
    app.require_subcommand(1);

    CommonOptions ybe_opts;
    bool pairwise_generated = true;
    auto* check_ybe = app.add_subcommand("check-ybe", "Yang-Baxter defect scan for one model");
    add_common(check_ybe, ybe_opts);
    check_ybe->add_flag("--pairwise-generated,!--no-pairwise-generated", pairwise_generated,
                        "Assert pairwise generation at depth 2 (part of the boundary-free verdict)");

    CommonOptions filt_opts;
    std::string filt_range = "2..4";
    std::string filt_mode = "product";
    std::size_t filt_depth = 10;
    auto* filtration = app.add_subcommand("filtration", "Depth filtration scan across system sizes");
    add_common(filtration, filt_opts);
    filtration->add_option("--n", filt_range, "Site range A..B");
    filtration->add_option("--mode", filt_mode, "Filtration mode")->check(CLI::IsMember({"product", "commutator"}));
    filtration->add_option("--max-depth", filt_depth, "Depth cap");

    CommonOptions spec_opts;
    spec_opts.model = "xxx";
    std::size_t spec_sites = 6;
    std::size_t spec_magnons = 1;
    auto* spectrum = app.add_subcommand("spectrum", "Bethe energies against sector exact diagonalization");
    add_common(spectrum, spec_opts);
    spectrum->add_option("--sites", spec_sites, "Chain length N");
    spectrum->add_option("--magnons", spec_magnons, "Magnon number M");

    CommonOptions bethe_opts;
    std::size_t bethe_sites = 6;
    std::size_t bethe_magnons = 1;
    auto* bethe = app.add_subcommand("bethe", "Solve the Bethe equations for one sector");
    add_common(bethe, bethe_opts, /*with_model=*/false);
    bethe->add_option("--sites", bethe_sites, "Chain length N");
    bethe->add_option("--magnons", bethe_magnons, "Magnon number M");

    CommonOptions report_opts;
    std::string report_models;
    std::string report_range = "2..3";
    std::size_t report_transfer_sites = 4;
    auto* report = app.add_subcommand("report", "Dichotomy table over the model catalog");
    add_common(report, report_opts, /*with_model=*/false);
    auto* models_opt =
        report->add_option("--models", report_models, "Comma-separated model tokens (default: full catalog)");
    report->add_option("--n", report_range, "Filtration site range A..B");
    report->add_option("--transfer-sites", report_transfer_sites, "Chain length for the commutation probe");
    std::uint64_t report_seed = 42;
    report->add_option("--seed", report_seed, "Seed for the catalog's random gate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check_ybe->parsed()) {
            const auto model = rigidity::parse_model(ybe_opts.model);
            const auto spec = rigidity::build_r(model);
            const auto result = rigidity::check_boundary_free(spec, ybe_opts.tolerances.tol_ybe, pairwise_generated);
            emit(ybe_opts, ybe_opts.format == "csv" ? rigidity::to_csv(result) : rigidity::to_json(result));
            return result.passes ? kExitPass : kExitVerdictFail;
        }

        if (filtration->parsed()) {
            const auto model = rigidity::parse_model(filt_opts.model);
            auto spec = rigidity::build_r(model);
            if (spec.kind == rigidity::RKind::spectral) {
                spec = rigidity::RMatrixSpec::constant(spec.at(rigidity::Complex{0.5, 0.0}));
            }
            const auto [n_min, n_max] = parse_range(filt_range);
            const auto mode = filt_mode == "product" ? rigidity::FiltrationMode::product
                                                     : rigidity::FiltrationMode::commutator;
            const auto scan =
                rigidity::boundary_scan(spec, n_min, n_max, filt_depth, filt_opts.tolerances.tol_rank, mode);
            emit(filt_opts, filt_opts.format == "csv" ? rigidity::to_csv(scan) : rigidity::to_json(scan));
            return kExitPass;
        }

        if (spectrum->parsed()) {
            const auto model = rigidity::parse_model(spec_opts.model);
            if (model.kind != rigidity::ModelKind::xxx_rational) {
                throw std::invalid_argument("spectrum: only the xxx model has a Bethe solver");
            }
            const auto cmp = rigidity::compare_spectrum(spec_sites, spec_magnons, /*periodic=*/true,
                                                        spec_opts.tolerances.tol_spec);
            emit(spec_opts, spec_opts.format == "csv" ? rigidity::to_csv(cmp) : rigidity::to_json(cmp));
            const bool pass = cmp.all_matched && cmp.max_mismatch <= spec_opts.tolerances.tol_spec;
            return pass ? kExitPass : kExitVerdictFail;
        }

        if (bethe->parsed()) {
            const auto solutions = rigidity::bethe_solve(bethe_sites, bethe_magnons);
            emit(bethe_opts, bethe_opts.format == "csv" ? rigidity::to_csv(solutions) : rigidity::to_json(solutions));
            return kExitPass;
        }

        if (report->parsed()) {
            std::vector<rigidity::ModelId> models;
            if (models_opt->count() == 0) {
                models = rigidity::default_catalog();
                for (auto& model : models) {
                    if (model.kind == rigidity::ModelKind::random_gate) model.seed = report_seed;
                }
            } else {
                std::string rest = report_models;
                while (!rest.empty()) {
                    const auto comma = rest.find(',');
                    const std::string token = rest.substr(0, comma);
                    if (!token.empty()) models.push_back(rigidity::parse_model(token));
                    if (comma == std::string::npos) break;
                    rest = rest.substr(comma + 1);
                }
            }
            rigidity::ReportOptions options;
            options.tolerances = report_opts.tolerances;
            const auto [n_min, n_max] = parse_range(report_range);
            options.filtration_n_min = n_min;
            options.filtration_n_max = n_max;
            options.transfer_sites = report_transfer_sites;
            const auto table = rigidity::run_dichotomy_report(models, options);
            emit(report_opts, report_opts.format == "csv" ? rigidity::to_csv(table) : rigidity::to_json(table));
            return kExitPass;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
