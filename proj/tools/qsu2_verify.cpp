//
// Project     : qsu2
// Module      : qsu2-verify
// Description : command-line verification harness and table exports
//

#include "qsu2/suites.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct CliOptions {
    std::string q = "0.5";
    std::string c = "inf";
    std::string level = "4";
    std::string suite = "all";
    double tol = 0.0;
    std::string format = "json";
    std::string out;
    uint64_t seed = 0;
};

void add_common(CLI::App* app, CliOptions& opt) {
    app->add_option("--q", opt.q, "deformation parameter, 0 < q < 1")->capture_default_str();
    app->add_option("--c", opt.c, "sphere parameter: nonnegative number or 'inf'")
        ->capture_default_str();
    app->add_option("--level", opt.level, "truncation level, integers or halves like 7/2")
        ->capture_default_str();
    app->add_option("--tol", opt.tol, "tolerance override applied to every check");
    app->add_option("--format", opt.format, "output format: json or csv")->capture_default_str();
    app->add_option("--out", opt.out, "output path (default: stdout)");
    app->add_option("--seed", opt.seed, "seed for sampled identity checks")->capture_default_str();
}

qsu2::RunConfig make_config(const CliOptions& opt) {
    qsu2::RunConfig cfg;
    try {
        cfg.q = std::stod(opt.q);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse --q value '" + opt.q + "'");
    }
    auto c = qsu2::parse_podles_c(opt.c);
    if (!c)
        throw std::invalid_argument("cannot parse --c value '" + opt.c + "'");
    cfg.c = *c;
    auto level = qsu2::parse_half_int(opt.level);
    if (!level)
        throw std::invalid_argument("cannot parse --level value '" + opt.level + "'");
    cfg.level = *level;
    cfg.suite = opt.suite;
    cfg.tolerance_override = opt.tol;
    cfg.format = opt.format;
    cfg.output_path = opt.out;
    cfg.seed = opt.seed;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsu2-verify: numerical verification of the truncated spectral-triple models\n"
                 "on quantum SU(2) and the Podles spheres"};
    app.require_subcommand(0, 1);

    CliOptions opt;
    add_common(&app, opt);
    app.add_option("--suite", opt.suite,
                   "algebra | heisenberg | podles | spectral | grading | real | decay | all")
        ->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "export the eigenvalue/multiplicity table");
    CliOptions sopt;
    std::string operator_name = "D";
    add_common(spectrum, sopt);
    spectrum->add_option("--operator", operator_name, "D | Dtilde")->capture_default_str();

    auto* decay = app.add_subcommand("decay", "export commutant-decay block norms");
    CliOptions dopt;
    std::string xname = "A", yname = "B", variant = "J";
    add_common(decay, dopt);
    decay->add_option("--x", xname, "left generator: A, B, B* or a, b, a*, b*")->capture_default_str();
    decay->add_option("--y", yname, "conjugated generator")->capture_default_str();
    decay->add_option("--variant", variant, "conjugator: J | J0 | T")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (spectrum->parsed()) {
            qsu2::RunConfig cfg = make_config(sopt);
            auto rows = qsu2::export_spectrum_rows(cfg, operator_name);
            qsu2::write_output(cfg, cfg.format == "csv" ? qsu2::spectrum_to_csv(rows)
                                                        : qsu2::spectrum_to_json(rows));
            return 0;
        }
        if (decay->parsed()) {
            qsu2::RunConfig cfg = make_config(dopt);
            auto table = qsu2::export_decay_rows(cfg, xname, yname, variant);
            qsu2::write_output(cfg, cfg.format == "csv"
                                        ? qsu2::decay_to_csv(table.rows, table.fitted_ratio)
                                        : qsu2::decay_to_json(table.rows, table.fitted_ratio));
            return 0;
        }
        qsu2::RunConfig cfg = make_config(opt);
        qsu2::CheckReport report = qsu2::run_suite(cfg);
        qsu2::write_output(cfg, cfg.format == "csv" ? report.to_csv() : report.to_json());
        return report.passed() ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
