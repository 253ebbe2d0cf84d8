//
// Project     : qsu2
// Module      : report
//

#include "qsu2/report.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace qsu2 {

using nlohmann::json;

namespace {

const std::set<std::string>& known_suites() {
    static const std::set<std::string> s{"algebra", "heisenberg", "podles", "spectral",
                                         "grading", "real",       "decay",  "all"};
    return s;
}

json config_json(const RunConfig& c) {
    return json{{"q", c.q},
                {"c", c.c.finite ? json(c.c.c) : json("inf")},
                {"level", c.level.str()},
                {"suite", c.suite},
                {"tolerance_override", c.tolerance_override},
                {"seed", c.seed}};
}

} // namespace

void RunConfig::validate() const {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("q must satisfy 0 < q < 1");
    if (c.finite && !(c.c >= 0.0))
        throw std::invalid_argument("c must be >= 0 or inf");
    if (level.twice < 0 || level.twice > 16)
        throw std::invalid_argument("level must lie in [0, 8]");
    if (!known_suites().count(suite))
        throw std::invalid_argument("unknown suite '" + suite + "'");
    if (format != "json" && format != "csv")
        throw std::invalid_argument("format must be json or csv");
    if (tolerance_override < 0.0)
        throw std::invalid_argument("tolerance override must be positive");
}

bool CheckReport::passed() const {
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string CheckReport::to_json() const {
    json out;
    out["config"] = config_json(config);
    out["checks"] = json::array();
    for (const auto& c : checks)
        out["checks"].push_back(json{{"name", c.name},
                                     {"anchor", c.anchor},
                                     {"passed", c.passed},
                                     {"max_error", c.max_error},
                                     {"tolerance", c.tolerance},
                                     {"seconds", c.seconds}});
    out["passed"] = passed();
    return out.dump(2) + "\n";
}

std::string CheckReport::to_csv() const {
    std::ostringstream os;
    os << "name,anchor,passed,max_error,tolerance,seconds\n";
    os.precision(12);
    for (const auto& c : checks)
        os << c.name << "," << c.anchor << "," << (c.passed ? "true" : "false") << "," << c.max_error
           << "," << c.tolerance << "," << c.seconds << "\n";
    os << "# passed = " << (passed() ? "true" : "false") << "\n";
    return os.str();
}

std::string spectrum_to_csv(const std::vector<SpectrumExportRow>& rows) {
    std::ostringstream os;
    os << "eigenvalue,multiplicity,l_sector\n";
    os.precision(12);
    for (const auto& r : rows)
        os << r.eigenvalue << "," << r.multiplicity << "," << r.sector.str() << "\n";
    return os.str();
}

std::string spectrum_to_json(const std::vector<SpectrumExportRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back(json{{"eigenvalue", r.eigenvalue},
                           {"multiplicity", r.multiplicity},
                           {"l_sector", r.sector.str()}});
    return json{{"rows", out}}.dump(2) + "\n";
}

std::string decay_to_csv(const std::vector<DecayExportRow>& rows, double fitted_ratio) {
    std::ostringstream os;
    os << "l,block_norm\n";
    os.precision(12);
    for (const auto& r : rows)
        os << r.sector.str() << "," << r.block_norm << "\n";
    os << "# fitted_ratio = " << fitted_ratio << "\n";
    return os.str();
}

std::string decay_to_json(const std::vector<DecayExportRow>& rows, double fitted_ratio) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"l", r.sector.str()}, {"block_norm", r.block_norm}});
    return json{{"rows", arr}, {"fitted_ratio", fitted_ratio}}.dump(2) + "\n";
}

void write_output(const RunConfig& config, const std::string& payload) {
    if (config.output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + config.output_path + "'");
    out << payload;
    if (!out)
        throw std::runtime_error("write failed for '" + config.output_path + "'");
}

} // namespace qsu2
