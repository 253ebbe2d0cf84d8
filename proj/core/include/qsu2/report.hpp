#ifndef QSU2_REPORT_HPP
#define QSU2_REPORT_HPP
//
// Project     : qsu2
// Module      : report
// Description : run configuration, check results, JSON/CSV emission
//

#include "qsu2/scalar.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace qsu2 {

struct RunConfig {
    double q = 0.5;
    PodlesC c = PodlesC::infinite();
    HalfInt level = HalfInt::whole(4);
    std::string suite = "all";
    double tolerance_override = 0.0; // 0 = per-check defaults
    std::string format = "json";     // json | csv
    std::string output_path;         // empty = stdout
    uint64_t seed = 0;

    void validate() const; // throws std::invalid_argument
};

struct CheckResult {
    std::string name;
    std::string anchor; // stable identity label of the claim being checked
    bool passed = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
};

struct CheckReport {
    RunConfig config;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_json() const;
    std::string to_csv() const;
};

/// Rows of an exported spectrum table.
struct SpectrumExportRow {
    double eigenvalue = 0.0;
    int multiplicity = 0;
    HalfInt sector;
};

std::string spectrum_to_csv(const std::vector<SpectrumExportRow>& rows);
std::string spectrum_to_json(const std::vector<SpectrumExportRow>& rows);

/// Rows of an exported decay table.
struct DecayExportRow {
    HalfInt sector;
    double block_norm = 0.0;
};

std::string decay_to_csv(const std::vector<DecayExportRow>& rows, double fitted_ratio);
std::string decay_to_json(const std::vector<DecayExportRow>& rows, double fitted_ratio);

/// Writes to the configured output path, or stdout when empty.
void write_output(const RunConfig& config, const std::string& payload);

} // namespace qsu2

#endif // QSU2_REPORT_HPP
