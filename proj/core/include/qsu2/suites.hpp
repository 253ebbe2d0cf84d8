#ifndef QSU2_SUITES_HPP
#define QSU2_SUITES_HPP
//
// Project     : qsu2
// Module      : suites
// Description : named check suites over the whole stack, with report assembly
//

#include "qsu2/report.hpp"

#include <vector>

namespace qsu2 {

/// Executes the configured suite (algebra | heisenberg | podles | spectral |
/// grading | real | decay | all) and assembles the report.  Checks are
/// deterministic given the configuration (sampled identities draw from a
/// generator seeded by config.seed).
CheckReport run_suite(const RunConfig& config);

/// Spectrum export for the D (operator_name = "D") or the restricted
/// ("Dtilde") Dirac operator at the configured level.
std::vector<SpectrumExportRow> export_spectrum_rows(const RunConfig& config,
                                                    const std::string& operator_name);

/// Decay export: block norms of [pi(x), V pi(y) V^{-1}] with V in
/// {"J", "J0", "T"}; x, y name Podles generators (A, B, B*) for the sphere
/// side or coordinate generators (a, b, a*, b*) for the quantum SU(2) side.
struct DecayExport {
    std::vector<DecayExportRow> rows;
    double fitted_ratio = 0.0;
};
DecayExport export_decay_rows(const RunConfig& config, const std::string& x, const std::string& y,
                              const std::string& variant);

/// Independent Haar oracle: solves the left-invariance equations
/// psi(h |> m) = eps(h) psi(m) on the full monomial span of degree <= 2 nmax
/// by least squares and returns psi((b b*)^n), n = 0..nmax.
std::vector<double> haar_brute_force(double q, int nmax);

} // namespace qsu2

#endif // QSU2_SUITES_HPP
