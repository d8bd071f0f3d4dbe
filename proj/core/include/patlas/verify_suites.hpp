#pragma once

#include <string>
#include <vector>

#include "patlas/config.hpp"

namespace patlas {

struct CheckResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;  // worst observed quantity (residual, defect, ...)
    double bound = 0.0;     // what it was compared against (0 = exact)
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    bool pass = false;
    std::vector<CheckResult> checks;
};

/// Named check groups, one per verification theme.
std::vector<CheckResult> aronhold_checks();                            // exact kernel + restrictions
std::vector<CheckResult> sextic_checks(const RunConfig& cfg);          // J sextic + branch recovery
std::vector<CheckResult> prefactor_checks(const RunConfig& cfg);       // degree-12 relation, P^4 on Legendre
std::vector<CheckResult> legendre_oracle_checks(const RunConfig& cfg); // quadrature ratio + AGM match
std::vector<CheckResult> annihilator_checks(const RunConfig& cfg);     // operator residual sweep
std::vector<CheckResult> invariance_checks(const RunConfig& cfg);      // homogeneity + invariance probes
std::vector<CheckResult> k3_coefficient_checks();                      // exact Gamma-form comparison
std::vector<CheckResult> cubic_pipeline_checks(const RunConfig& cfg);  // end-to-end cubic periods
std::vector<CheckResult> positive_closure_checks(const RunConfig& cfg);

/// Suites exposed by the CLI: legendre, k3, cubic, operators, aronhold, pc,
/// all.
std::vector<std::string> available_suites();
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace patlas
