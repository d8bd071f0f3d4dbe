#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace patlas {

/// Shared run configuration for the CLI and the verification suites.
struct RunConfig {
    int max_degree = 40;
    uint64_t seed = 12345;
    std::string cache_dir;  // empty: PERIOD_ATLAS_CACHE or "data"
    std::map<std::string, double> tolerances = {
        {"first_order", 1e-6},  {"second_order", 1e-4},  {"cross_ratio", 1e-10},
        {"sl_ball", 1e-7},      {"column_exponent", 1e-6}, {"sextic", 1e-9},
        {"prefactor", 1e-8},    {"legendre_ratio", 1e-8},  {"agm_match", 1e-12},
    };

    double tol(const std::string& key) const {
        auto it = tolerances.find(key);
        return it == tolerances.end() ? 1e-9 : it->second;
    }
};

}  // namespace patlas
