#pragma once

#include <string>
#include <utility>
#include <vector>

#include "patlas/grassmann.hpp"
#include "patlas/hyperseries.hpp"

namespace patlas {

/// A value of a multivalued radical expression together with the branch
/// choices that produced it: one (factor id, half-winding) entry per radical
/// factor, 0 meaning the principal determination.
struct BranchedValue {
    cplx value{};
    std::vector<std::pair<std::string, int>> branch_log;
};

/// The invariant prefactor
///   ( prod_{i=n+2}^{2n} minor(2..n, i) * prod_{J subset {2..n}, |J|=n-2}
///     minor(1, J, n+1) / (minor(1..n) minor(2..n, n+1))^{n-2} )^{-1/2},
/// assembled as one quotient and rooted once, so the branch record is a
/// single integer. For n = 2 this is (minor(1,3) minor(2,4))^{-1/2}.
BranchedValue prefactor(const ParameterMatrix& z);

struct DoubleCoverPeriod {
    BranchedValue value;
    double tail_bound = 0.0;
    CrossRatioGrid cross_ratios;
};

/// Holomorphic period of the double cover family at z:
/// prefactor(z) * series_phi(cross_ratios(z), cfg).
DoubleCoverPeriod period(const ParameterMatrix& z, const SeriesConfig& cfg);

}  // namespace patlas
