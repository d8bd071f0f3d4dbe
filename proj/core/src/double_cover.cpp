#include "patlas/double_cover.hpp"

#include <algorithm>
#include <cmath>

#include "patlas/error.hpp"

namespace patlas {

namespace {

void require_generic(const ParameterMatrix& z) {
    std::vector<int> bad;
    if (!is_generic(z, &bad))
        throw domain_error("non_generic_matrix",
                           "vanishing maximal minor " + column_set_name(bad))
            .with_detail("columns", column_set_name(bad));
}

}  // namespace

BranchedValue prefactor(const ParameterMatrix& z) {
    require_generic(z);
    const int n = z.n();

    cplx numerator = 1.0;
    for (int i = n + 2; i <= 2 * n; ++i) {
        std::vector<int> cols;
        for (int c = 2; c <= n; ++c) cols.push_back(c);
        cols.push_back(i);
        numerator *= minor(z, cols);
    }
    // (n-2)-subsets of {2..n}; for n = 2 only the empty set contributes.
    std::vector<int> pool;
    for (int c = 2; c <= n; ++c) pool.push_back(c);
    std::vector<int> pick(static_cast<size_t>(n - 2));
    auto subsets = [&](auto&& self, size_t depth, size_t next) -> void {
        if (depth == pick.size()) {
            std::vector<int> cols = {1};
            cols.insert(cols.end(), pick.begin(), pick.end());
            cols.push_back(n + 1);
            std::sort(cols.begin(), cols.end());
            numerator *= minor(z, cols);
            return;
        }
        for (size_t k = next; k < pool.size(); ++k) {
            pick[depth] = pool[k];
            self(self, depth + 1, k + 1);
        }
    };
    subsets(subsets, 0, 0);

    cplx denominator = 1.0;
    if (n > 2) {
        std::vector<int> first;
        for (int c = 1; c <= n; ++c) first.push_back(c);
        std::vector<int> second;
        for (int c = 2; c <= n + 1; ++c) second.push_back(c);
        cplx base = minor(z, first) * minor(z, second);
        for (int k = 0; k < n - 2; ++k) denominator *= base;
    }

    BranchedValue out;
    // One radical over the whole quotient keeps a single branch cut.
    out.value = 1.0 / std::sqrt(numerator / denominator);
    out.branch_log.emplace_back("prefactor_sqrt", 0);
    return out;
}

DoubleCoverPeriod period(const ParameterMatrix& z, const SeriesConfig& cfg) {
    BranchedValue p = prefactor(z);
    CrossRatioGrid f = cross_ratios(z);
    SeriesResult s = series_phi(f, cfg);
    DoubleCoverPeriod out{BranchedValue{p.value * s.value, p.branch_log},
                          std::abs(p.value) * s.tail_bound, std::move(f)};
    return out;
}

}  // namespace patlas
