#include "patlas/hyperseries.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "patlas/error.hpp"

namespace patlas {

MultiIndex::MultiIndex(int n, std::vector<int> entries) : n_(n), e_(std::move(entries)) {
    if (n < 2) throw domain_error("bad_shape", "multi-index needs n >= 2");
    if (e_.size() != static_cast<size_t>(n - 1) * static_cast<size_t>(n - 1))
        throw domain_error("bad_shape", "multi-index must be (n-1) x (n-1)");
    for (int v : e_)
        if (v < 0) throw domain_error("negative_exponent", "multi-index entries must be >= 0");
}

int MultiIndex::at(int i, int j) const {
    if (i < 2 || i > n_ || j < n_ + 2 || j > 2 * n_)
        throw domain_error("bad_index", "multi-index position out of range");
    return e_[static_cast<size_t>((i - 2) * (n_ - 1) + (j - n_ - 2))];
}

int MultiIndex::total_degree() const {
    int s = 0;
    for (int v : e_) s += v;
    return s;
}

int MultiIndex::row_sum(int i) const {
    int s = 0;
    for (int j = n_ + 2; j <= 2 * n_; ++j) s += at(i, j);
    return s;
}

int MultiIndex::col_sum(int j) const {
    int s = 0;
    for (int i = 2; i <= n_; ++i) s += at(i, j);
    return s;
}

Rational pochhammer(const Rational& a, int k) {
    if (k < 0) throw domain_error("bad_argument", "pochhammer needs k >= 0");
    Rational acc(1);
    Rational term = a;
    for (int i = 0; i < k; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

Rational coefficient_A(const MultiIndex& l) {
    const int n = l.n();
    const Rational half(1, 2);
    Rational num(1);
    for (int j = n + 2; j <= 2 * n; ++j) num *= pochhammer(half, l.col_sum(j));
    for (int i = 2; i <= n; ++i) num *= pochhammer(half, l.row_sum(i));
    Rational den = pochhammer(Rational(n, 2), l.total_degree());
    for (int k = 0; k < (n - 1) * (n - 1); ++k) den *= pochhammer(Rational(1), l.slot(k));
    return num / den;
}

std::vector<MultiIndex> multi_indices_of_degree(int n, int degree) {
    const int slots = (n - 1) * (n - 1);
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(slots), 0);
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == slots - 1) {
            cur[static_cast<size_t>(slot)] = left;
            out.emplace_back(n, cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[static_cast<size_t>(slot)] = e;
            self(self, slot + 1, left - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

// Per-(n, degree) float coefficient tables; the exact rationals are computed
// once and shared by every evaluation.
struct ShellTable {
    std::vector<std::vector<std::pair<std::vector<int>, double>>> shells;
};

const ShellTable& shell_table(int n, int max_degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, ShellTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, max_degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    ShellTable t;
    t.shells.resize(static_cast<size_t>(max_degree) + 1);
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& l : multi_indices_of_degree(n, d))
            t.shells[static_cast<size_t>(d)].emplace_back(l.entries(), coefficient_A(l).to_double());
    return cache.emplace(std::move(key), std::move(t)).first->second;
}

}  // namespace

SeriesResult series_phi(const CrossRatioGrid& x, const SeriesConfig& cfg) {
    if (cfg.max_total_degree < 1)
        throw domain_error("bad_config", "max_total_degree must be >= 1");
    if (x.max_abs() >= cfg.domain_radius)
        throw domain_error("outside_convergence_region",
                           "outside configured convergence region (max |x| = " +
                               std::to_string(x.max_abs()) + ", radius " +
                               std::to_string(cfg.domain_radius) + ")");
    const int n = x.n();
    const int slots = (n - 1) * (n - 1);
    const auto& table = shell_table(n, cfg.max_total_degree);

    // Power tables per grid entry.
    std::vector<std::vector<cplx>> pows(static_cast<size_t>(slots));
    for (int k = 0; k < slots; ++k) {
        auto& tab = pows[static_cast<size_t>(k)];
        tab.resize(static_cast<size_t>(cfg.max_total_degree) + 1);
        tab[0] = 1.0;
        for (int d = 1; d <= cfg.max_total_degree; ++d)
            tab[static_cast<size_t>(d)] = tab[static_cast<size_t>(d - 1)] * x.values()[static_cast<size_t>(k)];
    }

    cplx value = 0.0;
    double prev_norm = -1.0, last_norm = -1.0;
    for (int d = 0; d <= cfg.max_total_degree; ++d) {
        cplx shell_sum = 0.0;
        double shell_norm = 0.0;
        for (const auto& [e, a] : table.shells[static_cast<size_t>(d)]) {
            cplx term = a;
            for (int k = 0; k < slots; ++k)
                if (e[static_cast<size_t>(k)] > 0) term *= pows[static_cast<size_t>(k)][static_cast<size_t>(e[static_cast<size_t>(k)])];
            shell_sum += term;
            shell_norm += std::abs(term);
        }
        value += shell_sum;
        if (shell_norm > 0.0) {
            prev_norm = last_norm;
            last_norm = shell_norm;
        }
    }

    double tail = 0.0;
    if (last_norm > 0.0 && prev_norm > 0.0) {
        double ratio = last_norm / prev_norm;
        if (ratio >= 1.0)
            throw domain_error("series_not_converging",
                               "shell norms are not decreasing at the truncation degree");
        tail = last_norm * ratio / (1.0 - ratio);
    }
    return {value, tail};
}

}  // namespace patlas
