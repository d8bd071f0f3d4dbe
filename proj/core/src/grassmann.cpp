#include "patlas/grassmann.hpp"

#include <algorithm>
#include <cmath>

#include "patlas/error.hpp"

namespace patlas {

ParameterMatrix::ParameterMatrix(int n, std::vector<cplx> row_major_entries)
    : n_(n), z_(std::move(row_major_entries)) {
    if (n < 2) throw domain_error("bad_shape", "parameter matrix needs n >= 2");
    if (n > 6) throw domain_error("bad_shape", "parameter matrix capped at n = 6");
    if (z_.size() != static_cast<size_t>(n) * static_cast<size_t>(2 * n))
        throw domain_error("bad_shape", "entry count is not n x 2n");
}

double ParameterMatrix::max_norm() const {
    double m = 0.0;
    for (const auto& v : z_) m = std::max(m, std::abs(v));
    return m;
}

ParameterMatrix ParameterMatrix::canonical(int n, const std::vector<cplx>& grid) {
    if (grid.size() != static_cast<size_t>(n - 1) * static_cast<size_t>(n - 1))
        throw domain_error("bad_shape", "canonical grid must be (n-1) x (n-1)");
    std::vector<cplx> z(static_cast<size_t>(n) * static_cast<size_t>(2 * n), 0.0);
    ParameterMatrix m(n, std::move(z));
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    for (int i = 0; i < n; ++i) m.at(i, n) = 1.0;
    for (int j = n + 1; j < 2 * n; ++j) m.at(0, j) = 1.0;
    for (int i = 1; i < n; ++i)
        for (int j = n + 1; j < 2 * n; ++j)
            m.at(i, j) = grid[static_cast<size_t>((i - 1) * (n - 1) + (j - n - 1))];
    return m;
}

ParameterMatrix ParameterMatrix::with_scaled_column(int col, cplx factor) const {
    ParameterMatrix out = *this;
    for (int i = 0; i < n_; ++i) out.at(i, col) *= factor;
    return out;
}

ParameterMatrix ParameterMatrix::left_multiplied(const std::vector<cplx>& g) const {
    if (g.size() != static_cast<size_t>(n_) * static_cast<size_t>(n_))
        throw domain_error("bad_shape", "left factor must be n x n");
    ParameterMatrix out = *this;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < 2 * n_; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < n_; ++k) s += g[static_cast<size_t>(i * n_ + k)] * at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

namespace {

cplx det_cofactor(const std::vector<cplx>& a, int n) {
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    // n == 3
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

cplx det_lu(std::vector<cplx> a, int n) {
    cplx det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(a[static_cast<size_t>(k * n + k)]);
        for (int r = k + 1; r < n; ++r) {
            double v = std::abs(a[static_cast<size_t>(r * n + k)]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a[static_cast<size_t>(k * n + c)], a[static_cast<size_t>(piv * n + c)]);
            det = -det;
        }
        cplx pivot = a[static_cast<size_t>(k * n + k)];
        det *= pivot;
        for (int r = k + 1; r < n; ++r) {
            cplx f = a[static_cast<size_t>(r * n + k)] / pivot;
            if (f == cplx(0.0)) continue;
            for (int c = k; c < n; ++c) a[static_cast<size_t>(r * n + c)] -= f * a[static_cast<size_t>(k * n + c)];
        }
    }
    return det;
}

}  // namespace

cplx minor(const ParameterMatrix& z, const std::vector<int>& cols) {
    const int n = z.n();
    if (static_cast<int>(cols.size()) != n)
        throw domain_error("bad_column_set", "minor needs exactly n columns");
    for (size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] < 1 || cols[k] > 2 * n)
            throw domain_error("bad_column_set", "column index out of range in " + column_set_name(cols));
        if (k > 0 && cols[k] <= cols[k - 1])
            throw domain_error("bad_column_set", "columns must be strictly increasing in " + column_set_name(cols));
    }
    std::vector<cplx> sub(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sub[static_cast<size_t>(r * n + c)] = z.at(r, cols[static_cast<size_t>(c)] - 1);
    return n <= 3 ? det_cofactor(sub, n) : det_lu(std::move(sub), n);
}

std::vector<std::vector<int>> maximal_column_sets(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int c = next; c <= 2 * n; ++c) {
            if (2 * n - c + 1 < n - static_cast<int>(cur.size())) break;
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

bool is_generic(const ParameterMatrix& z, std::vector<int>* offending, double eps_rel) {
    double scale = std::pow(std::max(z.max_norm(), 1e-300), z.n());
    for (const auto& cols : maximal_column_sets(z.n())) {
        if (std::abs(minor(z, cols)) <= eps_rel * scale) {
            if (offending) *offending = cols;
            return false;
        }
    }
    return true;
}

CrossRatioGrid::CrossRatioGrid(int n, std::vector<cplx> values) : n_(n), v_(std::move(values)) {
    if (v_.size() != static_cast<size_t>(n - 1) * static_cast<size_t>(n - 1))
        throw domain_error("bad_shape", "cross-ratio grid must be (n-1) x (n-1)");
}

cplx CrossRatioGrid::at(int i, int j) const {
    if (i < 2 || i > n_ || j < n_ + 2 || j > 2 * n_)
        throw domain_error("bad_index", "cross-ratio index out of range");
    return v_[static_cast<size_t>((i - 2) * (n_ - 1) + (j - n_ - 2))];
}

double CrossRatioGrid::max_abs() const {
    double m = 0.0;
    for (const auto& v : v_) m = std::max(m, std::abs(v));
    return m;
}

namespace {

std::vector<int> base_columns_without(int n, int skip) {
    // {1..n} \ {skip}
    std::vector<int> cols;
    for (int c = 1; c <= n; ++c)
        if (c != skip) cols.push_back(c);
    return cols;
}

cplx checked_denominator(const ParameterMatrix& z, std::vector<int> cols) {
    cplx d = minor(z, cols);
    double scale = std::pow(std::max(z.max_norm(), 1e-300), z.n());
    if (std::abs(d) <= 1e-12 * scale)
        throw domain_error("non_generic_matrix",
                           "non-generic matrix: vanishing minor " + column_set_name(cols) +
                               " in a cross-ratio denominator")
            .with_detail("columns", column_set_name(cols));
    return d;
}

}  // namespace

CrossRatioGrid cross_ratios(const ParameterMatrix& z) {
    const int n = z.n();
    std::vector<cplx> grid;
    grid.reserve(static_cast<size_t>(n - 1) * static_cast<size_t>(n - 1));
    // minor(2..n, n+1) is shared by every entry.
    std::vector<int> tail = base_columns_without(n, 1);
    tail.push_back(n + 1);
    cplx num_shared = minor(z, tail);
    for (int i = 2; i <= n; ++i) {
        std::vector<int> head = base_columns_without(n, i);
        std::vector<int> head_n1 = head;
        head_n1.push_back(n + 1);
        std::sort(head_n1.begin(), head_n1.end());
        cplx den_head = checked_denominator(z, head_n1);
        for (int j = n + 2; j <= 2 * n; ++j) {
            std::vector<int> numer = head;
            numer.push_back(j);
            std::sort(numer.begin(), numer.end());
            std::vector<int> denom = base_columns_without(n, 1);
            denom.push_back(j);
            std::sort(denom.begin(), denom.end());
            cplx value = minor(z, numer) * num_shared / (checked_denominator(z, denom) * den_head);
            grid.push_back(value);
        }
    }
    return CrossRatioGrid(n, std::move(grid));
}

ParameterMatrix gauge_fix(const ParameterMatrix& z) {
    CrossRatioGrid f = cross_ratios(z);
    const int n = z.n();
    std::vector<cplx> grid;
    for (int i = 2; i <= n; ++i)
        for (int j = n + 2; j <= 2 * n; ++j) grid.push_back(f.at(i, j));
    return ParameterMatrix::canonical(n, grid);
}

std::string column_set_name(const std::vector<int>& cols) {
    std::string s = "{";
    for (size_t i = 0; i < cols.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cols[i]);
    }
    return s + "}";
}

}  // namespace patlas
