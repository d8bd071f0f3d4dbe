#include "patlas/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "patlas/error.hpp"

namespace patlas {

SparseMatrixQ::SparseMatrixQ(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw domain_error("bad_shape", "negative matrix dimension");
}

void SparseMatrixQ::add(int row, int col, const Rational& value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw domain_error("out_of_range", "matrix entry position out of range");
    if (value.is_zero()) return;
    entries_.push_back({row, col, value});
    finalized_ = false;
}

void SparseMatrixQ::finalize() {
    if (finalized_) return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> merged;
    merged.reserve(entries_.size());
    for (auto& e : entries_) {
        if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
            merged.back().value += e.value;
            if (merged.back().value.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(e));
        }
    }
    entries_ = std::move(merged);
    finalized_ = true;
}

std::vector<Rational> SparseMatrixQ::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw domain_error("shape_mismatch", "vector length does not match column count");
    std::vector<Rational> y(static_cast<size_t>(rows_), Rational(0));
    for (const auto& e : entries_) y[static_cast<size_t>(e.row)] += e.value * x[static_cast<size_t>(e.col)];
    return y;
}

SparseMatrixQ SparseMatrixQ::vstack(const std::vector<SparseMatrixQ>& blocks) {
    if (blocks.empty()) throw domain_error("empty_stack", "vstack of no blocks");
    int cols = blocks[0].cols();
    int rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw domain_error("shape_mismatch", "vstack blocks disagree on columns");
        rows += b.rows();
    }
    SparseMatrixQ out(rows, cols);
    int offset = 0;
    for (const auto& b : blocks) {
        for (const auto& e : b.entries()) out.add(e.row + offset, e.col, e.value);
        offset += b.rows();
    }
    out.finalize();
    return out;
}

uint64_t SparseMatrixQ::content_hash() const {
    // FNV-1a over the canonical triple list.
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    mix(std::to_string(rows_) + "x" + std::to_string(cols_) + ";");
    for (const auto& e : entries_)
        mix(std::to_string(e.row) + "," + std::to_string(e.col) + "," + e.value.to_string() + ";");
    return h;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrixQ& m) {
    SparseMatrixQ mat = m;
    mat.finalize();
    const int cols = mat.cols();

    // Rows as sparse maps col -> value; empty rows dropped up front.
    struct Row {
        int orig;
        std::map<int, Rational> v;
        int lead() const { return v.begin()->first; }
    };
    std::vector<Row> rows;
    {
        std::map<int, std::map<int, Rational>> grouped;
        for (const auto& e : mat.entries()) grouped[e.row][e.col] = e.value;
        for (auto& [r, v] : grouped) rows.push_back({r, std::move(v)});
    }

    // Buckets of pending rows keyed by leading column.
    std::vector<std::vector<size_t>> bucket(static_cast<size_t>(cols));
    for (size_t i = 0; i < rows.size(); ++i) bucket[static_cast<size_t>(rows[i].lead())].push_back(i);

    std::vector<int> pivot_row_of_col(static_cast<size_t>(cols), -1);
    std::vector<int> pivot_cols;

    for (int col = 0; col < cols; ++col) {
        auto& cand = bucket[static_cast<size_t>(col)];
        if (cand.empty()) continue;
        // Smallest original row index becomes the pivot.
        size_t piv = cand[0];
        for (size_t idx : cand)
            if (rows[idx].orig < rows[piv].orig) piv = idx;
        pivot_row_of_col[static_cast<size_t>(col)] = static_cast<int>(piv);
        pivot_cols.push_back(col);

        const Rational& pv = rows[piv].v.begin()->second;
        for (size_t idx : cand) {
            if (idx == piv) continue;
            Row& r = rows[idx];
            Rational factor = r.v.begin()->second / pv;
            for (const auto& [c, val] : rows[piv].v) {
                auto it = r.v.find(c);
                Rational nv = (it == r.v.end() ? Rational(0) : it->second) - factor * val;
                if (nv.is_zero()) {
                    if (it != r.v.end()) r.v.erase(it);
                } else if (it == r.v.end()) {
                    r.v.emplace(c, std::move(nv));
                } else {
                    it->second = std::move(nv);
                }
            }
            if (!r.v.empty()) bucket[static_cast<size_t>(r.lead())].push_back(idx);
        }
        cand.clear();
        cand.push_back(piv);  // keep only the pivot in this bucket
    }

    std::vector<std::vector<Rational>> basis;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (pivot_row_of_col[static_cast<size_t>(free_col)] >= 0) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(free_col)] = Rational(1);
        for (auto it = pivot_cols.rbegin(); it != pivot_cols.rend(); ++it) {
            int col = *it;
            const Row& r = rows[static_cast<size_t>(pivot_row_of_col[static_cast<size_t>(col)])];
            Rational s(0);
            for (const auto& [c, val] : r.v)
                if (c != col && !v[static_cast<size_t>(c)].is_zero()) s += val * v[static_cast<size_t>(c)];
            v[static_cast<size_t>(col)] = -(s / r.v.at(col));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace patlas
