#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "patlas/ternary_cubic.hpp"  // for cplx

namespace patlas {

/// Complex n x 2n parameter matrix of a double cover of P^{n-1} branched
/// along 2n hyperplanes. Columns are the branch hyperplanes; the matrix is
/// generic when all C(2n, n) maximal minors are nonzero.
class ParameterMatrix {
public:
    ParameterMatrix(int n, std::vector<cplx> row_major_entries);

    int n() const { return n_; }
    int cols() const { return 2 * n_; }
    cplx at(int row, int col) const { return z_[static_cast<size_t>(row * 2 * n_ + col)]; }
    cplx& at(int row, int col) { return z_[static_cast<size_t>(row * 2 * n_ + col)]; }
    const std::vector<cplx>& entries() const { return z_; }

    double max_norm() const;

    /// Identity block, a column of ones, then the given (n-1) x (n-1) grid
    /// with an all-ones first row on top: the canonical gauge slice.
    static ParameterMatrix canonical(int n, const std::vector<cplx>& grid);

    /// Column scaled in place (returns a copy).
    ParameterMatrix with_scaled_column(int col, cplx factor) const;
    /// Left multiplication by an n x n matrix (returns a copy).
    ParameterMatrix left_multiplied(const std::vector<cplx>& g_row_major) const;

private:
    int n_;
    std::vector<cplx> z_;
};

/// Minor of the columns in `cols` (1-based, strictly increasing, |cols| = n).
/// Exact cofactor expansion for n <= 3, LU with partial pivoting above.
cplx minor(const ParameterMatrix& z, const std::vector<int>& cols);

/// All maximal column subsets in lexicographic order.
std::vector<std::vector<int>> maximal_column_sets(int n);

/// Tests |minor| > eps_rel * max_norm^n for every maximal minor; the first
/// offending column set (lexicographic) is reported.
bool is_generic(const ParameterMatrix& z, std::vector<int>* offending = nullptr,
                double eps_rel = 1e-12);

/// The (n-1) x (n-1) grid of invariant cross-ratios f_{ij},
/// i in {2..n}, j in {n+2..2n}.
class CrossRatioGrid {
public:
    CrossRatioGrid(int n, std::vector<cplx> values);
    int n() const { return n_; }
    int side() const { return n_ - 1; }
    /// Paper-style indices: i in {2..n}, j in {n+2..2n}.
    cplx at(int i, int j) const;
    const std::vector<cplx>& values() const { return v_; }  // row-major by (i, j)
    double max_abs() const;

private:
    int n_;
    std::vector<cplx> v_;
};

/// f_{ij}(Z) = minor(1..i^..n, j) * minor(2..n, n+1)
///           / (minor(2..n, j) * minor(1..i^..n, n+1)).
/// Throws a domain error naming the offending column set when a denominator
/// minor vanishes.
CrossRatioGrid cross_ratios(const ParameterMatrix& z);

/// Gauge fixing onto the canonical slice: the matrix with identity block,
/// ones column, all-ones first right row, and cross_ratios(z) below.
/// Idempotent, and cross-ratio preserving by construction.
ParameterMatrix gauge_fix(const ParameterMatrix& z);

std::string column_set_name(const std::vector<int>& cols);

}  // namespace patlas
