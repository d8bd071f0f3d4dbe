#pragma once

#include <vector>

#include "patlas/grassmann.hpp"
#include "patlas/rational.hpp"

namespace patlas {

/// Non-negative multi-index over the (n-1) x (n-1) cross-ratio grid,
/// flattened row-major with i (row) outermost: slot = (i-2)*(n-1) + (j-n-2).
class MultiIndex {
public:
    MultiIndex(int n, std::vector<int> entries);
    int n() const { return n_; }
    int side() const { return n_ - 1; }
    int at(int i, int j) const;  // i in {2..n}, j in {n+2..2n}
    int slot(int k) const { return e_[static_cast<size_t>(k)]; }
    const std::vector<int>& entries() const { return e_; }
    int total_degree() const;
    int row_sum(int i) const;
    int col_sum(int j) const;

private:
    int n_;
    std::vector<int> e_;
};

struct SeriesConfig {
    int max_total_degree = 40;
    double tail_tolerance = 1e-12;
    double domain_radius = 0.5;
};

/// Rising factorial (a)(a+1)...(a+k-1), exact; k = 0 gives 1.
Rational pochhammer(const Rational& a, int k);

/// A(l) = prod_j (1/2, colsum_j) prod_i (1/2, rowsum_i)
///      / ((n/2, |l|) prod_ij (1, l_ij)), exact.
Rational coefficient_A(const MultiIndex& l);

struct SeriesResult {
    cplx value;
    double tail_bound;
};

/// Truncated sum of A(l) x^l over |l| <= max_total_degree, summed shell by
/// shell in a fixed enumeration order so the float result is reproducible.
/// The tail bound extrapolates the last two nonzero shell norms
/// geometrically. Throws when the point leaves the configured polydisk or
/// the shell norms stop decreasing.
SeriesResult series_phi(const CrossRatioGrid& x, const SeriesConfig& cfg);

/// All multi-indices of the given total degree in a fixed deterministic
/// order (first slot descending).
std::vector<MultiIndex> multi_indices_of_degree(int n, int degree);

}  // namespace patlas
