#pragma once

#include <cstdint>
#include <vector>

#include "patlas/rational.hpp"

namespace patlas {

/// Sparse rational matrix stored as coordinate triples with distinct
/// positions and no explicit zeros.
class SparseMatrixQ {
public:
    struct Entry {
        int row;
        int col;
        Rational value;
    };

    SparseMatrixQ(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Entry>& entries() const { return entries_; }

    /// Accumulates into (row, col); entries that cancel to zero are removed
    /// when the matrix is finalized.
    void add(int row, int col, const Rational& value);

    /// Sorts by (row, col), merges duplicates, drops zeros. Called implicitly
    /// by consumers; cheap when already finalized.
    void finalize();
    bool finalized() const { return finalized_; }

    /// Exact y = M x.
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    /// Stacks blocks vertically; all must share the column count.
    static SparseMatrixQ vstack(const std::vector<SparseMatrixQ>& blocks);

    /// Deterministic content hash of the finalized triple list.
    uint64_t content_hash() const;

private:
    int rows_, cols_;
    bool finalized_ = true;
    std::vector<Entry> entries_;
};

/// Exact basis of the right null space, by sparse rational Gaussian
/// elimination. Pivot rule: columns in increasing order; among candidate
/// rows the one with the smallest original row index wins. Each returned
/// vector has value 1 in its free coordinate, so the output is reproducible
/// byte for byte.
std::vector<std::vector<Rational>> kernel_basis(const SparseMatrixQ& m);

}  // namespace patlas
