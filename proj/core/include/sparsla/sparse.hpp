#pragma once

#include "sparsla/errors.hpp"

#include <cstdint>
#include <span>
#include <vector>

// Sparse matrix storage and kernels.
//
// SparseCoo is the canonical, differentiable-parameter carrier: gradients
// with respect to a matrix are arrays aligned with its stored entries.
// Explicit zeros are kept in the pattern so the set of differentiable
// parameters is stable under value changes. CsrMatrix is the read-only
// compute form used by every SpMV kernel. All types are immutable after
// construction and safe to share across threads.

namespace sparsla {

using index_t = std::int64_t;

struct Shape {
    index_t rows = 0;
    index_t cols = 0;

    bool operator==(const Shape&) const = default;
};

class DenseMatrix;

/// Element-count cap for dense conversions (oracle paths only).
inline constexpr index_t kDenseElementCap = index_t{1} << 24;

/// Coordinate-format sparse matrix: parallel row/col/value arrays.
///
/// Always canonical: entries sorted lexicographically by (row, col) with
/// no duplicate coordinates. The constructor canonicalizes, summing any
/// duplicate (i, j) pairs.
class SparseCoo {
public:
    SparseCoo() = default;

    /// Canonicalizing constructor.
    /// Throws DimensionError on length mismatch, BoundsError on an index
    /// outside `shape`.
    SparseCoo(std::vector<index_t> rows, std::vector<index_t> cols,
              std::vector<double> vals, Shape shape);

    Shape shape() const { return shape_; }
    index_t nrows() const { return shape_.rows; }
    index_t ncols() const { return shape_.cols; }
    index_t nnz() const { return static_cast<index_t>(vals_.size()); }

    std::span<const index_t> rows() const { return rows_; }
    std::span<const index_t> cols() const { return cols_; }
    std::span<const double> vals() const { return vals_; }

    /// Same sparsity pattern, new values. No re-canonicalization: the
    /// pattern (and with it the gradient layout) is preserved even where
    /// new values are zero.
    SparseCoo with_values(std::span<const double> vals) const;

    /// Index of stored entry (i, j), or -1 if not in the pattern.
    index_t find(index_t i, index_t j) const;

    /// Dense conversion; throws BoundsError when rows*cols exceeds `cap`.
    DenseMatrix to_dense(index_t cap = kDenseElementCap) const;

private:
    std::vector<index_t> rows_;
    std::vector<index_t> cols_;
    std::vector<double> vals_;
    Shape shape_;
};

/// Compressed sparse row matrix.
///
/// row_ptr has length nrows+1 with row_ptr[0] = 0 and row_ptr[nrows] = nnz;
/// column indices are strictly increasing within each row.
class CsrMatrix {
public:
    CsrMatrix() = default;

    static CsrMatrix from_coo(const SparseCoo& coo);

    /// Inverse of from_coo; round-trip is the identity.
    SparseCoo to_coo() const;

    Shape shape() const { return shape_; }
    index_t nrows() const { return shape_.rows; }
    index_t ncols() const { return shape_.cols; }
    index_t nnz() const { return static_cast<index_t>(vals_.size()); }

    std::span<const index_t> row_ptr() const { return row_ptr_; }
    std::span<const index_t> col_idx() const { return col_idx_; }
    std::span<const double> vals() const { return vals_; }

    /// Live-array footprint in bytes (row_ptr + col_idx + vals).
    std::int64_t bytes() const;

private:
    std::vector<index_t> row_ptr_;
    std::vector<index_t> col_idx_;
    std::vector<double> vals_;
    Shape shape_;
};

/// Row-major dense matrix. Oracle backend and small-problem direct solves
/// only; never used on the large-n paths.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(index_t rows, index_t cols)
        : data_(static_cast<std::size_t>(rows * cols), 0.0), shape_{rows, cols} {}

    Shape shape() const { return shape_; }
    index_t nrows() const { return shape_.rows; }
    index_t ncols() const { return shape_.cols; }

    double operator()(index_t i, index_t j) const {
        return data_[static_cast<std::size_t>(i * shape_.cols + j)];
    }
    double& operator()(index_t i, index_t j) {
        return data_[static_cast<std::size_t>(i * shape_.cols + j)];
    }

    std::span<const double> data() const { return data_; }

private:
    std::vector<double> data_;
    Shape shape_;
};

/// y = A x, accumulated left to right within each row (deterministic).
std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x);

/// y = A^T x without forming the transpose.
std::vector<double> spmv_transpose(const CsrMatrix& a, std::span<const double> x);

/// Transposed matrix as a canonical SparseCoo.
SparseCoo transpose(const SparseCoo& a);

/// Pattern symmetry: (i, j) stored iff (j, i) stored.
bool is_structurally_symmetric(const SparseCoo& a);

/// Pattern symmetry plus |A_ij - A_ji| <= tol for every stored entry.
bool is_symmetric(const SparseCoo& a, double tol = 1e-12);

} // namespace sparsla
