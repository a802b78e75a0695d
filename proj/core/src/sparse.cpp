#include "sparsla/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sparsla {

SparseCoo::SparseCoo(std::vector<index_t> rows, std::vector<index_t> cols,
                     std::vector<double> vals, Shape shape)
    : shape_(shape) {
    if (rows.size() != cols.size() || rows.size() != vals.size()) {
        throw DimensionError("coo arrays must have equal length: rows=" +
                             std::to_string(rows.size()) + " cols=" +
                             std::to_string(cols.size()) + " vals=" +
                             std::to_string(vals.size()));
    }
    if (shape.rows < 0 || shape.cols < 0) {
        throw DimensionError("negative matrix shape");
    }
    const auto n = rows.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (rows[k] < 0 || rows[k] >= shape.rows || cols[k] < 0 || cols[k] >= shape.cols) {
            throw BoundsError("coo index (" + std::to_string(rows[k]) + ", " +
                              std::to_string(cols[k]) + ") outside shape (" +
                              std::to_string(shape.rows) + ", " +
                              std::to_string(shape.cols) + ") at entry " +
                              std::to_string(k));
        }
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (rows[a] != rows[b]) return rows[a] < rows[b];
        if (cols[a] != cols[b]) return cols[a] < cols[b];
        return a < b; // stable within duplicates: summation in input order
    });

    rows_.reserve(n);
    cols_.reserve(n);
    vals_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t p = perm[k];
        if (!rows_.empty() && rows_.back() == rows[p] && cols_.back() == cols[p]) {
            vals_.back() += vals[p];
        } else {
            rows_.push_back(rows[p]);
            cols_.push_back(cols[p]);
            vals_.push_back(vals[p]);
        }
    }
}

SparseCoo SparseCoo::with_values(std::span<const double> vals) const {
    if (static_cast<index_t>(vals.size()) != nnz()) {
        throw DimensionError("with_values: expected " + std::to_string(nnz()) +
                             " values, got " + std::to_string(vals.size()));
    }
    SparseCoo out;
    out.rows_ = rows_;
    out.cols_ = cols_;
    out.vals_.assign(vals.begin(), vals.end());
    out.shape_ = shape_;
    return out;
}

index_t SparseCoo::find(index_t i, index_t j) const {
    // Entries are sorted by (row, col); binary search.
    auto lo = std::lower_bound(rows_.begin(), rows_.end(), i);
    auto hi = std::upper_bound(lo, rows_.end(), i);
    const auto row_begin = static_cast<std::size_t>(lo - rows_.begin());
    const auto row_end = static_cast<std::size_t>(hi - rows_.begin());
    auto c = std::lower_bound(cols_.begin() + row_begin, cols_.begin() + row_end, j);
    if (c != cols_.begin() + row_end && *c == j) {
        return static_cast<index_t>(c - cols_.begin());
    }
    return -1;
}

DenseMatrix SparseCoo::to_dense(index_t cap) const {
    if (shape_.rows * shape_.cols > cap) {
        throw BoundsError("to_dense: " + std::to_string(shape_.rows) + "x" +
                          std::to_string(shape_.cols) +
                          " exceeds dense element cap " + std::to_string(cap));
    }
    DenseMatrix d(shape_.rows, shape_.cols);
    for (index_t k = 0; k < nnz(); ++k) {
        d(rows_[k], cols_[k]) = vals_[k];
    }
    return d;
}

CsrMatrix CsrMatrix::from_coo(const SparseCoo& coo) {
    CsrMatrix m;
    m.shape_ = coo.shape();
    const index_t n = coo.nrows();
    const index_t nnz = coo.nnz();
    m.row_ptr_.assign(static_cast<std::size_t>(n + 1), 0);
    m.col_idx_.resize(static_cast<std::size_t>(nnz));
    m.vals_.resize(static_cast<std::size_t>(nnz));
    auto rows = coo.rows();
    auto cols = coo.cols();
    auto vals = coo.vals();
    for (index_t k = 0; k < nnz; ++k) {
        ++m.row_ptr_[static_cast<std::size_t>(rows[k] + 1)];
    }
    for (index_t i = 0; i < n; ++i) {
        m.row_ptr_[static_cast<std::size_t>(i + 1)] += m.row_ptr_[static_cast<std::size_t>(i)];
    }
    // COO is canonical (row-major sorted), so a straight copy lands each
    // row's columns already strictly increasing.
    std::copy(cols.begin(), cols.end(), m.col_idx_.begin());
    std::copy(vals.begin(), vals.end(), m.vals_.begin());
    return m;
}

SparseCoo CsrMatrix::to_coo() const {
    std::vector<index_t> rows(static_cast<std::size_t>(nnz()));
    for (index_t i = 0; i < nrows(); ++i) {
        for (index_t k = row_ptr_[static_cast<std::size_t>(i)];
             k < row_ptr_[static_cast<std::size_t>(i + 1)]; ++k) {
            rows[static_cast<std::size_t>(k)] = i;
        }
    }
    return SparseCoo(std::move(rows), col_idx_, vals_, shape_);
}

std::int64_t CsrMatrix::bytes() const {
    return static_cast<std::int64_t>(row_ptr_.size() * sizeof(index_t) +
                                     col_idx_.size() * sizeof(index_t) +
                                     vals_.size() * sizeof(double));
}

std::vector<double> spmv(const CsrMatrix& a, std::span<const double> x) {
    if (static_cast<index_t>(x.size()) != a.ncols()) {
        throw DimensionError("spmv: x has length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(a.ncols()));
    }
    std::vector<double> y(static_cast<std::size_t>(a.nrows()), 0.0);
    auto row_ptr = a.row_ptr();
    auto col_idx = a.col_idx();
    auto vals = a.vals();
    for (index_t i = 0; i < a.nrows(); ++i) {
        double sum = 0.0;
        for (index_t k = row_ptr[static_cast<std::size_t>(i)];
             k < row_ptr[static_cast<std::size_t>(i + 1)]; ++k) {
            sum += vals[static_cast<std::size_t>(k)] *
                   x[static_cast<std::size_t>(col_idx[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(i)] = sum;
    }
    return y;
}

std::vector<double> spmv_transpose(const CsrMatrix& a, std::span<const double> x) {
    if (static_cast<index_t>(x.size()) != a.nrows()) {
        throw DimensionError("spmv_transpose: x has length " + std::to_string(x.size()) +
                             ", expected " + std::to_string(a.nrows()));
    }
    std::vector<double> y(static_cast<std::size_t>(a.ncols()), 0.0);
    auto row_ptr = a.row_ptr();
    auto col_idx = a.col_idx();
    auto vals = a.vals();
    for (index_t i = 0; i < a.nrows(); ++i) {
        const double xi = x[static_cast<std::size_t>(i)];
        for (index_t k = row_ptr[static_cast<std::size_t>(i)];
             k < row_ptr[static_cast<std::size_t>(i + 1)]; ++k) {
            y[static_cast<std::size_t>(col_idx[static_cast<std::size_t>(k)])] +=
                vals[static_cast<std::size_t>(k)] * xi;
        }
    }
    return y;
}

SparseCoo transpose(const SparseCoo& a) {
    std::vector<index_t> rows(a.cols().begin(), a.cols().end());
    std::vector<index_t> cols(a.rows().begin(), a.rows().end());
    std::vector<double> vals(a.vals().begin(), a.vals().end());
    return SparseCoo(std::move(rows), std::move(cols), std::move(vals),
                     Shape{a.ncols(), a.nrows()});
}

bool is_structurally_symmetric(const SparseCoo& a) {
    if (a.nrows() != a.ncols()) return false;
    auto rows = a.rows();
    auto cols = a.cols();
    for (index_t k = 0; k < a.nnz(); ++k) {
        if (a.find(cols[k], rows[k]) < 0) return false;
    }
    return true;
}

bool is_symmetric(const SparseCoo& a, double tol) {
    if (a.nrows() != a.ncols()) return false;
    auto rows = a.rows();
    auto cols = a.cols();
    auto vals = a.vals();
    for (index_t k = 0; k < a.nnz(); ++k) {
        const index_t m = a.find(cols[k], rows[k]);
        if (m < 0) return false;
        if (std::abs(vals[k] - vals[static_cast<std::size_t>(m)]) > tol) return false;
    }
    return true;
}

} // namespace sparsla
