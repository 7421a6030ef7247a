// Dense linear algebra over a Field: reduced row echelon form, rank, right
// kernel, products and conjugate transpose under a Frobenius twist.
// Matrices store packed element values row-major and are treated as immutable
// by all operations (fresh results are allocated).
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trc/gf.hpp"

namespace trc {

class Matrix {
  public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {&data_[r * cols_], cols_}; }
    std::span<std::uint32_t> row(std::size_t r) { return {&data_[r * cols_], cols_}; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return field_.get() == o.field_.get() && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

struct RrefResult {
    Matrix r;                         // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column per kept row
};

// Deterministic Gaussian elimination with first-nonzero pivot selection.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Rows form a basis of the right kernel {v : M v^T = 0}; row count equals
// cols - rank(M).
Matrix kernel(const Matrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);

// (i,j) entry of the result is M(j,i)^(p^e).
Matrix conj_transpose(const Matrix& m, std::uint32_t e);

bool row_space_contains(const Matrix& a, std::span<const std::uint32_t> v);
bool same_row_space(const Matrix& a, const Matrix& b);

Matrix stack_rows(const Matrix& a, const Matrix& b);
Matrix identity(const FieldPtr& f, std::size_t n);

}  // namespace trc
