#pragma once

// Dense row reduction over GF(q).

#include "qprm/gf.hpp"

#include <cstddef>
#include <vector>

namespace qprm {

using Vec = std::vector<Elem>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const { return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                              data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)); }
    void append_row(const Vec& v);

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduces m in place to reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, in free-column order.
std::vector<Vec> kernel(const Field& f, Matrix m);

/// Canonical basis of the span: the nonzero RREF rows.
std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& vectors, std::size_t dim);

bool is_zero(const Vec& v) noexcept;

Vec add(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, Elem s, const Vec& a);
Elem dot(const Field& f, const Vec& a, const Vec& b);

/// Determinant via elimination; used to certify invertibility of transforms.
Elem determinant(const Field& f, Matrix m);

}  // namespace qprm
