#include "qprm/linalg.hpp"

#include "qprm/error.hpp"

#include <algorithm>
#include <utility>

namespace qprm {

void Matrix::append_row(const Vec& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length differs from matrix width");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row) {
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(lead_row, k));
        }
        const Elem s = f.inv(m(lead_row, c));
        for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) = f.mul(s, m(lead_row, k));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).is_zero()) continue;
            const Elem factor = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) {
                m(r, k) = f.sub(m(r, k), f.mul(factor, m(lead_row, k)));
            }
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

std::vector<Vec> kernel(const Field& f, Matrix m) {
    const auto pivots = rref(f, m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), Field::zero());
        v[free] = Field::one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> span_basis(const Field& f, const std::vector<Vec>& vectors, std::size_t dim) {
    Matrix m = Matrix::from_rows(vectors, dim);
    const auto pivots = rref(f, m);
    std::vector<Vec> out;
    out.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
    return out;
}

bool is_zero(const Vec& v) noexcept {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x.is_zero(); });
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
    return out;
}

Vec scale(const Field& f, Elem s, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
    return out;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
    Elem acc = Field::zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

Elem determinant(const Field& f, Matrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    Elem det = Field::one();
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c).is_zero()) ++pivot;
        if (pivot == n) return Field::zero();
        if (pivot != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(pivot, k), m(c, k));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Elem s = f.inv(m(c, c));
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            const Elem factor = f.mul(m(r, c), s);
            for (std::size_t k = c; k < n; ++k) m(r, k) = f.sub(m(r, k), f.mul(factor, m(c, k)));
        }
    }
    return det;
}

}  // namespace qprm
