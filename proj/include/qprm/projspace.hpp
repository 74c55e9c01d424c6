#pragma once

// Rational points and linear subspaces of P^N(F_q).
//
// A point is stored by its normalized representative: the last nonzero
// coordinate equals 1. The canonical point order is lexicographic on these
// representatives, X_0 most significant.

#include "qprm/gf.hpp"
#include "qprm/integer.hpp"
#include "qprm/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qprm {

using Point = Vec;

/// Scales v so that its last nonzero coordinate is 1. Throws OutOfRange on the zero vector.
Point normalize(const Field& f, Vec v);
bool is_normalized(const Vec& v) noexcept;

/// q^N + ... + q + 1, with the value 0 for N = -1.
Count projective_point_count(Count q, int N);

/// Number of k-dimensional subspaces of F_q^n.
Count gaussian_binomial(int n, int k, Count q);

std::vector<Point> enumerate_points(const Field& f, int N);

/// Projective subspace stored by independent normalized spanning vectors.
/// An empty basis is the empty subspace of dimension -1.
struct LinearSubspace {
    int ambient = 0;
    std::vector<Point> basis;

    int dimension() const noexcept { return static_cast<int>(basis.size()) - 1; }

    /// Canonical spanning set of span(vectors): RREF rows, each normalized.
    static LinearSubspace span(const Field& f, int ambient, const std::vector<Vec>& vectors);
    static LinearSubspace whole(const Field& f, int ambient);

    bool contains(const Field& f, const Vec& v) const;
    /// Linear forms cutting out the subspace (a basis of its annihilator).
    std::vector<Vec> equations(const Field& f) const;

    friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;
};

/// The q+1 points of the line through two distinct points, in canonical order.
std::vector<Point> line_through(const Field& f, const Point& a, const Point& b);

/// All rational points of a nonempty subspace, in canonical order.
std::vector<Point> subspace_points(const Field& f, const LinearSubspace& s);

/// Every projective subspace of the given dimension, enumerated by RREF shape.
std::vector<LinearSubspace> enumerate_subspaces(const Field& f, int N, int dimension);

std::string render_point(const Field& f, const Vec& v);

/// Canonical list of P^N(F_q) with O(1) index lookup.
class ProjectiveSpace {
public:
    ProjectiveSpace(FieldRef field, int N);

    const Field& field() const noexcept { return *field_; }
    const FieldRef& field_ref() const noexcept { return field_; }
    int dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return points_.size(); }

    const std::vector<Point>& points() const noexcept { return points_; }
    const Point& point(std::size_t i) const noexcept { return points_[i]; }

    /// Index of the point represented by any nonzero vector.
    std::size_t index_of(const Vec& v) const;

private:
    std::size_t key(const Vec& v) const noexcept;

    FieldRef field_;
    int n_;
    std::vector<Point> points_;
    std::vector<std::int32_t> lookup_;
};

}  // namespace qprm
