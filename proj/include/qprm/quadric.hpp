#pragma once

// Quadratic forms over GF(q) and the quadrics they define in P^N.

#include "qprm/gf.hpp"
#include "qprm/integer.hpp"
#include "qprm/linalg.hpp"
#include "qprm/point_set.hpp"
#include "qprm/projspace.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qprm {

/// sum_{i <= j} a_ij X_i X_j in N+1 variables. Coefficients are stored in
/// monomial order (0,0), (0,1), ..., (0,N), (1,1), ..., (N,N).
class QuadraticForm {
public:
    QuadraticForm() = default;
    QuadraticForm(FieldRef field, int N);
    QuadraticForm(FieldRef field, int N, std::vector<Elem> coeffs);

    static std::size_t monomial_count(int N) noexcept {
        const auto n = static_cast<std::size_t>(N) + 1;
        return n * (n + 1) / 2;
    }
    static std::size_t monomial_index(int N, int i, int j) noexcept;
    static std::vector<std::pair<int, int>> monomials(int N);

    const Field& field() const noexcept { return *field_; }
    const FieldRef& field_ref() const noexcept { return field_; }
    int ambient() const noexcept { return n_; }
    int variables() const noexcept { return n_ + 1; }

    /// Coefficient of X_i X_j; argument order does not matter.
    Elem coeff(int i, int j) const noexcept;
    void set(int i, int j, Elem value) noexcept;
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;

    /// F(x) at an arbitrary vector of length N+1 (no normalization).
    Elem operator()(const Vec& x) const noexcept;

    QuadraticForm scaled(Elem s) const;
    QuadraticForm operator+(const QuadraticForm& other) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) noexcept {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    FieldRef field_;
    int n_ = 0;
    std::vector<Elem> coeffs_;
};

enum class QuadricClass { DoubleHyperplane, HyperplanePair, ConjugatePair, Parabolic, Hyperbolic, Elliptic };

std::string_view to_string(QuadricClass c) noexcept;
std::optional<QuadricClass> quadric_class_from_string(std::string_view s) noexcept;
bool is_absolutely_irreducible(QuadricClass c) noexcept;

/// F at the normalized representative of P. Throws DimensionMismatch.
Elem evaluate(const QuadraticForm& F, const Point& P);

/// B_F(u, v) = F(u + v) - F(u) - F(v).
Elem bilinear(const QuadraticForm& F, const Vec& u, const Vec& v);
/// Gram table of the polarization: B(e_i, e_j).
Matrix polarize(const QuadraticForm& F);

/// Vector-space radical of the polarization.
std::vector<Vec> radical_bilinear(const QuadraticForm& F);
/// Vectors of Rad B_F on which F vanishes.
std::vector<Vec> radical_quadratic(const QuadraticForm& F);

int rank(const QuadraticForm& F);
LinearSubspace singular_locus(const QuadraticForm& F);

PointSet point_set(const QuadraticForm& F, const ProjectiveSpace& space);
PointSet point_set(const QuadraticForm& F);

/// Rational point count of a quadric of the given class and rank in P^N(F_q).
Count expected_point_count(QuadricClass c, int rank, int N, Count q);
/// Projective index of a quadric of the given class and rank in P^N.
int expected_projective_index(QuadricClass c, int rank, int N);

struct ClassificationReport {
    QuadricClass klass;
    int rank = 0;
    std::vector<Vec> radical_bilinear;
    std::vector<Vec> radical_quadratic;
    LinearSubspace singular_locus;
    Count point_count = 0;
    int projective_index = 0;
};

ClassificationReport classify(const QuadraticForm& F, const ProjectiveSpace& space);
ClassificationReport classify(const QuadraticForm& F);

/// G(y) = F(sum_k y_k c_k): the form induced on the span of the given columns.
QuadraticForm pullback(const QuadraticForm& F, const std::vector<Vec>& columns);
/// F(T x) for a square transform T.
QuadraticForm substitute(const QuadraticForm& F, const Matrix& T);

/// Section by the hyperplane L = 0, written in coordinates on L = P^{N-1}.
/// With k the last index where L is nonzero, the chart is
/// y -> sum_{i != k} y_i (e_i - (L_i / L_k) e_k).
QuadraticForm restrict_to_hyperplane(const QuadraticForm& F, const Vec& L);
/// Chart vectors used by restrict_to_hyperplane.
std::vector<Vec> hyperplane_chart(const Field& f, const Vec& L);

/// T_P Q: the hyperplane sum x_i dF/dX_i(P) = 0, or all of P^N when P is singular.
LinearSubspace tangent_space(const QuadraticForm& F, const Point& P);

/// Largest dimension of a rational subspace on the quadric, by exhaustive search (N <= 3).
int projective_index_bruteforce(const QuadraticForm& F);

/// Representative form of a class and rank in P^N using the field's binary constants.
QuadraticForm canonical_form(const FieldRef& field, int N, QuadricClass c, int rank);

struct CanonicalizationResult {
    QuadricClass klass;
    int rank = 0;
    /// Columns are the images of the new coordinate vectors.
    Matrix transform;
    Elem scalar;
};

/// Finds T and lambda with F(T x) = lambda * canonical_form(class, rank), by splitting
/// off the radical and peeling hyperbolic planes. Classifies without counting points.
CanonicalizationResult canonicalize(const QuadraticForm& F);

/// Total number of forms q^{C(N+2,2)} and the number up to nonzero scalars.
Count form_count(Count q, int N);
Count projective_form_count(Count q, int N);
/// Form with coefficients given by the base-q digits of index, first monomial most significant.
QuadraticForm form_from_index(const FieldRef& field, int N, Count index);
/// Index-th nonzero form whose first nonzero coefficient is 1.
QuadraticForm projective_form_from_index(const FieldRef& field, int N, Count index);
/// Scales so the first nonzero coefficient is 1; zero stays zero.
QuadraticForm normalize_scalar(const QuadraticForm& F);

}  // namespace qprm
