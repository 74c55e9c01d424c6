#pragma once

// Projective Reed-Muller codes of order 2 and minimal-codeword testers.

#include "qprm/projspace.hpp"
#include "qprm/quadric.hpp"

#include <algorithm>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qprm {

struct Codeword {
    Vec values;
    PointSet support;
    std::size_t weight = 0;
};

enum class MinimalityMethod { Characterization, Interpolation, Exhaustive };

std::string_view to_string(MinimalityMethod m) noexcept;
/// Accepts "char", "interp", "exhaustive" and the full enumerator names.
std::optional<MinimalityMethod> minimality_method_from_string(std::string_view s) noexcept;

struct MinimalityVerdict {
    bool minimal = false;
    /// A form whose zero set strictly contains the tested one; present iff not minimal
    /// and the method produces witnesses.
    std::optional<QuadraticForm> witness;
    MinimalityMethod method = MinimalityMethod::Characterization;
};

/// PRM_q(2, N): evaluations of the monomials X_i X_j (i <= j) at the canonical point list.
class PrmCode {
public:
    PrmCode(FieldRef field, int N);

    const Field& field() const noexcept { return space_.field(); }
    const FieldRef& field_ref() const noexcept { return space_.field_ref(); }
    int ambient() const noexcept { return space_.dimension(); }
    const ProjectiveSpace& space() const noexcept { return space_; }
    std::size_t length() const noexcept { return space_.size(); }
    std::size_t dimension() const noexcept { return monomials_.size(); }
    const std::vector<std::pair<int, int>>& monomials() const noexcept { return monomials_; }
    /// dimension() x length() table; row m holds X_i X_j evaluated at every point.
    const Matrix& generator() const noexcept { return generator_; }

    Vec evaluate(const QuadraticForm& F) const;
    Codeword encode(const QuadraticForm& F) const;
    Codeword codeword_from_values(Vec values) const;
    /// Form whose coefficient vector is the given message.
    QuadraticForm form(const Vec& message) const;

private:
    ProjectiveSpace space_;
    std::vector<std::pair<int, int>> monomials_;
    Matrix generator_;
};

PrmCode build_code(FieldRef field, int N);

/// Basis of the forms vanishing at every point of S.
std::vector<QuadraticForm> interpolation_space(const PrmCode& code, const PointSet& S);

/// Forms of a linear system up to scalar: every nonzero combination of the basis
/// whose first nonzero coefficient is 1, in lexicographic order of coefficients.
template <typename Visit>
void for_each_projective_member(const Field& f, std::size_t basis_size, Visit&& visit) {
    const auto q = static_cast<Count>(f.order());
    std::vector<Elem> c(basis_size);
    for (std::size_t lead = basis_size; lead-- > 0;) {
        const Count total = ipow(q, static_cast<int>(basis_size - 1 - lead));
        for (Count t = 0; t < total; ++t) {
            std::fill(c.begin(), c.end(), Field::zero());
            c[lead] = Field::one();
            Count rest = t;
            for (std::size_t pos = basis_size; pos-- > lead + 1;) {
                c[pos] = Elem{static_cast<std::uint16_t>(rest % q)};
                rest /= q;
            }
            if (!visit(static_cast<const std::vector<Elem>&>(c))) return;
        }
    }
}

bool characterization_says_minimal(QuadricClass c, int rank, int q) noexcept;

MinimalityVerdict is_minimal_characterization(const QuadraticForm& F, const ProjectiveSpace& space);
MinimalityVerdict is_minimal_characterization(const QuadraticForm& F);
/// The witness is the first member, in enumeration order, among those whose zero set
/// is strictly larger and of least size.
MinimalityVerdict is_minimal_interpolation(const PrmCode& code, const QuadraticForm& F);

/// Support table of every codeword, indexed like form_from_index.
class CodewordScanner {
public:
    static constexpr std::size_t kMaxDimension = 15;
    static constexpr Count kMaxCodewords = 20'000'000;

    explicit CodewordScanner(const PrmCode& code);

    Count size() const noexcept { return count_; }
    MinimalityVerdict test(const Codeword& c) const;

private:
    const PrmCode* code_;
    Count count_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> supports_;
    std::vector<std::uint32_t> weights_;
};

MinimalityVerdict is_minimal_exhaustive(const PrmCode& code, const Codeword& c);

}  // namespace qprm
