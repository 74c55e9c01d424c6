#include "qprm/prm.hpp"

#include "qprm/error.hpp"

namespace qprm {

std::string_view to_string(MinimalityMethod m) noexcept {
    switch (m) {
        case MinimalityMethod::Characterization: return "char";
        case MinimalityMethod::Interpolation: return "interp";
        case MinimalityMethod::Exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::optional<MinimalityMethod> minimality_method_from_string(std::string_view s) noexcept {
    if (s == "char" || s == "characterization") return MinimalityMethod::Characterization;
    if (s == "interp" || s == "interpolation") return MinimalityMethod::Interpolation;
    if (s == "exhaustive") return MinimalityMethod::Exhaustive;
    return std::nullopt;
}

PrmCode::PrmCode(FieldRef field, int N) : space_(std::move(field), N), monomials_(QuadraticForm::monomials(N)) {
    if (N < 1) throw Error(ErrorKind::OutOfRange, "PRM codes need N >= 1");
    const Field& f = space_.field();
    generator_ = Matrix(monomials_.size(), space_.size());
    for (std::size_t m = 0; m < monomials_.size(); ++m) {
        const auto [i, j] = monomials_[m];
        for (std::size_t k = 0; k < space_.size(); ++k) {
            const auto& P = space_.point(k);
            generator_(m, k) = f.mul(P[static_cast<std::size_t>(i)], P[static_cast<std::size_t>(j)]);
        }
    }
    if (qprm::rank(f, generator_) != monomials_.size()) {
        throw Error(ErrorKind::InternalInconsistency, "evaluation map is not injective");
    }
}

PrmCode build_code(FieldRef field, int N) { return PrmCode(std::move(field), N); }

Vec PrmCode::evaluate(const QuadraticForm& F) const {
    if (F.ambient() != ambient()) throw Error(ErrorKind::DimensionMismatch, "form and code ambients differ");
    const Field& f = field();
    Vec values(length(), Field::zero());
    for (std::size_t m = 0; m < dimension(); ++m) {
        const Elem a = F.coeffs()[m];
        if (a.is_zero()) continue;
        for (std::size_t k = 0; k < length(); ++k) values[k] = f.add(values[k], f.mul(a, generator_(m, k)));
    }
    return values;
}

Codeword PrmCode::codeword_from_values(Vec values) const {
    Codeword c;
    c.support = PointSet(length());
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!values[k].is_zero()) c.support.insert(k);
    }
    c.weight = c.support.size();
    c.values = std::move(values);
    return c;
}

Codeword PrmCode::encode(const QuadraticForm& F) const { return codeword_from_values(evaluate(F)); }

QuadraticForm PrmCode::form(const Vec& message) const { return QuadraticForm(field_ref(), ambient(), message); }

std::vector<QuadraticForm> interpolation_space(const PrmCode& code, const PointSet& S) {
    const auto dim = code.dimension();
    Matrix constraints(0, dim);
    for (auto k : S.indices()) {
        Vec row(dim);
        for (std::size_t m = 0; m < dim; ++m) row[m] = code.generator()(m, k);
        constraints.append_row(row);
    }
    std::vector<QuadraticForm> basis;
    for (auto& v : kernel(code.field(), constraints)) basis.push_back(code.form(v));
    return basis;
}

bool characterization_says_minimal(QuadricClass c, int rank, int q) noexcept {
    if (c == QuadricClass::HyperplanePair) return true;
    if (!is_absolutely_irreducible(c)) return false;
    if (rank == 3 && q <= 3) return false;
    if (c == QuadricClass::Elliptic && rank == 4 && q == 2) return false;
    return true;
}

MinimalityVerdict is_minimal_characterization(const QuadraticForm& F, const ProjectiveSpace& space) {
    const auto rep = classify(F, space);
    return {characterization_says_minimal(rep.klass, rep.rank, F.field().order()), std::nullopt,
            MinimalityMethod::Characterization};
}

MinimalityVerdict is_minimal_characterization(const QuadraticForm& F) {
    const auto rep = classify(F);
    return {characterization_says_minimal(rep.klass, rep.rank, F.field().order()), std::nullopt,
            MinimalityMethod::Characterization};
}

MinimalityVerdict is_minimal_interpolation(const PrmCode& code, const QuadraticForm& F) {
    if (F.is_zero()) throw Error(ErrorKind::ZeroForm, "minimality of the zero form");
    const Field& f = code.field();
    const auto zeros = point_set(F, code.space());
    const std::size_t target = zeros.size();
    const auto basis = interpolation_space(code, zeros);
    std::vector<Vec> values;
    values.reserve(basis.size());
    for (const auto& G : basis) values.push_back(code.evaluate(G));

    MinimalityVerdict verdict{true, std::nullopt, MinimalityMethod::Interpolation};
    Vec combo(code.length());
    std::size_t best = code.length() + 1;
    std::vector<Elem> best_c;
    for_each_projective_member(f, basis.size(), [&](const std::vector<Elem>& c) {
        std::fill(combo.begin(), combo.end(), Field::zero());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t k = 0; k < combo.size(); ++k) combo[k] = f.add(combo[k], f.mul(c[i], values[i][k]));
        }
        std::size_t z = 0;
        for (Elem x : combo) z += x.is_zero() ? 1 : 0;
        if (z > target && z < best) {
            best = z;
            best_c = c;
        }
        return best != target + 1;
    });
    if (!best_c.empty()) {
        QuadraticForm w(code.field_ref(), code.ambient());
        for (std::size_t i = 0; i < best_c.size(); ++i) {
            if (!best_c[i].is_zero()) w = w + basis[i].scaled(best_c[i]);
        }
        verdict.minimal = false;
        verdict.witness = std::move(w);
    }
    return verdict;
}

CodewordScanner::CodewordScanner(const PrmCode& code) : code_(&code) {
    const auto q = static_cast<Count>(code.field().order());
    if (code.dimension() > kMaxDimension) throw Error(ErrorKind::CodeTooLarge, "code dimension above 15");
    count_ = ipow(q, static_cast<int>(code.dimension()));
    if (count_ > kMaxCodewords) throw Error(ErrorKind::CodeTooLarge, "more than 2e7 codewords");
    words_ = (code.length() + 63) / 64;
    supports_.assign(static_cast<std::size_t>(count_) * words_, 0);
    weights_.assign(static_cast<std::size_t>(count_), 0);

    // Walk the message odometer (first monomial most significant) and update values
    // incrementally: bumping digit m adds row m, wrapping resets it to zero.
    const Field& f = code.field();
    const auto dim = code.dimension();
    const auto len = code.length();
    Vec digits(dim, Field::zero());
    Vec values(len, Field::zero());
    for (Count idx = 0; idx < count_; ++idx) {
        auto* words = &supports_[static_cast<std::size_t>(idx) * words_];
        std::uint32_t w = 0;
        for (std::size_t k = 0; k < len; ++k) {
            if (!values[k].is_zero()) {
                words[k >> 6] |= std::uint64_t{1} << (k & 63);
                ++w;
            }
        }
        weights_[static_cast<std::size_t>(idx)] = w;
        for (std::size_t pos = dim; pos-- > 0;) {
            const Elem old = digits[pos];
            const Elem next = old.v + 1 < f.order() ? Elem{static_cast<std::uint16_t>(old.v + 1)} : Field::zero();
            digits[pos] = next;
            const Elem delta = f.sub(next, old);
            for (std::size_t k = 0; k < len; ++k) {
                values[k] = f.add(values[k], f.mul(delta, code.generator()(pos, k)));
            }
            if (!next.is_zero()) break;
        }
    }
}

MinimalityVerdict CodewordScanner::test(const Codeword& c) const {
    if (c.weight == 0) throw Error(ErrorKind::ZeroCodeword, "minimality of the zero codeword");
    const auto& mine = c.support.words();
    MinimalityVerdict verdict{true, std::nullopt, MinimalityMethod::Exhaustive};
    for (Count idx = 1; idx < count_; ++idx) {
        const auto w = weights_[static_cast<std::size_t>(idx)];
        if (w == 0 || w >= c.weight) continue;
        const auto* other = &supports_[static_cast<std::size_t>(idx) * words_];
        bool inside = true;
        for (std::size_t k = 0; k < words_; ++k) {
            if ((other[k] & ~mine[k]) != 0) {
                inside = false;
                break;
            }
        }
        if (inside) {
            verdict.minimal = false;
            verdict.witness = form_from_index(code_->field_ref(), code_->ambient(), idx);
            break;
        }
    }
    return verdict;
}

MinimalityVerdict is_minimal_exhaustive(const PrmCode& code, const Codeword& c) {
    if (c.weight == 0) throw Error(ErrorKind::ZeroCodeword, "minimality of the zero codeword");
    return CodewordScanner(code).test(c);
}

}  // namespace qprm
