#include "qprm/census.hpp"

#include "qprm/error.hpp"

#include <algorithm>

namespace qprm {

Count orbit_count(QuadricClass c, int r, Count q) {
    if (!is_absolutely_irreducible(c) && c != QuadricClass::HyperplanePair) {
        throw Error(ErrorKind::ParityMismatch, "orbit counts exist for parabolic, hyperbolic and elliptic classes");
    }
    const bool odd = r % 2 == 1;
    if (r < 2 || (c == QuadricClass::Parabolic) != odd) {
        throw Error(ErrorKind::ParityMismatch,
                    std::string(to_string(c)) + " has no smooth model of rank " + std::to_string(r));
    }
    if (c == QuadricClass::HyperplanePair && r != 2) {
        throw Error(ErrorKind::ParityMismatch, "hyperplane pairs are smooth only in P^1");
    }
    if (c == QuadricClass::Parabolic) {
        Count n = ipow(q, (r - 1) * (r + 1) / 4);
        for (int i = 1; i <= (r - 1) / 2; ++i) n = checked_mul(n, ipow(q, 2 * i + 1) - 1);
        return n;
    }
    const Count half = ipow(q, r / 2);
    Count n = checked_mul(ipow(q, r * r / 4), c == QuadricClass::Elliptic ? half - 1 : half + 1);
    for (int i = 1; i <= (r - 2) / 2; ++i) n = checked_mul(n, ipow(q, 2 * i + 1) - 1);
    return n / 2;
}

bool MinimalCountTable::columns_agree() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](const MinimalCountRow& r) {
        return r.closed.has_value() && r.brute.has_value() && *r.closed == *r.brute;
    });
}

std::map<Count, Count> MinimalCountTable::closed_map() const {
    std::map<Count, Count> out;
    for (const auto& r : rows) {
        if (r.closed && *r.closed != 0) out[r.weight] = *r.closed;
    }
    return out;
}

std::map<Count, Count> MinimalCountTable::brute_map() const {
    std::map<Count, Count> out;
    for (const auto& r : rows) {
        if (r.brute && *r.brute != 0) out[r.weight] = *r.brute;
    }
    return out;
}

namespace {

MinimalCountTable table_from_maps(int q, int N, const std::map<Count, Count>* closed, const std::map<Count, Count>* brute) {
    MinimalCountTable t;
    t.q = q;
    t.N = N;
    t.delta = q <= 3 ? 2 : 0;
    t.epsilon = q == 2 ? 2 : 0;
    std::map<Count, MinimalCountRow> rows;
    if (closed) {
        for (const auto& [w, n] : *closed) {
            rows[w].weight = w;
            rows[w].closed = n;
        }
    }
    if (brute) {
        for (const auto& [w, n] : *brute) {
            rows[w].weight = w;
            rows[w].brute = n;
        }
    }
    // A weight present in only one column is a zero in the other.
    for (auto& [w, row] : rows) {
        if (closed && !row.closed) row.closed = 0;
        if (brute && !row.brute) row.brute = 0;
        t.rows.push_back(row);
    }
    return t;
}

std::map<Count, Count> closed_form_counts(int qi, int N) {
    if (N < 1) throw Error(ErrorKind::OutOfRange, "minimal-codeword counts need N >= 1");
    const auto q = static_cast<Count>(qi);
    const int delta = qi <= 3 ? 2 : 0;
    const int epsilon = qi == 2 ? 2 : 0;
    const Count qN = ipow(q, N);
    std::map<Count, Count> out;
    auto put = [&](Count w, Count n) {
        if (n != 0) out[w] = checked_add(out[w], n);
    };
    // (i) pairs of distinct rational hyperplanes
    put(qN - ipow(q, N - 1), checked_mul(checked_mul(q - 1, gaussian_binomial(N + 1, 2, q)), q * (q + 1) / 2));
    // (ii) parabolic of every admissible odd rank share one weight
    Count parabolic = 0;
    for (int r = 3 + delta; r <= N + 1; r += 2) {
        parabolic = checked_add(parabolic, checked_mul(gaussian_binomial(N + 1, r, q), orbit_count(QuadricClass::Parabolic, r, q)));
    }
    put(qN, checked_mul(q - 1, parabolic));
    // (iii) hyperbolic, (iv) elliptic
    for (int r = 4; r <= N + 1; r += 2) {
        put(qN - ipow(q, N - r / 2),
            checked_mul(checked_mul(q - 1, gaussian_binomial(N + 1, r, q)), orbit_count(QuadricClass::Hyperbolic, r, q)));
    }
    for (int r = 4 + epsilon; r <= N + 1; r += 2) {
        put(qN + ipow(q, N - r / 2),
            checked_mul(checked_mul(q - 1, gaussian_binomial(N + 1, r, q)), orbit_count(QuadricClass::Elliptic, r, q)));
    }
    return out;
}

void check_budget(Count forms, const ScanOptions& options) {
    if (forms > options.budget) {
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(forms) + " forms exceed the budget of " + std::to_string(options.budget));
    }
}

std::size_t zero_count(const Vec& values) {
    return static_cast<std::size_t>(std::count_if(values.begin(), values.end(), [](Elem x) { return x.is_zero(); }));
}

}  // namespace

MinimalCountTable minimal_count_closed_form(int q, int N) {
    const auto closed = closed_form_counts(q, N);
    return table_from_maps(q, N, &closed, nullptr);
}

MinimalCountTable brute_force_census(const FieldRef& field, int N, MinimalityMethod method, const ScanOptions& options) {
    const auto q = static_cast<Count>(field->order());
    check_budget(form_count(q, N), options);
    const PrmCode code(field, N);
    std::optional<CodewordScanner> scanner;
    if (method == MinimalityMethod::Exhaustive) scanner.emplace(code);

    const Count total = projective_form_count(q, N);
    const unsigned workers = std::max(1U, options.workers);
    std::vector<std::map<Count, Count>> tallies(workers);
    parallel_blocks(total, workers, [&](Count begin, Count end, unsigned w) {
        auto& tally = tallies[w];
        for (Count idx = begin; idx < end; ++idx) {
            const QuadraticForm F = projective_form_from_index(field, N, idx);
            bool minimal = false;
            std::size_t weight = 0;
            switch (method) {
                case MinimalityMethod::Characterization: {
                    const auto rep = classify(F, code.space());
                    minimal = characterization_says_minimal(rep.klass, rep.rank, static_cast<int>(q));
                    weight = code.length() - static_cast<std::size_t>(rep.point_count);
                    break;
                }
                case MinimalityMethod::Interpolation: {
                    minimal = is_minimal_interpolation(code, F).minimal;
                    weight = code.length() - point_set(F, code.space()).size();
                    break;
                }
                case MinimalityMethod::Exhaustive: {
                    const auto c = code.encode(F);
                    minimal = scanner->test(c).minimal;
                    weight = c.weight;
                    break;
                }
            }
            if (minimal) tally[weight] += q - 1;
        }
    });
    std::map<Count, Count> brute;
    for (const auto& t : tallies) {
        for (const auto& [w, n] : t) brute[w] += n;
    }
    const auto closed = closed_form_counts(static_cast<int>(q), N);
    return table_from_maps(static_cast<int>(q), N, &closed, &brute);
}

// ---------------------------------------------------------------------------
// Containment

std::string_view to_string(ViolationShape s) noexcept {
    switch (s) {
        case ViolationShape::EllipticInHyperbolic: return "elliptic-in-hyperbolic";
        case ViolationShape::RankThreeInHyperplanePair: return "rank3-in-hyperplane-pair";
        case ViolationShape::EllipticInHyperplanePair: return "elliptic-in-hyperplane-pair";
        case ViolationShape::Inadmissible: return "inadmissible";
    }
    return "unknown";
}

ViolationShape violation_shape(int q, const ClassificationReport& inner, const ClassificationReport& outer) noexcept {
    const bool inner_elliptic4 = inner.klass == QuadricClass::Elliptic && inner.rank == 4;
    if (q == 2 && inner_elliptic4 && outer.klass == QuadricClass::Hyperbolic && outer.rank == 4) {
        return ViolationShape::EllipticInHyperbolic;
    }
    if (q <= 3 && inner.rank == 3 && outer.klass == QuadricClass::HyperplanePair) {
        return ViolationShape::RankThreeInHyperplanePair;
    }
    if (q == 2 && inner_elliptic4 && outer.klass == QuadricClass::HyperplanePair) {
        return ViolationShape::EllipticInHyperplanePair;
    }
    return ViolationShape::Inadmissible;
}

std::size_t ContainmentReport::count(ViolationShape s) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [s](const ContainmentViolation& v) { return v.shape == s; }));
}

ContainmentReport verify_containment(const FieldRef& field, int N, const ScanOptions& options) {
    const auto q = static_cast<Count>(field->order());
    check_budget(form_count(q, N), options);
    const PrmCode code(field, N);
    const Field& f = *field;
    const Count total = projective_form_count(q, N);
    const unsigned workers = std::max(1U, options.workers);
    std::vector<std::vector<ContainmentViolation>> found(workers);

    parallel_blocks(total, workers, [&](Count begin, Count end, unsigned w) {
        Vec combo(code.length());
        for (Count idx = begin; idx < end; ++idx) {
            const QuadraticForm F = projective_form_from_index(field, N, idx);
            const auto rep = classify(F, code.space());
            if (rep.klass == QuadricClass::DoubleHyperplane || rep.klass == QuadricClass::ConjugatePair) continue;
            const auto zeros = point_set(F, code.space());
            const auto basis = interpolation_space(code, zeros);
            if (basis.size() < 2) continue;
            std::vector<Vec> values;
            for (const auto& G : basis) values.push_back(code.evaluate(G));
            for_each_projective_member(f, basis.size(), [&](const std::vector<Elem>& c) {
                std::fill(combo.begin(), combo.end(), Field::zero());
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (c[i].is_zero()) continue;
                    for (std::size_t k = 0; k < combo.size(); ++k) combo[k] = f.add(combo[k], f.mul(c[i], values[i][k]));
                }
                if (zero_count(combo) <= zeros.size()) return true;
                QuadraticForm outer(field, N);
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (!c[i].is_zero()) outer = outer + basis[i].scaled(c[i]);
                }
                outer = normalize_scalar(outer);
                auto outer_rep = classify(outer, code.space());
                const auto shape = violation_shape(static_cast<int>(q), rep, outer_rep);
                found[w].push_back({F, std::move(outer), rep, std::move(outer_rep), shape});
                return true;
            });
        }
    });

    ContainmentReport report;
    report.q = static_cast<int>(q);
    report.N = N;
    report.forms_scanned = total;
    for (auto& part : found) {
        for (auto& v : part) report.violations.push_back(std::move(v));
    }
    return report;
}

ContainmentReport containment_all_pairs(const FieldRef& field, int N, const ScanOptions& options) {
    const auto q = static_cast<Count>(field->order());
    const Count total = projective_form_count(q, N);
    check_budget(checked_mul(total, total), options);
    const ProjectiveSpace space(field, N);
    std::vector<QuadraticForm> forms;
    std::vector<PointSet> zeros;
    std::vector<ClassificationReport> reps;
    for (Count idx = 0; idx < total; ++idx) {
        forms.push_back(projective_form_from_index(field, N, idx));
        zeros.push_back(point_set(forms.back(), space));
        reps.push_back(classify(forms.back(), space));
    }
    ContainmentReport report;
    report.q = static_cast<int>(q);
    report.N = N;
    report.forms_scanned = total;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (reps[i].klass == QuadricClass::DoubleHyperplane || reps[i].klass == QuadricClass::ConjugatePair) continue;
        for (std::size_t j = 0; j < forms.size(); ++j) {
            if (zeros[j].size() > zeros[i].size() && zeros[i].is_subset_of(zeros[j])) {
                report.violations.push_back(
                    {forms[i], forms[j], reps[i], reps[j], violation_shape(static_cast<int>(q), reps[i], reps[j])});
            }
        }
    }
    return report;
}

ExceptionCheck check_exception_example() {
    const auto f2 = field_create(2, 1);
    const Elem one = Field::one();
    QuadraticForm inner(f2, 3);
    inner.set(0, 0, one);
    inner.set(0, 1, one);
    inner.set(1, 1, one);
    inner.set(2, 3, one);
    // X0(X0 + X3) + X1(X1 + X2)
    QuadraticForm outer(f2, 3);
    outer.set(0, 0, one);
    outer.set(0, 3, one);
    outer.set(1, 1, one);
    outer.set(1, 2, one);

    const ProjectiveSpace space(f2, 3);
    ExceptionCheck check;
    check.inner = classify(inner, space);
    check.outer = classify(outer, space);
    const auto zi = point_set(inner, space);
    const auto zo = point_set(outer, space);
    check.strictly_contained = zi.is_subset_of(zo) && zi.size() < zo.size();
    check.holds = check.strictly_contained && check.inner.klass == QuadricClass::Elliptic && check.inner.rank == 4 &&
                  check.outer.klass == QuadricClass::Hyperbolic && check.outer.rank == 4 && zi.size() == 5 &&
                  zo.size() == 9;
    return check;
}

bool verify_exception_example() { return check_exception_example().holds; }

// ---------------------------------------------------------------------------
// Survey

FormSurvey survey_forms(const FieldRef& field, int N, const ScanOptions& options) {
    const auto q = static_cast<Count>(field->order());
    const Count total = form_count(q, N);
    check_budget(total, options);
    const ProjectiveSpace space(field, N);
    const unsigned workers = std::max(1U, options.workers);
    std::vector<FormSurvey> parts(workers);
    const Count bound = expected_point_count(QuadricClass::HyperplanePair, 2, N, q);

    parallel_blocks(total - 1, workers, [&](Count begin, Count end, unsigned w) {
        FormSurvey& s = parts[w];
        for (Count idx = begin + 1; idx < end + 1; ++idx) {
            const QuadraticForm F = form_from_index(field, N, idx);
            ++s.forms;
            const auto canon = canonicalize(F);
            const Count count = point_set(F, space).size();
            bool ok = expected_point_count(canon.klass, canon.rank, N, q) == count;
            try {
                const auto rep = classify(F, space);
                if (rep.klass != canon.klass || rep.rank != canon.rank) {
                    ++s.class_disagreements;
                    ok = false;
                }
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::InternalInconsistency) throw;
                ++s.class_disagreements;
                ok = false;
            }
            if (!ok) {
                ++s.count_law_failures;
                if (!s.first_failure) s.first_failure = F;
            }
            s.max_points = std::max(s.max_points, count);
            const bool pair = canon.klass == QuadricClass::HyperplanePair;
            if (count == bound && !pair) s.max_only_hyperplane_pairs = false;
            if (pair && count != bound) s.hyperplane_pairs_attain_max = false;
            ++s.histogram[{canon.klass, canon.rank}];
        }
    });

    FormSurvey out;
    out.q = static_cast<int>(q);
    out.N = N;
    out.serre_bound = bound;
    for (auto& s : parts) {
        out.forms += s.forms;
        out.count_law_failures += s.count_law_failures;
        out.class_disagreements += s.class_disagreements;
        if (!out.first_failure && s.first_failure) out.first_failure = s.first_failure;
        out.max_points = std::max(out.max_points, s.max_points);
        out.max_only_hyperplane_pairs = out.max_only_hyperplane_pairs && s.max_only_hyperplane_pairs;
        out.hyperplane_pairs_attain_max = out.hyperplane_pairs_attain_max && s.hyperplane_pairs_attain_max;
        for (const auto& [key, n] : s.histogram) out.histogram[key] += n;
    }
    // Each quadric is cut out by exactly q - 1 forms.
    for (auto& [key, n] : out.histogram) n /= q - 1;
    return out;
}

ConicSystem conic_linear_system(const PrmCode& plane_code, const QuadraticForm& conic) {
    const Field& f = plane_code.field();
    const auto zeros = point_set(conic, plane_code.space());
    const auto basis = interpolation_space(plane_code, zeros);
    ConicSystem out;
    out.dimension = basis.size();
    for_each_projective_member(f, basis.size(), [&](const std::vector<Elem>& c) {
        QuadraticForm G(plane_code.field_ref(), plane_code.ambient());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_zero()) G = G + basis[i].scaled(c[i]);
        }
        const auto rep = classify(G, plane_code.space());
        ++out.members;
        if (rep.klass == QuadricClass::HyperplanePair || rep.klass == QuadricClass::DoubleHyperplane) {
            ++out.reducible;
        } else {
            ++out.irreducible;
        }
        return true;
    });
    return out;
}

}  // namespace qprm
