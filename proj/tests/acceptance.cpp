// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "oracles.hpp"

#include "qprm/census.hpp"
#include "qprm/form_syntax.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

using namespace qprm;

namespace {

const unsigned kWorkers = std::max(1U, std::thread::hardware_concurrency());

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::string label(int q, int N) { return "(" + std::to_string(q) + "," + std::to_string(N) + ")"; }

std::map<std::pair<int, int>, FormSurvey>& surveys() {
    static std::map<std::pair<int, int>, FormSurvey> cache;
    if (cache.empty()) {
        for (auto [q, N] : oracle::grid()) cache[{q, N}] = survey_forms(field_from_order(q), N, {kWorkers});
    }
    return cache;
}

Outcome point_count_law() {
    Outcome o;
    Count forms = 0;
    for (const auto& [key, s] : surveys()) {
        forms += s.forms;
        o.require(s.point_count_law_holds(),
                  label(key.first, key.second) + " " + std::to_string(s.count_law_failures) + " failures" +
                      (s.first_failure ? ", first " + render_form(*s.first_failure) : ""));
    }
    o.detail << " " << forms << " nonzero forms over 7 grid points";
    return o;
}

Outcome serre_bound() {
    Outcome o;
    for (const auto& [key, s] : surveys()) {
        const auto [q, N] = key;
        const Count bound = 2 * static_cast<Count>(oracle::ipow(q, N - 1)) + static_cast<Count>(oracle::pN(q, N - 2));
        o.require(s.serre_bound == bound && s.serre_holds(), label(q, N));
        o.detail << " " << label(q, N) << "max=" << s.max_points;
    }
    return o;
}

Outcome census() {
    Outcome o;
    using Expect = std::map<Count, Count>;
    struct Case {
        int q, N;
        MinimalityMethod method;
        std::optional<Expect> expected;
    };
    const std::vector<Case> cases{
        {2, 3, MinimalityMethod::Exhaustive, Expect{{4, 105}, {6, 280}}},
        {3, 2, MinimalityMethod::Exhaustive, Expect{{6, 156}}},
        {4, 2, MinimalityMethod::Exhaustive, Expect{{12, 630}, {16, 3024}}},
        {2, 2, MinimalityMethod::Exhaustive, Expect{{2, 21}}},
        {2, 4, MinimalityMethod::Interpolation, std::nullopt},
    };
    for (const auto& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto t = brute_force_census(field_from_order(c.q), c.N, c.method, {kWorkers});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(t.columns_agree(), label(c.q, c.N) + " closed/brute mismatch");
        if (c.expected) o.require(t.brute_map() == *c.expected, label(c.q, c.N) + " differs from stated table");
        o.detail << " " << label(c.q, c.N) << "{";
        bool first = true;
        for (const auto& [w, n] : t.brute_map()) {
            o.detail << (first ? "" : ",") << w << ":" << n;
            first = false;
        }
        o.detail << "}";
        if (c.q == 2 && c.N == 4) {
            o.detail << " in " << std::fixed << std::setprecision(1) << secs << "s";
            o.require(secs < 60.0, "(2,4) interpolation census over one minute");
        }
    }
    return o;
}

Outcome tester_agreement() {
    Outcome o;
    for (auto [q, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto f = field_from_order(q);
        const auto code = build_code(f, N);
        const CodewordScanner scanner(code);
        Count words = 0, disagreements = 0;
        for (Count idx = 1; idx < form_count(static_cast<Count>(q), N); ++idx) {
            const auto F = form_from_index(f, N, idx);
            const bool a = is_minimal_characterization(F, code.space()).minimal;
            const bool b = is_minimal_interpolation(code, F).minimal;
            const bool c = scanner.test(code.encode(F)).minimal;
            ++words;
            disagreements += (a == b && b == c) ? 0 : 1;
        }
        o.require(disagreements == 0, label(q, N) + " " + std::to_string(disagreements) + " disagreements");
        o.detail << " " << label(q, N) << ":" << words << " codewords";
    }
    return o;
}

Outcome containment() {
    Outcome o;
    for (auto [q, N] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto r = verify_containment(field_from_order(q), N, {kWorkers});
        o.require(r.admissible(), label(q, N) + " inadmissible violation");
        if (q >= 4) o.require(r.violations.empty(), label(q, N) + " expected no violations");
        if (q == 3) {
            o.require(r.count(ViolationShape::RankThreeInHyperplanePair) == r.violations.size(),
                      label(q, N) + " expected only rank-3 shapes");
        }
        o.detail << " " << label(q, N) << ":" << r.violations.size();
    }
    const auto all = containment_all_pairs(field_from_order(2), 3);
    const auto lin = verify_containment(field_from_order(2), 3, {kWorkers});
    o.require(all.violations.size() == lin.violations.size(), "(2,3) all-pairs cross-check");
    const auto e = check_exception_example();
    o.require(e.holds, "exception pair");
    o.detail << " exception " << e.inner.point_count << "<" << e.outer.point_count;
    return o;
}

Outcome orbit_counts() {
    Outcome o;
    o.require(orbit_count(QuadricClass::Parabolic, 3, 2) == 28, "28 smooth conics over GF(2)");
    for (int q : {2, 3}) {
        const auto& s2 = surveys().at({q, 2});
        const auto& s3 = surveys().at({q, 3});
        const auto Q = static_cast<Count>(q);
        const Count p3 = s2.histogram.at({QuadricClass::Parabolic, 3});
        const Count h4 = s3.histogram.at({QuadricClass::Hyperbolic, 4});
        const Count e4 = s3.histogram.at({QuadricClass::Elliptic, 4});
        o.require(p3 == orbit_count(QuadricClass::Parabolic, 3, Q), "P3 q=" + std::to_string(q));
        o.require(h4 == orbit_count(QuadricClass::Hyperbolic, 4, Q), "H4 q=" + std::to_string(q));
        o.require(e4 == orbit_count(QuadricClass::Elliptic, 4, Q), "E4 q=" + std::to_string(q));
        o.detail << " q=" << q << ":P3=" << p3 << ",H4=" << h4 << ",E4=" << e4;
    }
    return o;
}

Outcome pencils() {
    Outcome o;
    for (int q : {2, 3}) {
        const auto f = field_from_order(q);
        const auto s = conic_linear_system(build_code(f, 2), canonical_form(f, 2, QuadricClass::Parabolic, 3));
        if (q == 3) o.require(s.members == 4 && s.reducible == 3 && s.irreducible == 1, "q=3 pencil");
        if (q == 2) o.require(s.members == 7 && s.reducible == 6 && s.irreducible == 1, "q=2 net");
        o.detail << " q=" << q << ":" << s.reducible << "+" << s.irreducible;
    }
    return o;
}

Matrix random_invertible(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, f.order() - 1);
    for (;;) {
        Matrix T(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < T.rows(); ++i) {
            for (std::size_t j = 0; j < T.cols(); ++j) T(i, j) = f.element(pick(rng));
        }
        if (!determinant(f, T).is_zero()) return T;
    }
}

Vec random_nonzero(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, f.order() - 1);
    for (;;) {
        Vec v(static_cast<std::size_t>(n));
        for (auto& x : v) x = f.element(pick(rng));
        if (!is_zero(v)) return v;
    }
}

bool canonical_identity(const QuadraticForm& F) {
    const auto res = canonicalize(F);
    return !res.scalar.is_zero() && !determinant(F.field(), res.transform).is_zero() &&
           substitute(F, res.transform) == canonical_form(F.field_ref(), F.ambient(), res.klass, res.rank).scaled(res.scalar);
}

Outcome property_suites() {
    Outcome o;
    std::mt19937_64 rng(20240601);
    Count invariance = 0, sandwich = 0, preserved = 0, canon = 0, index = 0;
    for (auto [q, N] : oracle::grid()) {
        const auto f = field_from_order(q);
        const ProjectiveSpace space(f, N);
        bool ok = true;
        for (int t = 0; t < 500; ++t) {
            const auto F = oracle::random_form(f, N, rng);
            const auto G = substitute(F, random_invertible(*f, N + 1, rng));
            const auto a = classify(F, space), b = classify(G, space);
            ok = ok && a.rank == b.rank && a.klass == b.klass;
            ++invariance;
        }
        o.require(ok, label(q, N) + " substitution invariance");

        ok = true;
        bool ok20 = true;
        for (int t = 0; t < 1000; ++t) {
            const auto F = oracle::random_form(f, N, rng);
            const auto S = restrict_to_hyperplane(F, random_nonzero(*f, N + 1, rng));
            const int r = rank(F), rs = S.is_zero() ? 0 : rank(S);
            ok = ok && rs <= r && rs >= r - 2;
            ++sandwich;
        }
        // preservation needs a nonempty singular locus and a hyperplane missing part of it
        int tested = 0;
        while (tested < 1000) {
            const auto F = oracle::random_form(f, N, rng);
            const auto sing = singular_locus(F);
            if (sing.dimension() < 0) continue;
            const auto L = random_nonzero(*f, N + 1, rng);
            if (std::all_of(sing.basis.begin(), sing.basis.end(), [&](const Vec& v) { return dot(*f, L, v).is_zero(); })) continue;
            const auto S = restrict_to_hyperplane(F, L);
            ok20 = ok20 && !S.is_zero() && rank(S) == rank(F);
            ++tested;
            ++preserved;
        }
        o.require(ok, label(q, N) + " section rank bounds");
        o.require(ok20, label(q, N) + " section rank preservation");

        const bool exhaustive = (q == 2 && (N == 3 || N == 4)) || (q == 3 && N == 2);
        ok = true;
        if (exhaustive) {
            for (Count idx = 1; idx < form_count(static_cast<Count>(q), N); ++idx) {
                ok = ok && canonical_identity(form_from_index(f, N, idx));
                ++canon;
            }
        } else {
            for (int t = 0; t < 10000; ++t) {
                ok = ok && canonical_identity(oracle::random_form(f, N, rng));
                ++canon;
            }
        }
        o.require(ok, label(q, N) + " canonicalization identity");

        if (N <= 3) {
            ok = true;
            for (Count idx = 0; idx < projective_form_count(static_cast<Count>(q), N); ++idx) {
                const auto F = projective_form_from_index(f, N, idx);
                ok = ok && projective_index_bruteforce(F) == classify(F, space).projective_index;
                ++index;
            }
            o.require(ok, label(q, N) + " projective index");
        }
    }
    o.detail << " substitutions=" << invariance << " sections=" << sandwich << "+" << preserved
             << " canonicalizations=" << canon << " index-checks=" << index;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 point-count law", point_count_law},
        {"2 Serre bound", serre_bound},
        {"3 minimal-codeword census", census},
        {"4 tester agreement", tester_agreement},
        {"5 containment", containment},
        {"6 orbit counts", orbit_counts},
        {"7 conic pencils", pencils},
        {"8 property suites", property_suites},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " (" << std::fixed << std::setprecision(1) << secs
                  << "s)" << o.detail.str() << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
