#include "oracles.hpp"

#include "qprm/census.hpp"
#include "qprm/error.hpp"
#include "qprm/report.hpp"

#include <doctest.h>

using namespace qprm;

namespace {

std::map<Count, Count> M(std::initializer_list<std::pair<const Count, Count>> l) { return l; }

}  // namespace

TEST_SUITE("census") {

TEST_CASE("orbit counts") {
    CHECK(orbit_count(QuadricClass::Parabolic, 3, 2) == 28);
    CHECK(orbit_count(QuadricClass::Hyperbolic, 4, 2) == 280);
    CHECK(orbit_count(QuadricClass::Elliptic, 4, 2) == 168);
    CHECK_THROWS_AS(orbit_count(QuadricClass::Parabolic, 4, 2), Error);
    CHECK_THROWS_AS(orbit_count(QuadricClass::Hyperbolic, 3, 2), Error);
    CHECK_THROWS_AS(orbit_count(QuadricClass::DoubleHyperplane, 1, 2), Error);
}

TEST_CASE("orbit counts match smooth forms counted by class") {
    for (int q : {2, 3}) {
        const auto f = field_from_order(q);
        for (int N : {2, 3}) {
            const auto s = survey_forms(f, N);
            const int r = N + 1;
            if (r % 2 == 1) {
                CHECK(s.histogram.at({QuadricClass::Parabolic, r}) == orbit_count(QuadricClass::Parabolic, r, static_cast<Count>(q)));
            } else {
                CHECK(s.histogram.at({QuadricClass::Hyperbolic, r}) == orbit_count(QuadricClass::Hyperbolic, r, static_cast<Count>(q)));
                CHECK(s.histogram.at({QuadricClass::Elliptic, r}) == orbit_count(QuadricClass::Elliptic, r, static_cast<Count>(q)));
            }
        }
    }
}

TEST_CASE("orbit-count closure") {
    for (auto [q, N] : oracle::grid()) {
        const auto Q = static_cast<Count>(q);
        // cones over smooth quadrics of every rank, plus the reducible classes
        Count total = 0;
        for (int r = 3; r <= N + 1; ++r) {
            const Count cones = gaussian_binomial(N + 1, r, Q);
            if (r % 2 == 1) {
                total += cones * orbit_count(QuadricClass::Parabolic, r, Q);
            } else {
                total += cones * (orbit_count(QuadricClass::Hyperbolic, r, Q) + orbit_count(QuadricClass::Elliptic, r, Q));
            }
        }
        const Count planes2 = gaussian_binomial(N + 1, 2, Q);
        total += planes2 * orbit_count(QuadricClass::Hyperbolic, 2, Q);  // hyperplane pairs
        total += planes2 * orbit_count(QuadricClass::Elliptic, 2, Q);    // conjugate pairs
        total += gaussian_binomial(N + 1, 1, Q);                          // double hyperplanes
        CAPTURE(q);
        CAPTURE(N);
        CHECK(total == projective_form_count(Q, N));

        const auto s = survey_forms(field_from_order(q), N);
        Count hist_total = 0;
        for (const auto& [key, n] : s.histogram) hist_total += n;
        CHECK(hist_total == projective_form_count(Q, N));
        CHECK(s.histogram.at({QuadricClass::HyperplanePair, 2}) == planes2 * orbit_count(QuadricClass::Hyperbolic, 2, Q));
    }
}

TEST_CASE("closed-form tables") {
    auto t = minimal_count_closed_form(2, 3);
    CHECK(t.closed_map() == M({{4, 105}, {6, 280}}));
    CHECK(t.delta == 2);
    CHECK(t.epsilon == 2);
    CHECK(minimal_count_closed_form(3, 2).closed_map() == M({{6, 156}}));
    t = minimal_count_closed_form(4, 2);
    CHECK(t.closed_map() == M({{12, 630}, {16, 3024}}));
    CHECK(t.delta == 0);
    CHECK(t.epsilon == 0);
    CHECK(minimal_count_closed_form(2, 2).closed_map() == M({{2, 21}}));
    CHECK_THROWS_AS(minimal_count_closed_form(2, 0), Error);
}

TEST_CASE("brute-force census") {
    const auto f2 = field_from_order(2), f3 = field_from_order(3), f4 = field_from_order(4);
    auto t = brute_force_census(f2, 3, MinimalityMethod::Characterization);
    CHECK(t.brute_map() == M({{4, 105}, {6, 280}}));
    CHECK(t.columns_agree());
    t = brute_force_census(f3, 2, MinimalityMethod::Interpolation);
    CHECK(t.brute_map() == M({{6, 156}}));
    CHECK(t.columns_agree());
    t = brute_force_census(f2, 2, MinimalityMethod::Exhaustive);
    CHECK(t.brute_map() == M({{2, 21}}));
    CHECK(t.columns_agree());
    t = brute_force_census(f4, 2, MinimalityMethod::Exhaustive);
    CHECK(t.brute_map() == M({{12, 630}, {16, 3024}}));
    CHECK(t.columns_agree());
    CHECK_THROWS_AS(brute_force_census(f3, 3, MinimalityMethod::Characterization, ScanOptions{1, 1000}), Error);
}

TEST_CASE("census tables do not depend on the tester or the worker count") {
    for (auto [q, N] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
        const auto f = field_from_order(q);
        const auto a = brute_force_census(f, N, MinimalityMethod::Characterization, {1});
        const auto b = brute_force_census(f, N, MinimalityMethod::Interpolation, {3});
        const auto c = brute_force_census(f, N, MinimalityMethod::Exhaustive, {4});
        CHECK(a.rows == b.rows);
        CHECK(a.rows == c.rows);
        CHECK(to_json(a).dump() == to_json(brute_force_census(f, N, MinimalityMethod::Characterization, {5})).dump());
    }
}

TEST_CASE("containment at q = 2, N = 3") {
    const auto f2 = field_from_order(2);
    const auto r = verify_containment(f2, 3);
    CHECK(r.admissible());
    CHECK(r.count(ViolationShape::EllipticInHyperbolic) > 0);
    CHECK(r.count(ViolationShape::RankThreeInHyperplanePair) > 0);
    CHECK(r.count(ViolationShape::EllipticInHyperplanePair) > 0);
    for (const auto& v : r.violations) {
        const auto zi = point_set(v.inner), zo = point_set(v.outer);
        CHECK(zi.is_subset_of(zo));
        CHECK(zi.size() < zo.size());
    }
    const auto all = containment_all_pairs(f2, 3);
    REQUIRE(all.violations.size() == r.violations.size());
    std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> a, b;
    for (const auto& v : r.violations) a.insert({v.inner.coeffs(), v.outer.coeffs()});
    for (const auto& v : all.violations) b.insert({v.inner.coeffs(), v.outer.coeffs()});
    CHECK(a == b);
    const auto again = verify_containment(f2, 3, {3});
    CHECK(to_json(again).dump() == to_json(r).dump());
}

TEST_CASE("containment elsewhere") {
    const auto r42 = verify_containment(field_from_order(4), 2);
    CHECK(r42.violations.empty());
    const auto r32 = verify_containment(field_from_order(3), 2);
    CHECK(r32.admissible());
    CHECK(r32.count(ViolationShape::RankThreeInHyperplanePair) == r32.violations.size());
    CHECK(r32.violations.size() > 0);
}

TEST_CASE("exception pair") {
    const auto e = check_exception_example();
    CHECK(e.holds);
    CHECK(e.inner.klass == QuadricClass::Elliptic);
    CHECK(e.outer.klass == QuadricClass::Hyperbolic);
    CHECK(e.inner.point_count == 5);
    CHECK(e.outer.point_count == 9);
    CHECK(verify_exception_example());
}

TEST_CASE("conic pencils") {
    const auto f3 = field_from_order(3);
    const auto s3 = conic_linear_system(build_code(f3, 2), canonical_form(f3, 2, QuadricClass::Parabolic, 3));
    CHECK(s3.members == 4);
    CHECK(s3.reducible == 3);
    CHECK(s3.irreducible == 1);
    const auto f2 = field_from_order(2);
    const auto s2 = conic_linear_system(build_code(f2, 2), canonical_form(f2, 2, QuadricClass::Parabolic, 3));
    CHECK(s2.members == 7);
    CHECK(s2.reducible == 6);
    CHECK(s2.irreducible == 1);
    const auto f5 = field_from_order(5);
    CHECK(conic_linear_system(build_code(f5, 2), canonical_form(f5, 2, QuadricClass::Parabolic, 3)).members == 1);
}

TEST_CASE("form survey") {
    for (auto [q, N] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto s = survey_forms(field_from_order(q), N, {2});
        CHECK(s.point_count_law_holds());
        CHECK(s.serre_holds());
        CHECK(s.forms == form_count(static_cast<Count>(q), N) - 1);
    }
    CHECK_THROWS_AS(survey_forms(field_from_order(5), 3), Error);
}

}  // TEST_SUITE
