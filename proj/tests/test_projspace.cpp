#include "oracles.hpp"

#include "qprm/error.hpp"
#include "qprm/projspace.hpp"

#include <doctest.h>

using namespace qprm;

TEST_SUITE("projspace") {

TEST_CASE("point counts") {
    CHECK(projective_point_count(2, 2) == 7);
    CHECK(projective_point_count(3, -1) == 0);
    CHECK(projective_point_count(3, 3) == 40);
    CHECK(enumerate_points(*field_create(2, 1), 1).size() == 3);
    CHECK(enumerate_points(*field_create(2, 1), 3).size() == 15);
    CHECK(enumerate_points(*field_create(3, 1), 2).size() == 13);
}

TEST_CASE("enumeration equals the normalized vector set") {
    for (auto [q, N] : std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {3, 2}, {4, 2}, {5, 2}, {9, 1}, {2, 4}}) {
        const auto f = field_from_order(q);
        const auto ref = oracle::PolyField::make(f->characteristic(), f->degree());
        CAPTURE(q);
        CAPTURE(N);
        const auto pts = enumerate_points(*f, N);
        CHECK(pts == oracle::points(ref, N));
        CHECK(pts.size() == projective_point_count(static_cast<Count>(q), N));
        const ProjectiveSpace space(f, N);
        for (std::size_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.point(i)) == i);
    }
}

TEST_CASE("normalization") {
    const auto f = field_create(5, 1);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int t = 0; t < 500; ++t) {
        Vec v(4);
        for (auto& x : v) x = Elem{static_cast<std::uint16_t>(pick(rng))};
        if (is_zero(v)) continue;
        const auto n = normalize(*f, v);
        CHECK(is_normalized(n));
        CHECK(normalize(*f, n) == n);
        for (int s = 1; s < 5; ++s) CHECK(normalize(*f, scale(*f, f->element(s), v)) == n);
    }
    CHECK_THROWS_AS(normalize(*f, Vec(3)), Error);
    const ProjectiveSpace space(field_create(3, 1), 2);
    const auto ref = oracle::PolyField::make(3, 1);
    for (const auto& v : oracle::all_vectors(3, 3)) {
        if (is_zero(v)) continue;
        CHECK(space.point(space.index_of(v)) == oracle::normalize(ref, v));
    }
}

TEST_CASE("Gaussian binomials against subspace hashing") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(5, 0, 3) == 1);
    CHECK(gaussian_binomial(3, 2, 3) == 13);
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), Error);
    for (int q : {2, 3}) {
        const auto ref = oracle::PolyField::make(q, 1);
        for (int n = 1; n <= (q == 2 ? 4 : 3); ++n) {
            for (int k = 0; k <= n; ++k) {
                CAPTURE(q);
                CAPTURE(n);
                CAPTURE(k);
                CHECK(static_cast<long long>(gaussian_binomial(n, k, static_cast<Count>(q))) == oracle::subspace_count(ref, n, k));
                CHECK(gaussian_binomial(n, k, static_cast<Count>(q)) == gaussian_binomial(n, n - k, static_cast<Count>(q)));
            }
        }
    }
}

TEST_CASE("lines") {
    const auto f2 = field_create(2, 1);
    const Elem o = Field::one(), z = Field::zero();
    const auto l = line_through(*f2, {o, z, z, o}, {z, o, z, o});
    CHECK(l.size() == 3);
    CHECK(std::find(l.begin(), l.end(), Point{o, o, z, z}) != l.end());
    CHECK_THROWS_AS(line_through(*f2, {o, z, z, o}, {o, z, z, o}), Error);
    const auto f3 = field_create(3, 1);
    CHECK(line_through(*f3, {o, z, z}, {z, o, o}).size() == 4);
}

TEST_CASE("subspaces") {
    const auto f2 = field_create(2, 1);
    const auto f3 = field_create(3, 1);
    const Elem o = Field::one(), z = Field::zero();
    CHECK(subspace_points(*f2, LinearSubspace::span(*f2, 3, {{o, z, z, z}})).size() == 1);
    CHECK(subspace_points(*f2, LinearSubspace::span(*f2, 3, {{o, z, z, z}, {z, o, z, z}, {z, z, o, o}})).size() == 7);
    CHECK(subspace_points(*f3, LinearSubspace::span(*f3, 2, {{o, z, z}, {z, o, o}})).size() == 4);
    for (int dim = 0; dim <= 3; ++dim) {
        CHECK(enumerate_subspaces(*f2, 3, dim).size() == gaussian_binomial(4, dim + 1, 2));
        CHECK(enumerate_subspaces(*f3, 3, dim).size() == gaussian_binomial(4, dim + 1, 3));
    }
    // equations cut out exactly the subspace
    for (const auto& s : enumerate_subspaces(*f3, 3, 1)) {
        const auto eqs = s.equations(*f3);
        CHECK(eqs.size() == 2);
        std::size_t inside = 0;
        for (const auto& P : enumerate_points(*f3, 3)) {
            const bool on = std::all_of(eqs.begin(), eqs.end(), [&](const Vec& L) { return dot(*f3, L, P).is_zero(); });
            CHECK(on == s.contains(*f3, P));
            inside += on ? 1 : 0;
        }
        CHECK(inside == 4);
    }
}

TEST_CASE("rendering") {
    const auto f4 = field_create(2, 2);
    CHECK(render_point(*f4, {Field::one(), f4->generator(), Field::zero()}) == "(1:z:0)");
}

}  // TEST_SUITE
