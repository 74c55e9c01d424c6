#include "oracles.hpp"

#include "qprm/error.hpp"
#include "qprm/gf.hpp"

#include <doctest.h>

using namespace qprm;

namespace {

const std::vector<std::pair<int, int>> kSmallFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                                                    {11, 1}, {13, 1}, {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}};

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("field construction") {
    const auto f2 = field_create(2, 1);
    CHECK(f2->order() == 2);
    CHECK(f2->is_prime_field());
    CHECK(f2->modulus().empty());

    const auto f4 = field_create(2, 2);
    CHECK(f4->order() == 4);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
    CHECK(field_create(3, 2)->modulus() == std::vector<int>{1, 0, 1});

    CHECK(kind_of([] { field_create(4, 1); }) == ErrorKind::NonPrime);
    CHECK(kind_of([] { field_create(2, 5); }) == ErrorKind::DegreeOutOfRange);
    CHECK(kind_of([] { field_create(2, 0); }) == ErrorKind::DegreeOutOfRange);
    CHECK(kind_of([] { field_from_order(6); }) == ErrorKind::NonPrime);
    CHECK(field_from_order(9)->characteristic() == 3);
    CHECK(field_from_order(16)->degree() == 4);
}

TEST_CASE("modulus is the smallest irreducible found by factor search") {
    for (auto [p, e] : kSmallFields) {
        if (e == 1) continue;
        CAPTURE(p);
        CAPTURE(e);
        CHECK(field_create(p, e)->modulus() == oracle::PolyField::smallest_monic_irreducible(p, e));
    }
}

TEST_CASE("trace") {
    const auto f2 = field_create(2, 1);
    CHECK(f2->trace_to_prime(Field::one()) == Field::one());
    const auto f4 = field_create(2, 2);
    const Elem z = f4->generator();
    CHECK(f4->trace_to_prime(z) == Field::one());
    CHECK(f4->trace_to_prime(Field::zero()) == Field::zero());
}

TEST_CASE("squares") {
    const auto f3 = field_create(3, 1);
    CHECK(f3->is_square(f3->from_int(1)));
    CHECK_FALSE(f3->is_square(f3->from_int(2)));
    const auto f5 = field_create(5, 1);
    CHECK(f5->is_square(f5->from_int(4)));
}

TEST_CASE("binary constants") {
    // X0^2 + 2 X1^2 = (X0 - X1)(X0 + X1) over GF(3), so d must make -d a non-square
    auto c3 = canonical_irreducible_binary_constants(*field_create(3, 1));
    CHECK(c3.alpha == Field::zero());
    CHECK(c3.d == Elem{1});
    CHECK(canonical_irreducible_binary_constants(*field_create(5, 1)).d == Elem{2});
    CHECK(canonical_irreducible_binary_constants(*field_create(7, 1)).d == Elem{1});
    auto c2 = canonical_irreducible_binary_constants(*field_create(2, 1));
    CHECK(c2.alpha == Field::one());
    CHECK(c2.d == Field::one());
    const auto f4 = field_create(2, 2);
    auto c4 = canonical_irreducible_binary_constants(*f4);
    CHECK(c4.alpha == Field::one());
    CHECK(c4.d == f4->generator());

    for (auto [p, e] : kSmallFields) {
        const auto f = field_create(p, e);
        const auto c = canonical_irreducible_binary_constants(*f);
        for (int a = 0; a < f->order(); ++a) {
            for (int b = 0; b < f->order(); ++b) {
                if (a == 0 && b == 0) continue;
                const Elem x = f->element(a), y = f->element(b);
                const Elem v = f->add(f->add(f->mul(x, x), f->mul(c.alpha, f->mul(x, y))), f->mul(c.d, f->mul(y, y)));
                CHECK_FALSE(v.is_zero());
            }
        }
    }
}

TEST_CASE("arithmetic matches polynomial arithmetic and satisfies the field axioms") {
    for (auto [p, e] : kSmallFields) {
        const auto f = field_create(p, e);
        const auto ref = oracle::PolyField::make(p, e);
        const int q = f->order();
        CAPTURE(q);
        const auto els = oracle::elements(q);
        bool tables_ok = true;
        bool axioms_ok = true;
        for (Elem a : els) {
            for (Elem b : els) {
                tables_ok = tables_ok && f->add(a, b) == ref.add(a, b) && f->mul(a, b) == ref.mul(a, b);
                axioms_ok = axioms_ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
                for (Elem c : els) {
                    axioms_ok = axioms_ok && f->add(f->add(a, b), c) == f->add(a, f->add(b, c)) &&
                                f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)) &&
                                f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
                }
            }
            axioms_ok = axioms_ok && f->add(a, f->neg(a)).is_zero() && f->add(a, Field::zero()) == a &&
                        f->mul(a, Field::one()) == a;
            if (!a.is_zero()) axioms_ok = axioms_ok && f->mul(a, f->inv(a)) == Field::one();
        }
        CHECK(tables_ok);
        CHECK(axioms_ok);
    }
}

TEST_CASE("inverse of zero throws") {
    const auto f = field_create(3, 1);
    CHECK_THROWS_AS(f->inv(Field::zero()), Error);
}

TEST_CASE("Frobenius, powers, squares and trace") {
    for (auto [p, e] : kSmallFields) {
        const auto f = field_create(p, e);
        const int q = f->order();
        CAPTURE(q);
        const auto els = oracle::elements(q);
        int nonzero_squares = 0;
        std::set<Elem> trace_image;
        for (Elem a : els) {
            CHECK(f->pow(a, static_cast<std::uint64_t>(q)) == a);
            for (Elem b : els) {
                CHECK(f->frobenius(f->add(a, b)) == f->add(f->frobenius(a), f->frobenius(b)));
                CHECK(f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b)));
                CHECK(f->trace_to_prime(f->add(a, b)) == f->add(f->trace_to_prime(a), f->trace_to_prime(b)));
            }
            for (int k = 0; k < p; ++k) {
                const Elem c = f->from_int(k);
                CHECK(f->trace_to_prime(f->mul(c, a)) == f->mul(c, f->trace_to_prime(a)));
            }
            const Elem t = f->trace_to_prime(a);
            CHECK(t.v < p);
            trace_image.insert(t);
            bool is_sq = false;
            for (Elem y : els) is_sq = is_sq || f->mul(y, y) == a;
            CHECK(f->is_square(a) == is_sq);
            if (!a.is_zero() && is_sq) ++nonzero_squares;
            if (p == 2) {
                const Elem r = f->sqrt_char2(a);
                CHECK(f->mul(r, r) == a);
            }
        }
        CHECK(trace_image.size() == static_cast<std::size_t>(p));
        if (p != 2) CHECK(nonzero_squares == (q - 1) / 2);
    }
}

TEST_CASE("element order and rendering") {
    const auto f4 = field_create(2, 2);
    CHECK(f4->render(Elem{3}) == "z+1");
    CHECK(f4->render(Elem{2}) == "z");
    CHECK(f4->render(Field::one()) == "1");
    const auto f9 = field_create(3, 2);
    CHECK(f9->render(Elem{7}) == "2*z+1");
    CHECK(f9->coeffs(Elem{7}) == std::vector<int>{1, 2});
    CHECK(f9->from_coeffs(std::vector<int>{1, 2}) == Elem{7});
    const auto f5 = field_create(5, 1);
    CHECK(f5->render(Elem{4}) == "4");
    CHECK(f5->from_int(-1) == Elem{4});
    CHECK(f5->from_int(12) == Elem{2});
}

}  // TEST_SUITE
