#pragma once

// Exact arithmetic in GF(p^e) with e <= 4.
//
// Elements are stored as their polynomial-basis index: the coefficient
// vector (c_0, ..., c_{e-1}) of c_0 + c_1 z + ... + c_{e-1} z^{e-1} maps to
// sum c_i p^i. Comparing indices orders elements lexicographically with the
// top coefficient most significant and 0 first.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qprm {

struct Elem {
    std::uint16_t v = 0;

    constexpr bool is_zero() const noexcept { return v == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
public:
    static constexpr int kMaxDegree = 4;
    static constexpr int kMaxOrder = 65536;

    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return e_; }
    int order() const noexcept { return q_; }
    bool is_prime_field() const noexcept { return e_ == 1; }

    /// Monic modulus as c_0..c_e; empty for a prime field.
    const std::vector<int>& modulus() const noexcept { return modulus_; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }
    Elem element(int index) const;
    /// Image of an integer in the prime subfield.
    Elem from_int(long long n) const noexcept;
    /// The class of z modulo the defining polynomial (equals from_int(0) for e = 1).
    Elem generator() const noexcept { return e_ == 1 ? zero() : Elem{static_cast<std::uint16_t>(p_)}; }

    std::vector<int> coeffs(Elem x) const;
    Elem from_coeffs(std::span<const int> c) const;

    Elem add(Elem a, Elem b) const noexcept {
        if (!add_.empty()) return add_[static_cast<std::size_t>(a.v) * q_ + b.v];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const noexcept { return neg_[a.v]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.v == 0 || b.v == 0) return zero();
        int s = log_[a.v] + log_[b.v];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[static_cast<std::size_t>(s)];
    }
    /// Multiplicative inverse; throws on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t k) const noexcept;

    /// x -> x^p.
    Elem frobenius(Elem x) const noexcept { return pow(x, static_cast<std::uint64_t>(p_)); }
    /// Unique square root in characteristic 2 (x^{q/2}); undefined use in odd characteristic throws.
    Elem sqrt_char2(Elem x) const;

    /// x + x^p + ... + x^{p^{e-1}}, always a prime-subfield element.
    Elem trace_to_prime(Elem x) const noexcept;
    /// Squares test; every element is a square in characteristic 2.
    bool is_square(Elem x) const noexcept;

    /// Integer rendering for the prime subfield, polynomial in z otherwise ("z^2+2*z+1").
    std::string render(Elem x) const;

    friend FieldRef field_create(int p, int e);

private:
    Field(int p, int e, std::vector<int> modulus);
    Elem add_slow(Elem a, Elem b) const noexcept;
    std::vector<int> mul_poly(const std::vector<int>& a, const std::vector<int>& b) const;

    int p_;
    int e_;
    int q_;
    std::vector<int> modulus_;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> exp_;
    std::vector<int> log_;
};

bool is_prime(long long n) noexcept;

/// Builds GF(p^e) over the lexicographically smallest monic irreducible of degree e.
FieldRef field_create(int p, int e);
/// Factors q = p^e and builds the field; errors as field_create, NonPrime if q is not a prime power.
FieldRef field_from_order(int q);

/// Smallest monic irreducible of degree e over GF(p) as c_0..c_e.
std::vector<int> smallest_irreducible(int p, int e);

struct BinaryConstants {
    Elem alpha;
    Elem d;
};

/// Constants of the anisotropic binary form X0^2 + alpha X0 X1 + d X1^2:
/// odd p gives alpha = 0 and d the least element with -d a non-square (the least
/// non-square when q = 1 mod 4, and 1 when q = 3 mod 4), p = 2 gives alpha = 1 and
/// d the least element of absolute trace 1.
BinaryConstants canonical_irreducible_binary_constants(const Field& field);

}  // namespace qprm
