#include "qprm/gf.hpp"

#include "qprm/error.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

namespace qprm {

namespace {

using Poly = std::vector<int>;  // c_0..c_n over GF(p)

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
    // Extended Euclid.
    int t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        int quot = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
    }
    return ((t % p) + p) % p;
}

// Remainder of a modulo a nonzero b.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    const int lead_inv = inv_mod(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const long long factor = static_cast<long long>(a.back()) * lead_inv % p;
        for (int i = 0; i <= db; ++i) {
            a[static_cast<std::size_t>(shift + i)] =
                static_cast<int>(((a[static_cast<std::size_t>(shift + i)] - factor * b[static_cast<std::size_t>(i)]) % p + p) % p);
        }
        trim(a);
    }
    return a;
}

Poly monic_from_index(int p, int degree, long long index) {
    Poly c(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<int>(index % p);
        index /= p;
    }
    c.back() = 1;
    return c;
}

bool is_irreducible(const Poly& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; d <= n / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long k = 0; k < count; ++k) {
            if (poly_mod(f, monic_from_index(p, d, k), p).empty()) return false;
        }
    }
    return true;
}

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<int> smallest_irreducible(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
        Poly f = monic_from_index(p, e, k);
        if (is_irreducible(f, p)) return f;
    }
    throw Error(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

FieldRef field_create(int p, int e) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrime, std::to_string(p) + " is not prime");
    if (e < 1 || e > Field::kMaxDegree) {
        throw Error(ErrorKind::DegreeOutOfRange, "extension degree " + std::to_string(e) + " not in [1, 4]");
    }
    long long q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (q > Field::kMaxOrder) {
        throw Error(ErrorKind::FieldTooLarge, "field order " + std::to_string(q) + " exceeds 65536");
    }
    std::vector<int> modulus = e == 1 ? std::vector<int>{} : smallest_irreducible(p, e);
    return FieldRef(new Field(p, e, std::move(modulus)));
}

FieldRef field_from_order(int q) {
    if (q < 2) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    int p = 2;
    while (q % p != 0) ++p;
    int e = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(ErrorKind::NonPrime, std::to_string(q) + " is not a prime power");
    return field_create(p, e);
}

Field::Field(int p, int e, std::vector<int> modulus) : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < e_; ++i) q_ *= p_;
    const auto q = static_cast<std::size_t>(q_);

    neg_.resize(q);
    for (int i = 0; i < q_; ++i) {
        auto c = coeffs(Elem{static_cast<std::uint16_t>(i)});
        for (int& x : c) x = (p_ - x) % p_;
        neg_[static_cast<std::size_t>(i)] = from_coeffs(c);
    }
    if (q <= 1024) {
        add_.resize(q * q);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                add_[static_cast<std::size_t>(a) * q + static_cast<std::size_t>(b)] =
                    add_slow(Elem{static_cast<std::uint16_t>(a)}, Elem{static_cast<std::uint16_t>(b)});
            }
        }
    }

    // Find a primitive element by brute force, then build exp/log tables.
    exp_.assign(q, Elem{});
    log_.assign(q, 0);
    const auto factors = prime_factors(q_ - 1);
    auto slow_pow = [&](const Poly& base, long long k) {
        Poly result{1};
        Poly b = base;
        while (k > 0) {
            if (k & 1) result = mul_poly(result, b);
            b = mul_poly(b, b);
            k >>= 1;
        }
        return result;
    };
    Poly primitive;
    for (int g = 1; g < q_; ++g) {
        Poly cand = coeffs(Elem{static_cast<std::uint16_t>(g)});
        bool ok = true;
        for (long long l : factors) {
            if (from_coeffs(slow_pow(cand, (q_ - 1) / l)) == one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            primitive = cand;
            break;
        }
    }
    Poly cur{1};
    for (int k = 0; k < q_ - 1; ++k) {
        const Elem x = from_coeffs(cur);
        exp_[static_cast<std::size_t>(k)] = x;
        log_[x.v] = k;
        cur = mul_poly(cur, primitive);
    }
    // Wrap-around slot keeps mul() branch-free for s = q-1 after reduction.
    exp_[q - 1] = one();
}

Elem Field::element(int index) const {
    if (index < 0 || index >= q_) throw Error(ErrorKind::OutOfRange, "element index out of range");
    return Elem{static_cast<std::uint16_t>(index)};
}

Elem Field::from_int(long long n) const noexcept {
    const long long r = ((n % p_) + p_) % p_;
    return Elem{static_cast<std::uint16_t>(r)};
}

std::vector<int> Field::coeffs(Elem x) const {
    std::vector<int> c(static_cast<std::size_t>(e_), 0);
    int v = x.v;
    for (int i = 0; i < e_; ++i) {
        c[static_cast<std::size_t>(i)] = v % p_;
        v /= p_;
    }
    return c;
}

Elem Field::from_coeffs(std::span<const int> c) const {
    Poly reduced(c.begin(), c.end());
    for (int& x : reduced) x = ((x % p_) + p_) % p_;
    if (e_ > 1 && static_cast<int>(reduced.size()) > e_) reduced = poly_mod(reduced, modulus_, p_);
    if (e_ == 1 && reduced.size() > 1) {
        // In the prime field z is not defined; only the constant term is meaningful.
        reduced.resize(1);
    }
    int v = 0;
    for (int i = std::min(static_cast<int>(reduced.size()), e_) - 1; i >= 0; --i) {
        v = v * p_ + reduced[static_cast<std::size_t>(i)];
    }
    return Elem{static_cast<std::uint16_t>(v)};
}

Elem Field::add_slow(Elem a, Elem b) const noexcept {
    int va = a.v, vb = b.v, out = 0, scale = 1;
    for (int i = 0; i < e_; ++i) {
        out += ((va % p_ + vb % p_) % p_) * scale;
        va /= p_;
        vb /= p_;
        scale *= p_;
    }
    return Elem{static_cast<std::uint16_t>(out)};
}

std::vector<int> Field::mul_poly(const std::vector<int>& a, const std::vector<int>& b) const {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long long>(a[i]) * b[j]) % p_);
        }
    }
    if (e_ > 1) return poly_mod(prod, modulus_, p_);
    trim(prod);
    return prod;
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::OutOfRange, "inverse of zero");
    const int l = log_[a.v];
    return exp_[static_cast<std::size_t>(l == 0 ? 0 : q_ - 1 - l)];
}

Elem Field::pow(Elem a, std::uint64_t k) const noexcept {
    if (k == 0) return one();
    if (a.is_zero()) return zero();
    const auto l = static_cast<std::uint64_t>(log_[a.v]);
    return exp_[static_cast<std::size_t>((l * (k % static_cast<std::uint64_t>(q_ - 1))) % static_cast<std::uint64_t>(q_ - 1))];
}

Elem Field::sqrt_char2(Elem x) const {
    if (p_ != 2) throw Error(ErrorKind::OutOfRange, "sqrt_char2 requires characteristic 2");
    return pow(x, static_cast<std::uint64_t>(q_ / 2));
}

Elem Field::trace_to_prime(Elem x) const noexcept {
    Elem acc = zero();
    Elem term = x;
    for (int i = 0; i < e_; ++i) {
        acc = add(acc, term);
        term = frobenius(term);
    }
    return acc;
}

bool Field::is_square(Elem x) const noexcept {
    if (p_ == 2 || x.is_zero()) return true;
    return pow(x, static_cast<std::uint64_t>((q_ - 1) / 2)) == one();
}

std::string Field::render(Elem x) const {
    if (e_ == 1) return std::to_string(x.v);
    const auto c = coeffs(x);
    std::ostringstream out;
    bool first = true;
    for (int i = e_ - 1; i >= 0; --i) {
        const int ci = c[static_cast<std::size_t>(i)];
        if (ci == 0) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
            out << ci;
            continue;
        }
        if (ci != 1) out << ci << '*';
        out << 'z';
        if (i > 1) out << '^' << i;
    }
    if (first) out << '0';
    return out.str();
}

BinaryConstants canonical_irreducible_binary_constants(const Field& field) {
    const bool even = field.characteristic() == 2;
    for (int i = 1; i < field.order(); ++i) {
        const Elem x = field.element(i);
        if (even ? field.trace_to_prime(x) == Field::one() : !field.is_square(field.neg(x))) {
            return {even ? Field::one() : Field::zero(), x};
        }
    }
    throw Error(ErrorKind::InternalInconsistency, "no anisotropic binary constant found");
}

}  // namespace qprm
