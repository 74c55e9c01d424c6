#include "qprm/projspace.hpp"

#include "qprm/error.hpp"

#include <algorithm>
#include <sstream>

namespace qprm {

Point normalize(const Field& f, Vec v) {
    auto last = std::find_if(v.rbegin(), v.rend(), [](Elem x) { return !x.is_zero(); });
    if (last == v.rend()) throw Error(ErrorKind::OutOfRange, "the zero vector is not a projective point");
    const Elem s = f.inv(*last);
    for (auto& x : v) x = f.mul(s, x);
    return v;
}

bool is_normalized(const Vec& v) noexcept {
    auto last = std::find_if(v.rbegin(), v.rend(), [](Elem x) { return !x.is_zero(); });
    return last != v.rend() && *last == Field::one();
}

Count projective_point_count(Count q, int N) {
    if (N < -1) throw Error(ErrorKind::OutOfRange, "projective dimension below -1");
    Count total = 0;
    Count term = 1;
    for (int i = 0; i <= N; ++i) {
        total = checked_add(total, term);
        if (i < N) term = checked_mul(term, q);
    }
    return total;
}

Count gaussian_binomial(int n, int k, Count q) {
    if (k < 0 || n < 0 || k > n) throw Error(ErrorKind::OutOfRange, "gaussian_binomial needs 0 <= k <= n");
    unsigned __int128 result = 1;
    for (int i = 0; i < k; ++i) {
        const unsigned __int128 num = ipow(q, n - i) - 1;
        const unsigned __int128 den = ipow(q, i + 1) - 1;
        result = result * num / den;
        if (result > static_cast<unsigned __int128>(~Count{0})) throw Error(ErrorKind::Overflow, "gaussian_binomial overflow");
    }
    return static_cast<Count>(result);
}

std::vector<Point> enumerate_points(const Field& f, int N) {
    if (N < 0) throw Error(ErrorKind::OutOfRange, "projective dimension must be nonnegative");
    const std::size_t len = static_cast<std::size_t>(N) + 1;
    const Count total = ipow(static_cast<Count>(f.order()), N + 1);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(projective_point_count(static_cast<Count>(f.order()), N)));
    Vec v(len, Field::zero());
    // Odometer with X_0 as the most significant digit gives lexicographic order.
    for (Count step = 0; step < total; ++step) {
        if (is_normalized(v)) out.push_back(v);
        for (std::size_t pos = len; pos-- > 0;) {
            if (v[pos].v + 1 < f.order()) {
                v[pos].v = static_cast<std::uint16_t>(v[pos].v + 1);
                break;
            }
            v[pos] = Field::zero();
        }
    }
    return out;
}

LinearSubspace LinearSubspace::span(const Field& f, int ambient, const std::vector<Vec>& vectors) {
    LinearSubspace s;
    s.ambient = ambient;
    for (auto& row : span_basis(f, vectors, static_cast<std::size_t>(ambient) + 1)) {
        s.basis.push_back(normalize(f, std::move(row)));
    }
    return s;
}

LinearSubspace LinearSubspace::whole(const Field& f, int ambient) {
    std::vector<Vec> unit;
    for (int i = 0; i <= ambient; ++i) {
        Vec e(static_cast<std::size_t>(ambient) + 1, Field::zero());
        e[static_cast<std::size_t>(i)] = Field::one();
        unit.push_back(std::move(e));
    }
    return span(f, ambient, unit);
}

bool LinearSubspace::contains(const Field& f, const Vec& v) const {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    Matrix m = Matrix::from_rows(basis, static_cast<std::size_t>(ambient) + 1);
    const auto before = qprm::rank(f, m);
    m.append_row(v);
    return qprm::rank(f, m) == before;
}

std::vector<Vec> LinearSubspace::equations(const Field& f) const {
    const std::size_t n = static_cast<std::size_t>(ambient) + 1;
    if (basis.empty()) return LinearSubspace::whole(f, ambient).basis;
    return kernel(f, Matrix::from_rows(basis, n));
}

std::vector<Point> line_through(const Field& f, const Point& a, const Point& b) {
    const Point na = normalize(f, a);
    const Point nb = normalize(f, b);
    if (na == nb) throw Error(ErrorKind::EqualPoints, "a line needs two distinct points");
    return subspace_points(f, LinearSubspace::span(f, static_cast<int>(a.size()) - 1, {na, nb}));
}

std::vector<Point> subspace_points(const Field& f, const LinearSubspace& s) {
    if (s.basis.empty()) throw Error(ErrorKind::OutOfRange, "the empty subspace has no points");
    const std::size_t k = s.basis.size();
    const std::size_t n = static_cast<std::size_t>(s.ambient) + 1;
    const Count total = ipow(static_cast<Count>(f.order()), static_cast<int>(k));
    std::vector<Point> out;
    std::vector<Elem> c(k, Field::zero());
    for (Count step = 0; step < total; ++step) {
        // Only combinations whose last nonzero coefficient is 1 give each point once.
        if (is_normalized(c)) {
            Vec v(n, Field::zero());
            for (std::size_t i = 0; i < k; ++i) {
                if (!c[i].is_zero()) v = add(f, v, scale(f, c[i], s.basis[i]));
            }
            out.push_back(normalize(f, std::move(v)));
        }
        for (std::size_t pos = k; pos-- > 0;) {
            if (c[pos].v + 1 < f.order()) {
                c[pos].v = static_cast<std::uint16_t>(c[pos].v + 1);
                break;
            }
            c[pos] = Field::zero();
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void enumerate_rref(const Field& f, std::size_t n, std::size_t k, std::vector<std::size_t>& pivots,
                    std::vector<LinearSubspace>& out) {
    if (pivots.size() < k) {
        const std::size_t start = pivots.empty() ? 0 : pivots.back() + 1;
        for (std::size_t c = start; c + (k - pivots.size()) <= n; ++c) {
            pivots.push_back(c);
            enumerate_rref(f, n, k, pivots, out);
            pivots.pop_back();
        }
        return;
    }
    // Free slots: in row r, every non-pivot column to the right of its pivot.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = pivots[r] + 1; c < n; ++c) {
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) slots.emplace_back(r, c);
        }
    }
    std::vector<Elem> fill(slots.size(), Field::zero());
    const Count total = ipow(static_cast<Count>(f.order()), static_cast<int>(slots.size()));
    for (Count step = 0; step < total; ++step) {
        std::vector<Vec> rows(k, Vec(n, Field::zero()));
        for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = Field::one();
        for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = fill[s];
        out.push_back(LinearSubspace::span(f, static_cast<int>(n) - 1, rows));
        for (std::size_t pos = fill.size(); pos-- > 0;) {
            if (fill[pos].v + 1 < f.order()) {
                fill[pos].v = static_cast<std::uint16_t>(fill[pos].v + 1);
                break;
            }
            fill[pos] = Field::zero();
        }
    }
}

}  // namespace

std::vector<LinearSubspace> enumerate_subspaces(const Field& f, int N, int dimension) {
    if (dimension < -1 || dimension > N) throw Error(ErrorKind::OutOfRange, "subspace dimension out of range");
    std::vector<LinearSubspace> out;
    if (dimension == -1) {
        out.push_back(LinearSubspace{N, {}});
        return out;
    }
    std::vector<std::size_t> pivots;
    enumerate_rref(f, static_cast<std::size_t>(N) + 1, static_cast<std::size_t>(dimension) + 1, pivots, out);
    return out;
}

std::string render_point(const Field& f, const Vec& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ':';
        out << f.render(v[i]);
    }
    out << ')';
    return out.str();
}

ProjectiveSpace::ProjectiveSpace(FieldRef field, int N) : field_(std::move(field)), n_(N) {
    if (N < 0) throw Error(ErrorKind::OutOfRange, "projective dimension must be nonnegative");
    const Count keys = ipow(static_cast<Count>(field_->order()), N + 1);
    if (keys > (Count{1} << 26)) throw Error(ErrorKind::AmbientTooLarge, "q^(N+1) exceeds the enumeration cap");
    points_ = enumerate_points(*field_, N);
    lookup_.assign(static_cast<std::size_t>(keys), -1);
    for (std::size_t i = 0; i < points_.size(); ++i) lookup_[key(points_[i])] = static_cast<std::int32_t>(i);
}

std::size_t ProjectiveSpace::key(const Vec& v) const noexcept {
    std::size_t k = 0;
    for (Elem x : v) k = k * static_cast<std::size_t>(field_->order()) + x.v;
    return k;
}

std::size_t ProjectiveSpace::index_of(const Vec& v) const {
    if (v.size() != static_cast<std::size_t>(n_) + 1) throw Error(ErrorKind::DimensionMismatch, "point length");
    return static_cast<std::size_t>(lookup_[key(normalize(*field_, v))]);
}

}  // namespace qprm
