#include "qprm/quadric.hpp"

#include "qprm/error.hpp"

#include <algorithm>
#include <array>

namespace qprm {

// ---------------------------------------------------------------------------
// QuadraticForm

QuadraticForm::QuadraticForm(FieldRef field, int N)
    : field_(std::move(field)), n_(N), coeffs_(monomial_count(N), Field::zero()) {
    if (N < 0) throw Error(ErrorKind::OutOfRange, "a form needs at least one variable");
}

QuadraticForm::QuadraticForm(FieldRef field, int N, std::vector<Elem> coeffs)
    : field_(std::move(field)), n_(N), coeffs_(std::move(coeffs)) {
    if (N < 0) throw Error(ErrorKind::OutOfRange, "a form needs at least one variable");
    if (coeffs_.size() != monomial_count(N)) throw Error(ErrorKind::DimensionMismatch, "coefficient table size");
}

std::size_t QuadraticForm::monomial_index(int N, int i, int j) noexcept {
    if (i > j) std::swap(i, j);
    const auto n = static_cast<std::size_t>(N) + 1;
    const auto ui = static_cast<std::size_t>(i);
    return ui * n - ui * (ui - 1) / 2 + static_cast<std::size_t>(j - i);
}

std::vector<std::pair<int, int>> QuadraticForm::monomials(int N) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i <= N; ++i) {
        for (int j = i; j <= N; ++j) out.emplace_back(i, j);
    }
    return out;
}

Elem QuadraticForm::coeff(int i, int j) const noexcept { return coeffs_[monomial_index(n_, i, j)]; }

void QuadraticForm::set(int i, int j, Elem value) noexcept { coeffs_[monomial_index(n_, i, j)] = value; }

bool QuadraticForm::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem x) { return x.is_zero(); });
}

Elem QuadraticForm::operator()(const Vec& x) const noexcept {
    const Field& f = *field_;
    Elem acc = Field::zero();
    std::size_t m = 0;
    for (int i = 0; i <= n_; ++i) {
        const Elem xi = x[static_cast<std::size_t>(i)];
        if (xi.is_zero()) {
            m += static_cast<std::size_t>(n_ - i + 1);
            continue;
        }
        // Horner-style: xi * sum_{j >= i} a_ij x_j
        Elem inner = Field::zero();
        for (int j = i; j <= n_; ++j, ++m) {
            if (!coeffs_[m].is_zero()) inner = f.add(inner, f.mul(coeffs_[m], x[static_cast<std::size_t>(j)]));
        }
        acc = f.add(acc, f.mul(xi, inner));
    }
    return acc;
}

QuadraticForm QuadraticForm::scaled(Elem s) const {
    QuadraticForm out = *this;
    for (auto& c : out.coeffs_) c = field_->mul(s, c);
    return out;
}

QuadraticForm QuadraticForm::operator+(const QuadraticForm& other) const {
    if (other.n_ != n_) throw Error(ErrorKind::DimensionMismatch, "adding forms in different ambients");
    QuadraticForm out = *this;
    for (std::size_t m = 0; m < coeffs_.size(); ++m) out.coeffs_[m] = field_->add(coeffs_[m], other.coeffs_[m]);
    return out;
}

// ---------------------------------------------------------------------------
// Classes

std::string_view to_string(QuadricClass c) noexcept {
    switch (c) {
        case QuadricClass::DoubleHyperplane: return "DoubleHyperplane";
        case QuadricClass::HyperplanePair: return "HyperplanePair";
        case QuadricClass::ConjugatePair: return "ConjugatePair";
        case QuadricClass::Parabolic: return "Parabolic";
        case QuadricClass::Hyperbolic: return "Hyperbolic";
        case QuadricClass::Elliptic: return "Elliptic";
    }
    return "Unknown";
}

std::optional<QuadricClass> quadric_class_from_string(std::string_view s) noexcept {
    for (auto c : {QuadricClass::DoubleHyperplane, QuadricClass::HyperplanePair, QuadricClass::ConjugatePair,
                   QuadricClass::Parabolic, QuadricClass::Hyperbolic, QuadricClass::Elliptic}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

bool is_absolutely_irreducible(QuadricClass c) noexcept {
    return c == QuadricClass::Parabolic || c == QuadricClass::Hyperbolic || c == QuadricClass::Elliptic;
}

// ---------------------------------------------------------------------------
// Polarization and radicals

namespace {

void require_nonzero(const QuadraticForm& F) {
    if (F.is_zero()) throw Error(ErrorKind::ZeroForm, "analysis of the zero form");
}

Vec unit(std::size_t n, std::size_t i) {
    Vec e(n, Field::zero());
    e[i] = Field::one();
    return e;
}

}  // namespace

Elem evaluate(const QuadraticForm& F, const Point& P) {
    if (P.size() != static_cast<std::size_t>(F.variables())) {
        throw Error(ErrorKind::DimensionMismatch, "point and form live in different ambients");
    }
    return F(normalize(F.field(), P));
}

Elem bilinear(const QuadraticForm& F, const Vec& u, const Vec& v) {
    const Field& f = F.field();
    const int n = F.variables();
    Elem acc = Field::zero();
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        for (int j = i; j < n; ++j) {
            const auto uj = static_cast<std::size_t>(j);
            const Elem a = F.coeff(i, j);
            if (a.is_zero()) continue;
            Elem term = f.add(f.mul(u[ui], v[uj]), f.mul(u[uj], v[ui]));
            acc = f.add(acc, f.mul(a, term));
        }
    }
    return acc;
}

Matrix polarize(const QuadraticForm& F) {
    const Field& f = F.field();
    const auto n = static_cast<std::size_t>(F.variables());
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Elem a = F.coeff(static_cast<int>(i), static_cast<int>(j));
            g(i, j) = i == j ? f.add(a, a) : a;
        }
    }
    return g;
}

std::vector<Vec> radical_bilinear(const QuadraticForm& F) { return kernel(F.field(), polarize(F)); }

std::vector<Vec> radical_quadratic(const QuadraticForm& F) {
    const Field& f = F.field();
    auto rad = radical_bilinear(F);
    if (f.characteristic() != 2) return rad;
    // On Rad B, F(sum c_i w_i) = sum c_i^2 F(w_i) = (sum c_i sqrt(F(w_i)))^2, so the
    // zero set is the kernel of the linear functional c -> sum c_i sqrt(F(w_i)).
    std::vector<Elem> s(rad.size());
    for (std::size_t i = 0; i < rad.size(); ++i) s[i] = F(rad[i]);
    auto pivot = std::find_if(s.begin(), s.end(), [](Elem x) { return !x.is_zero(); });
    if (pivot == s.end()) return rad;
    const auto j = static_cast<std::size_t>(pivot - s.begin());
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rad.size(); ++i) {
        if (i == j) continue;
        const Elem t = f.sqrt_char2(f.div(s[i], s[j]));
        out.push_back(add(f, rad[i], scale(f, t, rad[j])));
    }
    return out;
}

int rank(const QuadraticForm& F) {
    require_nonzero(F);
    return F.variables() - static_cast<int>(radical_quadratic(F).size());
}

LinearSubspace singular_locus(const QuadraticForm& F) {
    require_nonzero(F);
    return LinearSubspace::span(F.field(), F.ambient(), radical_quadratic(F));
}

// ---------------------------------------------------------------------------
// Points and counts

PointSet point_set(const QuadraticForm& F, const ProjectiveSpace& space) {
    if (space.dimension() != F.ambient()) throw Error(ErrorKind::DimensionMismatch, "space and form ambients differ");
    PointSet out(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (F(space.point(i)).is_zero()) out.insert(i);
    }
    return out;
}

PointSet point_set(const QuadraticForm& F) { return point_set(F, ProjectiveSpace(F.field_ref(), F.ambient())); }

namespace {

void check_class_rank(QuadricClass c, int r, int N) {
    bool ok = r >= 1 && r <= N + 1;
    switch (c) {
        case QuadricClass::DoubleHyperplane: ok = ok && r == 1; break;
        case QuadricClass::HyperplanePair:
        case QuadricClass::ConjugatePair: ok = ok && r == 2; break;
        case QuadricClass::Parabolic: ok = ok && r >= 3 && r % 2 == 1; break;
        case QuadricClass::Hyperbolic:
        case QuadricClass::Elliptic: ok = ok && r >= 4 && r % 2 == 0; break;
    }
    if (!ok) {
        throw Error(ErrorKind::InconsistentClassRank,
                    std::string(to_string(c)) + " cannot have rank " + std::to_string(r) + " in P^" + std::to_string(N));
    }
}

}  // namespace

Count expected_point_count(QuadricClass c, int r, int N, Count q) {
    check_class_rank(c, r, N);
    switch (c) {
        case QuadricClass::DoubleHyperplane:
        case QuadricClass::Parabolic: return projective_point_count(q, N - 1);
        case QuadricClass::HyperplanePair:
            return checked_add(checked_mul(2, ipow(q, N - 1)), projective_point_count(q, N - 2));
        case QuadricClass::ConjugatePair: return projective_point_count(q, N - 2);
        case QuadricClass::Hyperbolic: return checked_add(projective_point_count(q, N - 1), ipow(q, N - r / 2));
        case QuadricClass::Elliptic: return projective_point_count(q, N - 1) - ipow(q, N - r / 2);
    }
    return 0;
}

int expected_projective_index(QuadricClass c, int r, int N) {
    check_class_rank(c, r, N);
    switch (c) {
        case QuadricClass::DoubleHyperplane:
        case QuadricClass::HyperplanePair: return N - 1;
        case QuadricClass::ConjugatePair: return N - 2;
        case QuadricClass::Parabolic: return N - (r - 1) / 2 - 1;
        case QuadricClass::Hyperbolic: return N - r / 2;
        case QuadricClass::Elliptic: return N - r / 2 - 1;
    }
    return 0;
}

ClassificationReport classify(const QuadraticForm& F, const ProjectiveSpace& space) {
    require_nonzero(F);
    ClassificationReport rep;
    rep.radical_bilinear = radical_bilinear(F);
    rep.radical_quadratic = radical_quadratic(F);
    rep.rank = F.variables() - static_cast<int>(rep.radical_quadratic.size());
    rep.singular_locus = LinearSubspace::span(F.field(), F.ambient(), rep.radical_quadratic);
    rep.point_count = point_set(F, space).size();

    const int N = F.ambient();
    const int r = rep.rank;
    const auto q = static_cast<Count>(F.field().order());
    std::vector<QuadricClass> candidates;
    if (r == 1) {
        candidates = {QuadricClass::DoubleHyperplane};
    } else if (r == 2) {
        candidates = {QuadricClass::HyperplanePair, QuadricClass::ConjugatePair};
    } else if (r % 2 == 1) {
        candidates = {QuadricClass::Parabolic};
    } else {
        candidates = {QuadricClass::Hyperbolic, QuadricClass::Elliptic};
    }
    for (auto c : candidates) {
        if (expected_point_count(c, r, N, q) == rep.point_count) {
            rep.klass = c;
            rep.projective_index = expected_projective_index(c, r, N);
            return rep;
        }
    }
    throw Error(ErrorKind::InternalInconsistency,
                "rank " + std::to_string(r) + " with " + std::to_string(rep.point_count) + " points matches no class");
}

ClassificationReport classify(const QuadraticForm& F) {
    require_nonzero(F);
    return classify(F, ProjectiveSpace(F.field_ref(), F.ambient()));
}

// ---------------------------------------------------------------------------
// Changes of variables and sections

QuadraticForm pullback(const QuadraticForm& F, const std::vector<Vec>& columns) {
    if (columns.empty()) throw Error(ErrorKind::OutOfRange, "pullback to an empty coordinate system");
    const int k = static_cast<int>(columns.size());
    QuadraticForm G(F.field_ref(), k - 1);
    for (int i = 0; i < k; ++i) {
        const auto& ci = columns[static_cast<std::size_t>(i)];
        if (ci.size() != static_cast<std::size_t>(F.variables())) throw Error(ErrorKind::DimensionMismatch, "column length");
        G.set(i, i, F(ci));
        for (int j = i + 1; j < k; ++j) G.set(i, j, bilinear(F, ci, columns[static_cast<std::size_t>(j)]));
    }
    return G;
}

QuadraticForm substitute(const QuadraticForm& F, const Matrix& T) {
    const auto n = static_cast<std::size_t>(F.variables());
    if (T.rows() != n || T.cols() != n) throw Error(ErrorKind::DimensionMismatch, "transform size");
    std::vector<Vec> cols(n, Vec(n));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) cols[c][r] = T(r, c);
    }
    return pullback(F, cols);
}

std::vector<Vec> hyperplane_chart(const Field& f, const Vec& L) {
    auto last = std::find_if(L.rbegin(), L.rend(), [](Elem x) { return !x.is_zero(); });
    if (last == L.rend()) throw Error(ErrorKind::ZeroLinearForm, "hyperplane of the zero linear form");
    const auto k = static_cast<std::size_t>(L.rend() - last) - 1;
    const Elem lk_inv = f.inv(L[k]);
    std::vector<Vec> chart;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (i == k) continue;
        Vec v = unit(L.size(), i);
        v[k] = f.neg(f.mul(L[i], lk_inv));
        chart.push_back(std::move(v));
    }
    return chart;
}

QuadraticForm restrict_to_hyperplane(const QuadraticForm& F, const Vec& L) {
    if (L.size() != static_cast<std::size_t>(F.variables())) throw Error(ErrorKind::DimensionMismatch, "linear form length");
    if (F.ambient() < 1) throw Error(ErrorKind::OutOfRange, "no hyperplane section of P^0");
    return pullback(F, hyperplane_chart(F.field(), L));
}

LinearSubspace tangent_space(const QuadraticForm& F, const Point& P) {
    if (!evaluate(F, P).is_zero()) throw Error(ErrorKind::PointNotOnQuadric, "tangent space at a point off the quadric");
    const auto n = static_cast<std::size_t>(F.variables());
    Vec gradient(n);
    for (std::size_t i = 0; i < n; ++i) gradient[i] = bilinear(F, P, unit(n, i));
    if (is_zero(gradient)) return LinearSubspace::whole(F.field(), F.ambient());
    Matrix eq(0, n);
    eq.append_row(gradient);
    return LinearSubspace::span(F.field(), F.ambient(), kernel(F.field(), eq));
}

int projective_index_bruteforce(const QuadraticForm& F) {
    require_nonzero(F);
    if (F.ambient() > 3) throw Error(ErrorKind::AmbientTooLarge, "brute-force projective index needs N <= 3");
    for (int dim = F.ambient() - 1; dim >= 0; --dim) {
        for (const auto& s : enumerate_subspaces(F.field(), F.ambient(), dim)) {
            if (pullback(F, s.basis).is_zero()) return dim;
        }
    }
    return -1;
}

// ---------------------------------------------------------------------------
// Canonical forms

QuadraticForm canonical_form(const FieldRef& field, int N, QuadricClass c, int r) {
    check_class_rank(c, r, N);
    QuadraticForm F(field, N);
    const auto [alpha, d] = canonical_irreducible_binary_constants(*field);
    int next = 0;
    switch (c) {
        case QuadricClass::DoubleHyperplane:
        case QuadricClass::Parabolic:
            F.set(0, 0, Field::one());
            next = 1;
            break;
        case QuadricClass::ConjugatePair:
        case QuadricClass::Elliptic:
            F.set(0, 0, Field::one());
            F.set(0, 1, alpha);
            F.set(1, 1, d);
            next = 2;
            break;
        case QuadricClass::HyperplanePair:
        case QuadricClass::Hyperbolic: next = 0; break;
    }
    for (; next + 1 < r; next += 2) F.set(next, next + 1, Field::one());
    return F;
}

namespace {

Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Field::one();
    return m;
}

// Leading (first nonzero) column of a nonzero row.
std::size_t leading_index(const Vec& v) {
    return static_cast<std::size_t>(std::find_if(v.begin(), v.end(), [](Elem x) { return !x.is_zero(); }) - v.begin());
}

std::vector<Vec> all_nonzero_combinations(const Field& f, const std::vector<Vec>& basis) {
    std::vector<Vec> out;
    const std::size_t k = basis.size();
    const Count total = ipow(static_cast<Count>(f.order()), static_cast<int>(k));
    for (Count idx = 1; idx < total; ++idx) {
        Count rest = idx;
        Vec v(basis.front().size(), Field::zero());
        for (std::size_t i = k; i-- > 0;) {
            const Elem c = f.element(static_cast<int>(rest % static_cast<Count>(f.order())));
            rest /= static_cast<Count>(f.order());
            if (!c.is_zero()) v = add(f, v, scale(f, c, basis[i]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

CanonicalizationResult canonicalize(const QuadraticForm& F) {
    require_nonzero(F);
    const Field& f = F.field();
    const auto n = static_cast<std::size_t>(F.variables());

    // Split off the radical: Rad F plus the unit vectors at non-pivot columns span everything.
    const auto rad_rows = span_basis(f, radical_quadratic(F), n);
    std::vector<bool> pivot(n, false);
    for (const auto& row : rad_rows) pivot[leading_index(row)] = true;
    std::vector<Vec> complement;
    for (std::size_t j = 0; j < n; ++j) {
        if (!pivot[j]) complement.push_back(unit(n, j));
    }
    const auto r = complement.size();
    const QuadraticForm G = pullback(F, complement);
    const Matrix gram = polarize(G);
    auto gram_row = [&](const Vec& u) {
        Vec out(r, Field::zero());
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t i = 0; i < r; ++i) out[j] = f.add(out[j], f.mul(u[i], gram(i, j)));
        }
        return out;
    };

    // Peel hyperbolic pairs (u, v): G(u) = G(v) = 0, B(u, v) = 1.
    std::vector<std::pair<Vec, Vec>> pairs;
    std::vector<Vec> constraints;
    auto current_basis = [&]() {
        if (constraints.empty()) {
            std::vector<Vec> all;
            for (std::size_t i = 0; i < r; ++i) all.push_back(unit(r, i));
            return all;
        }
        return kernel(f, Matrix::from_rows(constraints, r));
    };
    const auto candidates = enumerate_points(f, static_cast<int>(r) - 1);
    for (;;) {
        const auto U = current_basis();
        if (U.size() < 2) break;
        bool found = false;
        for (const auto& u : candidates) {
            if (!G(u).is_zero()) continue;
            if (std::any_of(constraints.begin(), constraints.end(), [&](const Vec& c) { return !dot(f, c, u).is_zero(); })) {
                continue;
            }
            const Vec bu = gram_row(u);
            for (const auto& b : U) {
                const Elem beta = dot(f, bu, b);
                if (beta.is_zero()) continue;
                Vec v = scale(f, f.inv(beta), b);
                v = add(f, v, scale(f, f.neg(G(v)), u));
                constraints.push_back(bu);
                constraints.push_back(gram_row(v));
                pairs.emplace_back(u, std::move(v));
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) break;
    }

    const auto rem = current_basis();
    std::vector<Vec> cols;
    Elem lambda = Field::one();
    QuadricClass klass{};
    if (rem.empty()) {
        klass = pairs.size() == 1 ? QuadricClass::HyperplanePair : QuadricClass::Hyperbolic;
    } else if (rem.size() == 1) {
        lambda = G(rem[0]);
        if (lambda.is_zero()) throw Error(ErrorKind::InternalInconsistency, "isotropic vector left in the radical complement");
        cols.push_back(rem[0]);
        klass = r == 1 ? QuadricClass::DoubleHyperplane : QuadricClass::Parabolic;
    } else if (rem.size() == 2) {
        const auto [alpha, d] = canonical_irreducible_binary_constants(f);
        const auto plane = all_nonzero_combinations(f, rem);
        bool found = false;
        for (const auto& a : plane) {
            lambda = G(a);
            if (lambda.is_zero()) throw Error(ErrorKind::InternalInconsistency, "anisotropic remainder has a zero");
            for (const auto& b : plane) {
                if (bilinear(G, a, b) == f.mul(lambda, alpha) && G(b) == f.mul(lambda, d)) {
                    cols.push_back(a);
                    cols.push_back(b);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) throw Error(ErrorKind::InternalInconsistency, "anisotropic plane not similar to the norm form");
        klass = r == 2 ? QuadricClass::ConjugatePair : QuadricClass::Elliptic;
    } else {
        throw Error(ErrorKind::InternalInconsistency, "anisotropic remainder of dimension > 2");
    }
    for (const auto& [u, v] : pairs) {
        cols.push_back(u);
        cols.push_back(scale(f, lambda, v));
    }

    const int rk = static_cast<int>(r);
    const QuadraticForm target = canonical_form(F.field_ref(), F.ambient(), klass, rk);
    if (F == target) return {klass, rk, identity(n), Field::one()};

    Matrix T(n, n);
    for (std::size_t c = 0; c < r; ++c) {
        for (std::size_t i = 0; i < r; ++i) {
            if (cols[c][i].is_zero()) continue;
            for (std::size_t row = 0; row < n; ++row) {
                T(row, c) = f.add(T(row, c), f.mul(cols[c][i], complement[i][row]));
            }
        }
    }
    for (std::size_t k = 0; k < rad_rows.size(); ++k) {
        for (std::size_t row = 0; row < n; ++row) T(row, r + k) = rad_rows[k][row];
    }
    if (!(substitute(F, T) == target.scaled(lambda))) {
        throw Error(ErrorKind::InternalInconsistency, "canonical transform failed its identity check");
    }
    return {klass, rk, std::move(T), lambda};
}

// ---------------------------------------------------------------------------
// Form enumeration

Count form_count(Count q, int N) { return ipow(q, static_cast<int>(QuadraticForm::monomial_count(N))); }

Count projective_form_count(Count q, int N) { return (form_count(q, N) - 1) / (q - 1); }

QuadraticForm form_from_index(const FieldRef& field, int N, Count index) {
    const auto m = QuadraticForm::monomial_count(N);
    const auto q = static_cast<Count>(field->order());
    std::vector<Elem> c(m);
    for (std::size_t k = m; k-- > 0;) {
        c[k] = Elem{static_cast<std::uint16_t>(index % q)};
        index /= q;
    }
    return QuadraticForm(field, N, std::move(c));
}

QuadraticForm projective_form_from_index(const FieldRef& field, int N, Count index) {
    const auto m = QuadraticForm::monomial_count(N);
    const auto q = static_cast<Count>(field->order());
    // Blocks by leading position, latest leading position first, so the order is
    // lexicographic on the coefficient vectors.
    for (std::size_t lead = m; lead-- > 0;) {
        const Count block = ipow(q, static_cast<int>(m - 1 - lead));
        if (index >= block) {
            index -= block;
            continue;
        }
        std::vector<Elem> c(m, Field::zero());
        c[lead] = Field::one();
        for (std::size_t k = m; k-- > lead + 1;) {
            c[k] = Elem{static_cast<std::uint16_t>(index % q)};
            index /= q;
        }
        return QuadraticForm(field, N, std::move(c));
    }
    throw Error(ErrorKind::OutOfRange, "projective form index out of range");
}

QuadraticForm normalize_scalar(const QuadraticForm& F) {
    const auto& c = F.coeffs();
    auto lead = std::find_if(c.begin(), c.end(), [](Elem x) { return !x.is_zero(); });
    if (lead == c.end()) return F;
    return F.scaled(F.field().inv(*lead));
}

}  // namespace qprm
