#include "trigonal/canonical_ideal.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "trigonal/error.hpp"

namespace trigonal {

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const int da = a[0] + a[1] + a[2] + a[3];
    const int db = b[0] + b[1] + b[2] + b[3];
    if (da != db) return da > db;
    return a > b;
}

std::vector<Monomial> monomials(int degree) {
    std::vector<Monomial> out;
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b)
            for (int c = degree - a - b; c >= 0; --c) out.push_back({a, b, c, degree - a - b - c});
    return out;
}

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const int e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------------------
// Form

Form::Form(std::map<Monomial, Scalar, GrlexGreater> terms) : terms_(std::move(terms)) {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

Scalar Form::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int Form::degree() const {
    if (terms_.empty()) return -1;
    const Monomial& m = terms_.begin()->first;
    return m[0] + m[1] + m[2] + m[3];
}

Scalar Form::operator()(const ProjPoint& z) const {
    Scalar total;
    for (const auto& [m, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < 4; ++i) t *= z[i].pow(m[i]);
        total += t;
    }
    return total;
}

Form Form::normalized_at(const Monomial& m) const {
    const Scalar c = coeff(m);
    if (c.is_zero()) throw DegenerateInput("cannot normalize at a vanishing coefficient " + monomial_str(m));
    const Scalar inv = c.inverse();
    auto terms = terms_;
    for (auto& [mono, coeff] : terms) coeff *= inv;
    return Form(std::move(terms));
}

Form Form::operator*(const Form& o) const {
    std::map<Monomial, Scalar, GrlexGreater> out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            for (std::size_t i = 0; i < 4; ++i) m[i] = ma[i] + mb[i];
            out[m] += ca * cb;
        }
    return Form(std::move(out));
}

namespace {

std::string term_text(const Scalar& c, const Monomial& m, bool first) {
    std::string sign;
    std::string mag;
    if (c.is_rational()) {
        const bool neg = sgn(c.rational_part()) < 0;
        sign = neg ? "-" : (first ? "" : "+");
        const Rational a = abs(c.rational_part());
        if (a != 1) mag = format_rational(a) + "*";
    } else {
        sign = first ? "" : "+";
        mag = "(" + c.str() + ")*";
    }
    return sign + mag + monomial_str(m);
}

}  // namespace

std::string Form::str(const Monomial& first) const {
    if (terms_.empty()) return "0";
    std::string out;
    auto it = terms_.find(first);
    if (it != terms_.end()) out = term_text(it->second, it->first, true);
    for (const auto& [m, c] : terms_) {
        if (m == first) continue;
        out += term_text(c, m, out.empty());
    }
    return out;
}

std::string Form::str() const { return terms_.empty() ? "0" : str(terms_.begin()->first); }

std::string QuadricForm::str() const { return form.str({0, 0, 2, 0}); }

std::string CubicForm::str() const { return form.str(); }

// ---------------------------------------------------------------------------------------
// Sampling and evaluation

std::vector<Scalar> sample_fibers(const CurveParams& u, int count, std::uint64_t seed,
                                  const std::vector<Scalar>& exclude) {
    std::mt19937_64 rng(seed);
    std::set<Scalar> seen(exclude.begin(), exclude.end());
    std::vector<Scalar> out;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > 100000) throw StructuralError("could not sample enough fibers");
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 7) + 1;
        const Scalar x0(Rational(num, den));
        if (u.is_branch(x0) || seen.contains(x0)) continue;
        seen.insert(x0);
        out.push_back(x0);
    }
    return out;
}

std::array<Vector, 3> fiber_values(const CurveParams& u, const std::vector<Monomial>& monos, const Scalar& x0,
                                   const ProjPoint& basis_scale) {
    const Scalar q0 = u.q_poly()(x0);
    if (q0.is_zero()) throw DomainError("fiber over a branch value");
    std::array<Vector, 3> rows;
    for (auto& r : rows) r.assign(monos.size(), Scalar(0));
    for (std::size_t n = 0; n < monos.size(); ++n) {
        const Monomial& m = monos[n];
        // z0 = s0 y, z1 = s1, z2 = s2 x0, z3 = s3 x0^2; y^3 = q0.
        Scalar v = q0.pow(m[0] / 3) * x0.pow(m[2] + 2 * m[3]);
        for (std::size_t i = 0; i < 4; ++i) v *= basis_scale[i].pow(m[i]);
        rows[static_cast<std::size_t>(m[0] % 3)][n] = v;
    }
    return rows;
}

std::array<Scalar, 3> evaluate_on_fiber(const CurveParams& u, const Form& f, const Scalar& x0) {
    std::vector<Monomial> monos;
    Vector coeffs;
    for (const auto& [m, c] : f.terms()) {
        monos.push_back(m);
        coeffs.push_back(c);
    }
    const auto rows = fiber_values(u, monos, x0, {1, 1, 1, 1});
    return {dot(rows[0], coeffs), dot(rows[1], coeffs), dot(rows[2], coeffs)};
}

Matrix evaluation_matrix(const CurveParams& u, const std::vector<Monomial>& monos, const std::vector<Scalar>& xs,
                         const ProjPoint& basis_scale) {
    Matrix m;
    for (const auto& x0 : xs)
        for (const auto& row : fiber_values(u, monos, x0, basis_scale)) m.append_row(row);
    return m;
}

namespace {

Form form_from(const std::vector<Monomial>& monos, const Vector& v) {
    std::map<Monomial, Scalar, GrlexGreater> terms;
    for (std::size_t n = 0; n < monos.size(); ++n) terms[monos[n]] = v[n];
    return Form(std::move(terms));
}

Vector coefficients_in(const std::vector<Monomial>& monos, const Form& f) {
    Vector v;
    v.reserve(monos.size());
    for (const auto& m : monos) v.push_back(f.coeff(m));
    return v;
}

// Sym^2 needs more than deg 2K = 12 points and Sym^3 more than deg 3K = 18 points for the
// evaluation map to be injective on the image; three points per fiber.
constexpr int kSym2Fibers = 6;
constexpr int kSym3Fibers = 10;

const Monomial kZ2Squared{0, 0, 2, 0};

Form quadric_on(const CurveParams& u, const std::vector<Scalar>& xs, const ProjPoint& basis_scale) {
    const auto monos = monomials(2);
    const auto kernel = kernel_basis(evaluation_matrix(u, monos, xs, basis_scale));
    if (kernel.size() != 1) {
        throw StructuralError("Sym^2 kernel has dimension " + std::to_string(kernel.size()) + ", expected 1");
    }
    return form_from(monos, kernel.front()).normalized_at(kZ2Squared);
}

}  // namespace

QuadricForm sym2_relation(const CurveParams& u, const ProjPoint& basis_scale, std::uint64_t seed) {
    const auto first = sample_fibers(u, kSym2Fibers, seed);
    const auto second = sample_fibers(u, kSym2Fibers, seed + 1, first);
    const Form q = quadric_on(u, first, basis_scale);
    if (!(quadric_on(u, second, basis_scale) == q)) throw StructuralError("Sym^2 kernel differs between samples");
    QuadricForm out;
    out.form = q;
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < 4; ++i)
            for (int e = 0; e < m[i]; ++e) idx.push_back(i);
        if (idx[0] == idx[1]) {
            out.gram(idx[0], idx[0]) = c;
        } else {
            const Scalar half = c * Scalar(Rational(1, 2));
            out.gram(idx[0], idx[1]) = half;
            out.gram(idx[1], idx[0]) = half;
        }
    }
    return out;
}

Form reduce_mod_quadric(const Form& f) {
    std::map<Monomial, Scalar, GrlexGreater> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial r = m;
        const int k = std::min(r[1], r[3]);
        r[1] -= k;
        r[3] -= k;
        r[2] += 2 * k;
        out[r] += c;
    }
    return Form(std::move(out));
}

namespace {

std::vector<Vector> sym3_kernel(const CurveParams& u, const std::vector<Scalar>& xs) {
    return kernel_basis(evaluation_matrix(u, monomials(3), xs, {1, 1, 1, 1}));
}

Form cubic_on(const CurveParams& u, const std::vector<Scalar>& xs) {
    const auto monos = monomials(3);
    const auto kernel = sym3_kernel(u, xs);
    if (kernel.size() != 5) {
        throw StructuralError("Sym^3 kernel has dimension " + std::to_string(kernel.size()) + ", expected 5");
    }
    std::vector<Vector> reduced;
    for (const auto& v : kernel) reduced.push_back(coefficients_in(monos, reduce_mod_quadric(form_from(monos, v))));
    const Echelon e = rref(Matrix::from_rows(reduced));
    if (e.pivots.size() != 1) {
        throw StructuralError("cubic generator is not unique modulo the quadric (rank " +
                              std::to_string(e.pivots.size()) + ")");
    }
    // The reduced row echelon form already has leading coefficient 1 at the largest monomial.
    return form_from(monos, e.reduced.row(0));
}

}  // namespace

int sym3_kernel_dimension(const CurveParams& u, std::uint64_t seed) {
    return static_cast<int>(sym3_kernel(u, sample_fibers(u, kSym3Fibers, seed)).size());
}

CubicForm canonical_cubic(const CurveParams& u, std::uint64_t seed) {
    const auto first = sample_fibers(u, kSym3Fibers, seed);
    const auto second = sample_fibers(u, kSym3Fibers, seed + 1, first);
    const Form c = cubic_on(u, first);
    if (!(cubic_on(u, second) == c)) throw StructuralError("cubic generator differs between samples");
    return CubicForm{c};
}

bool in_quadric_span(const Form& cubic, const Form& quadric) {
    const auto monos = monomials(3);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < 4; ++i) {
        Monomial m{0, 0, 0, 0};
        m[i] = 1;
        rows.push_back(coefficients_in(monos, Form({{m, Scalar(1)}}) * quadric));
    }
    const std::size_t base = rank(Matrix::from_rows(rows));
    rows.push_back(coefficients_in(monos, cubic));
    return rank(Matrix::from_rows(rows)) == base;
}

int noether_rank(const SymTensor& t) { return static_cast<int>(rank(t.m)); }

SymTensor veronese(const ProjPoint& v) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw DomainError("Veronese image of the zero vector");
    }
    SymTensor t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) t.m(i, j) = v[i] * v[j];
    return t;
}

bool schiffer_test(const CurveParams& u, const ProjPoint& v) {
    if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) {
        throw DomainError("Schiffer test of the zero vector");
    }
    if (!sym2_relation(u)(v).is_zero()) return false;
    return canonical_cubic(u)(v).is_zero();
}

}  // namespace trigonal
