#include "trigonal/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trigonal/error.hpp"
#include "trigonal/series.hpp"

namespace trigonal {

namespace {

constexpr int kWide = 1 << 20;

void require_index(int j) {
    if (j < 1 || j > 3) throw DomainError("parameter index j must be 1, 2 or 3");
}

void require_basis(int i) {
    if (i < 0 || i > 3) throw DomainError("basis index must be in 0..3");
}

void require_nonzero(const TangentVector& xi) {
    if (xi.is_zero()) throw ZeroTangent("tangent vector is zero");
}

}  // namespace

// ---------------------------------------------------------------------------------------

TangentVector TangentVector::basis(int j) {
    require_index(j);
    TangentVector t;
    t.a[static_cast<std::size_t>(j - 1)] = Scalar(1);
    return t;
}

bool TangentVector::is_zero() const { return a[0].is_zero() && a[1].is_zero() && a[2].is_zero(); }

std::string TangentVector::str() const { return "(" + a[0].str() + ", " + a[1].str() + ", " + a[2].str() + ")"; }

Matrix PairingMatrix::as_matrix() const {
    Matrix m(4, 4);
    for (std::size_t l = 0; l < 4; ++l)
        for (std::size_t k = 0; k < 4; ++k) m(l, k) = entry[l][k];
    return m;
}

std::array<Scalar, 3> covector(const CurveParams& u, const TangentVector& xi) {
    std::array<Scalar, 3> c;
    for (int j = 1; j <= 3; ++j) {
        const Scalar& aj = xi.a[static_cast<std::size_t>(j - 1)];
        if (aj.is_zero()) continue;
        const Scalar w = aj * u.q_prime_at_u(j).inverse();
        Scalar power(1);
        for (std::size_t l = 0; l < 3; ++l) {
            c[l] += w * power;
            power *= u.u(j);
        }
    }
    return c;
}

Matrix matrix_A(const CurveParams& u) {
    Matrix A(3, 3);
    for (int j = 1; j <= 3; ++j) {
        const Scalar inv = u.q_prime_at_u(j).inverse();
        const auto r = static_cast<std::size_t>(j - 1);
        A(r, 0) = inv;
        A(r, 1) = u.u(j) * inv;
        A(r, 2) = u.u(j) * u.u(j) * inv;
    }
    return A;
}

PairingMatrix pairing_matrix(const CurveParams& u, const TangentVector& xi) {
    const auto c = covector(u, xi);
    PairingMatrix m;
    for (std::size_t k = 1; k < 4; ++k) {
        m.entry[0][k] = c[k - 1];
        m.entry[k][0] = c[k - 1];
    }
    return m;
}

// ---------------------------------------------------------------------------------------
// Residue oracle

namespace {

/// w_i / dy in the local coordinate y at a branch point, given s = x - center.
LocalSeries form_over_dy(const Scalar& center, const LocalSeries& s, int i) {
    const LocalSeries ds = s.derivative();
    if (i == 0) return ds * LocalSeries::monomial(-1, Scalar(1), kWide);
    const LocalSeries x = LocalSeries::constant(center, kWide) + s;
    return x.pow(i - 1) * ds * LocalSeries::monomial(-2, Scalar(1), kWide);
}

}  // namespace

Scalar raw_residue_pairing(const CurveParams& u, int j, int l, int k, int series_order) {
    require_index(j);
    require_basis(l);
    require_basis(k);
    if (series_order < 12) throw DomainError("series order must be at least 12");
    const Scalar& center = u.u(j);
    const LocalSeries s = branch_coordinate(u.q_poly(), center, series_order + 6);
    const LocalSeries S = form_over_dy(center, s, l);
    // d_j w_0 = w_0 / (3 (x - u_j)), d_j w_k = 2 w_k / (3 (x - u_j)).
    const Scalar factor = k == 0 ? Scalar(Rational(1, 3)) : Scalar(Rational(2, 3));
    const LocalSeries P = form_over_dy(center, s, k) * s.inverse() * factor;
    if (P.order() <= 0) throw StructuralError("insufficient precision for the principal part");
    const LocalSeries principal = P.principal_part();
    if (!principal.coeff(-1).is_zero()) {
        throw StructuralError("principal part of the derivative has a 1/y term at u" + std::to_string(j));
    }
    const LocalSeries T = principal.antiderivative();
    const LocalSeries integrand = S * T;
    if (integrand.order() <= -1) throw StructuralError("insufficient precision for the residue");
    // 2 pi i Res = (6 pi i) * Res / 3
    return integrand.residue() * Scalar(Rational(1, 3));
}

int residue_sign() {
    static const int sign = [] {
        const CurveParams ref = CurveParams::validate(Scalar(0), Scalar(2), Scalar(3));
        const Scalar raw = raw_residue_pairing(ref, 1, 0, 1);
        const Scalar ratio = ref.q_prime_at_u(1).inverse() / raw;
        if (ratio == Scalar(1)) return 1;
        if (ratio == Scalar(-1)) return -1;
        throw StructuralError("residue oracle differs from the closed form by " + ratio.str());
    }();
    return sign;
}

Scalar residue_pairing(const CurveParams& u, int j, int l, int k, int series_order) {
    return raw_residue_pairing(u, j, l, k, series_order) * Scalar(residue_sign());
}

std::complex<double> numeric_residue_pairing(const CurveParams& u, int j, int l, int k,
                                             const NumericOptions& opts) {
    require_index(j);
    require_basis(l);
    require_basis(k);
    using C = std::complex<double>;
    const UniPoly& Q = u.q_poly();
    const UniPoly& dQ = u.q_derivative();
    auto eval = [](const UniPoly& p, C x) {
        C acc = 0;
        for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(i).to_complex();
        return acc;
    };
    const C center = u.u(j).to_complex();
    const C slope = eval(dQ, center);
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& b : u.branch_x()) {
        if (b == u.u(j)) continue;
        gap = std::min(gap, std::abs(b.to_complex() - center));
    }
    // Keep y inside the disk where x(y) is analytic: |y|^3 at most half of min |Q| on |x - u_j| = gap / 4.
    double q_min = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 64; ++m) {
        q_min = std::min(q_min, std::abs(eval(Q, center + std::polar(gap / 4.0, 2.0 * std::numbers::pi * m / 64))));
    }
    const double rho = std::cbrt(q_min / 2.0);

    auto x_of_y = [&](C y) {
        const C y3 = y * y * y;
        C x = center + y3 / slope;
        for (int it = 0; it < 60; ++it) {
            const C step = (eval(Q, x) - y3) / eval(dQ, x);
            x -= step;
            if (std::abs(step) <= 1e-16 * (1.0 + std::abs(x))) break;
        }
        return x;
    };
    // w_i / dy with dx/dy = 3 y^2 / Q'(x).
    auto over_dy = [&](int i, C x, C y) {
        const C dq = eval(dQ, x);
        if (i == 0) return 3.0 * y / dq;
        return std::pow(x, i - 1) * 3.0 / dq;
    };

    const int n = opts.nodes;
    const double factor = k == 0 ? 1.0 / 3.0 : 2.0 / 3.0;
    std::vector<C> ys(static_cast<std::size_t>(n)), xs(ys.size());
    for (int m = 0; m < n; ++m) {
        const double theta = 2.0 * std::numbers::pi * m / n;
        ys[static_cast<std::size_t>(m)] = std::polar(rho, theta);
        xs[static_cast<std::size_t>(m)] = x_of_y(ys[static_cast<std::size_t>(m)]);
    }
    // Coefficients p_{-1}, ..., p_{-terms} of d_j w_k / dy by the trapezoid rule.
    std::vector<C> principal(static_cast<std::size_t>(opts.principal_terms) + 1);
    for (int m = 0; m < n; ++m) {
        const C y = ys[static_cast<std::size_t>(m)];
        const C x = xs[static_cast<std::size_t>(m)];
        const C P = factor * over_dy(k, x, y) / (x - center);
        for (int e = 1; e <= opts.principal_terms; ++e) principal[static_cast<std::size_t>(e)] += P * std::pow(y, e);
    }
    double scale = 0;
    for (auto& p : principal) {
        p /= static_cast<double>(n);
        scale = std::max(scale, std::abs(p));
    }
    if (std::abs(principal[1]) > 1e-9 * std::max(1.0, scale)) {
        throw StructuralError("numeric principal part has a 1/y term");
    }
    C residue = 0;
    for (int m = 0; m < n; ++m) {
        const C y = ys[static_cast<std::size_t>(m)];
        const C x = xs[static_cast<std::size_t>(m)];
        C T = 0;
        for (int e = 2; e <= opts.principal_terms; ++e) {
            T += principal[static_cast<std::size_t>(e)] * std::pow(y, 1 - e) / static_cast<double>(1 - e);
        }
        residue += over_dy(l, x, y) * T * y;
    }
    residue /= static_cast<double>(n);
    return residue / 3.0 * static_cast<double>(residue_sign());
}

// ---------------------------------------------------------------------------------------
// Kernel, conic, base locus

int ks_rank(const CurveParams& u, const TangentVector& xi) {
    return static_cast<int>(rank(pairing_matrix(u, xi).as_matrix()));
}

std::vector<Differential> kernel_W(const CurveParams& u, const TangentVector& xi) {
    require_nonzero(xi);
    const auto c = covector(u, xi);
    const auto basis = kernel_basis(Matrix::from_rows({{c[0], c[1], c[2]}}));
    if (basis.size() != 2) throw StructuralError("W_xi does not have dimension 2");
    std::vector<Differential> out;
    for (const auto& v : basis) out.push_back(Differential{Scalar(0), {v[0], v[1], v[2]}});
    return out;
}

std::vector<Differential> pairing_kernel(const PairingMatrix& m) {
    std::vector<Differential> out;
    for (const auto& v : kernel_basis(m.as_matrix())) out.push_back(Differential::from_coords({v[0], v[1], v[2], v[3]}));
    return out;
}

ConicReport conic_condition(const CurveParams& u, const TangentVector& xi) {
    require_nonzero(xi);
    if (determinant(matrix_A(u)).is_zero()) throw StructuralError("matrix A is singular");
    ConicReport r;
    r.c = covector(u, xi);
    r.value = r.c[0] * r.c[2] - r.c[1] * r.c[1];
    r.on_conic = r.value.is_zero();
    return r;
}

Divisor base_locus(const CurveParams& u, const TangentVector& xi) {
    const auto W = kernel_W(u, xi);
    const Divisor first = Divisor::min(divisor_of(u, W[0]), divisor_of(u, W[1]));
    const Differential alt0 = W[0] + W[1];
    const Differential alt1 = W[0] + W[1] * Scalar(2);
    const Divisor second = Divisor::min(divisor_of(u, alt0), divisor_of(u, alt1));
    if (!(first == second)) {
        throw StructuralError("base locus depends on the basis: " + first.str() + " vs " + second.str());
    }
    return first;
}

// ---------------------------------------------------------------------------------------
// Quadratic differentials

const std::array<std::array<int, 2>, 10>& product_index() {
    static const std::array<std::array<int, 2>, 10> idx = [] {
        std::array<std::array<int, 2>, 10> r{};
        std::size_t n = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) r[n++] = {i, j};
        return r;
    }();
    return idx;
}

KDifferential product_differential(const CurveParams& u, int i, int j) {
    const KDifferential p =
        multiply(u, KDifferential::from(Differential::omega(i)), KDifferential::from(Differential::omega(j)));
    return with_q_power(u, p, 2);
}

std::array<Scalar, 10> product_functional(const CurveParams& u, const TangentVector& xi) {
    const PairingMatrix m = pairing_matrix(u, xi);
    std::array<Scalar, 10> out;
    const Scalar half(Rational(1, 2));
    for (std::size_t n = 0; n < 10; ++n) {
        const auto [i, j] = product_index()[n];
        out[n] = (m(i, j) + m(j, i)) * half;
    }
    return out;
}

Scalar xi_functional(const CurveParams& u, const TangentVector& xi, const std::array<Scalar, 10>& coeffs) {
    const auto m = product_functional(u, xi);
    Scalar s;
    for (std::size_t n = 0; n < 10; ++n) s += m[n] * coeffs[n];
    return s;
}

namespace {

Vector flatten(const KDifferential& q, int width) {
    Vector v;
    v.reserve(static_cast<std::size_t>(3 * width));
    for (const UniPoly* c : {&q.f, &q.g, &q.h})
        for (int i = 0; i < width; ++i) v.push_back(c->coeff(i));
    return v;
}

}  // namespace

std::array<Scalar, 10> product_coordinates(const CurveParams& u, const KDifferential& q) {
    if (q.k != 2) throw DomainError("expected a quadratic differential");
    if (!is_holomorphic(u, q)) throw DomainError("quadratic differential has poles");
    const KDifferential reduced = normalize(u, q);
    if (reduced.q_power > 2) throw StructuralError("holomorphic quadratic differential over Q^3");
    const KDifferential target = with_q_power(u, reduced, 2);
    int width = 9;
    for (const UniPoly* c : {&target.f, &target.g, &target.h}) width = std::max(width, c->degree() + 1);
    Matrix m(static_cast<std::size_t>(3 * width), 10);
    for (std::size_t n = 0; n < 10; ++n) {
        const auto [i, j] = product_index()[n];
        const Vector col = flatten(product_differential(u, i, j), width);
        for (std::size_t r = 0; r < col.size(); ++r) m(r, n) = col[r];
    }
    const auto sol = solve(m, flatten(target, width));
    if (!sol) throw StructuralError("holomorphic quadratic differential outside the span of products");
    std::array<Scalar, 10> out;
    std::copy(sol->begin(), sol->end(), out.begin());
    return out;
}

Scalar xi_functional(const CurveParams& u, const TangentVector& xi, const KDifferential& q) {
    return xi_functional(u, xi, product_coordinates(u, q));
}

namespace {

/// y mod P^m lifted from y0 mod P with y^3 = Q.
UniPoly hensel_lift(const UniPoly& q, const UniPoly& modulus, const UniPoly& y0, int m) {
    if (!((y0.pow(3) - q) % modulus).is_zero()) throw StructuralError("cluster root does not satisfy y^3 = Q");
    const UniPoly target = modulus.pow(m);
    UniPoly y = y0 % target;
    for (int prec = 1; prec < m; prec *= 2) {
        const UniPoly residual = (y.pow(3) - q) % target;
        y = (y - residual * inverse_mod(UniPoly(3) * y * y % target, target)) % target;
    }
    if (!((y.pow(3) - q) % target).is_zero()) throw StructuralError("Hensel lift failed to converge");
    return y;
}

int ceil_div3(int n) { return n <= 0 ? 0 : (n + 2) / 3; }

/// Values of the linear conditions "q vanishes on D" for one quadratic differential over Q^2.
Vector vanishing_conditions(const CurveParams& u, const KDifferential& q, const Divisor& d) {
    Vector out;
    auto push_coeffs = [&out](const UniPoly& p, int count) {
        for (int i = 0; i < count; ++i) out.push_back(p.coeff(i));
    };
    // ord_b = min(3 ord f, 3 ord g + 1, 3 ord h + 2) - 2 at a branch point.
    for (const auto& [b, m] : d.branch()) {
        push_coeffs(q.f.taylor_shift(b), ceil_div3(m + 2));
        push_coeffs(q.g.taylor_shift(b), ceil_div3(m + 1));
        push_coeffs(q.h.taylor_shift(b), ceil_div3(m));
    }
    // ord at infinity = ord_t(F) + 8.
    for (int s = 0; s < 3; ++s) {
        const int m = d.infinity()[static_cast<std::size_t>(s)];
        if (m <= 0) continue;
        const int lowest = -q.numerator_pole_bound();
        const LocalSeries F = numerator_at_infinity(u, q, s, m - 8);
        for (int e = lowest; e < m - 8; ++e) out.push_back(F.coeff(e));
    }
    const UniPoly& A = d.fiber_num();
    if (A.degree() > 0) {
        push_coeffs(q.f % A, A.degree());
        push_coeffs(q.g % A, A.degree());
        push_coeffs(q.h % A, A.degree());
    }
    for (const auto& c : d.clusters()) {
        const UniPoly mod = c.modulus.pow(c.multiplicity);
        const UniPoly y = hensel_lift(u.q_poly(), c.modulus, c.y_root, c.multiplicity);
        push_coeffs((q.f + q.g * y + q.h * y * y) % mod, mod.degree());
    }
    return out;
}

}  // namespace

std::vector<std::array<Scalar, 10>> quadratic_sections(const CurveParams& u, const Divisor& d) {
    if (!d.is_effective()) throw DomainError("divisor is not effective: " + d.str());
    std::vector<Vector> columns;
    for (const auto& [i, j] : product_index()) columns.push_back(vanishing_conditions(u, product_differential(u, i, j), d));
    Matrix m(columns.front().size() + 1, 10);
    for (std::size_t n = 0; n < 10; ++n)
        for (std::size_t r = 0; r < columns[n].size(); ++r) m(r, n) = columns[n][r];
    // Fix the product relation w2^2 = w1 w3 by dropping the w1 w3 coordinate.
    m(m.rows() - 1, 6) = Scalar(1);
    std::vector<std::array<Scalar, 10>> out;
    for (const auto& v : kernel_basis(m)) {
        std::array<Scalar, 10> a;
        std::copy(v.begin(), v.end(), a.begin());
        out.push_back(a);
    }
    return out;
}

SupportReport support_report(const CurveParams& u, const TangentVector& xi, const Divisor& d) {
    require_nonzero(xi);
    SupportReport r;
    {
        std::vector<Vector> rows;
        for (const auto& [i, j] : product_index()) rows.push_back(flatten(product_differential(u, i, j), 9));
        r.h0_quadratic = static_cast<int>(rank(Matrix::from_rows(rows)));
    }
    if (r.h0_quadratic != 9) throw StructuralError("dim H^0(2K) = " + std::to_string(r.h0_quadratic));
    const auto sections = quadratic_sections(u, d);
    r.h0_twisted = static_cast<int>(sections.size());
    r.functional_rank = 0;
    for (const auto& s : sections) {
        if (!xi_functional(u, xi, s).is_zero()) {
            r.functional_rank = 1;
            break;
        }
    }
    r.supported = r.functional_rank == 0;
    return r;
}

bool supported_on(const CurveParams& u, const TangentVector& xi, const Divisor& d) {
    return support_report(u, xi, d).supported;
}

std::string to_string(CeresaVariant v) {
    switch (v) {
        case CeresaVariant::NotOnConic: return "NotOnConic";
        case CeresaVariant::OnConicNotSupported: return "OnConicNotSupported";
        case CeresaVariant::OnConicSupported: return "OnConicSupported";
    }
    return "unknown";
}

CeresaCertificate delta_nu_c_test(const CurveParams& u, const TangentVector& xi) {
    CeresaCertificate cert;
    cert.conic = conic_condition(u, xi);
    cert.kernel = kernel_W(u, xi);
    cert.base_locus = base_locus(u, xi);
    if (cert.conic.on_conic == cert.base_locus.is_empty()) {
        throw StructuralError("conic value and base locus disagree for xi = " + xi.str());
    }
    cert.support = support_report(u, xi, cert.base_locus);
    if (!cert.conic.on_conic) {
        cert.variant = CeresaVariant::NotOnConic;
    } else {
        cert.variant = cert.support.supported ? CeresaVariant::OnConicSupported : CeresaVariant::OnConicNotSupported;
    }
    return cert;
}

TangentVector cone_directions(const CurveParams& u, const P1Point& t) {
    Vector target;
    if (t.is_infinity()) {
        target = {Scalar(0), Scalar(0), Scalar(1)};
    } else {
        target = {Scalar(1), t.value(), t.value() * t.value()};
    }
    const Vector a = left_multiply(target, inverse(matrix_A(u)));
    return TangentVector{{a[0], a[1], a[2]}};
}

// ---------------------------------------------------------------------------------------
// Probe over r^3 = a

namespace {

/// p + q r + s r^2 with r^3 = a, coefficients rational functions of a.
struct CubeRootExt {
    RatFunc p, q, s;

    static RatFunc a() { return RatFunc::x(); }

    CubeRootExt operator+(const CubeRootExt& o) const { return {p + o.p, q + o.q, s + o.s}; }
    CubeRootExt operator-(const CubeRootExt& o) const { return {p - o.p, q - o.q, s - o.s}; }
    CubeRootExt operator*(const CubeRootExt& o) const {
        return {p * o.p + a() * (q * o.s + s * o.q), p * o.q + q * o.p + a() * s * o.s, p * o.s + q * o.q + s * o.p};
    }
    CubeRootExt operator*(const Scalar& c) const { return {p * RatFunc(c), q * RatFunc(c), s * RatFunc(c)}; }
    CubeRootExt inverse() const {
        const RatFunc n = p.pow(3) + a() * q.pow(3) + a().pow(2) * s.pow(3) - RatFunc(3) * a() * p * q * s;
        if (n.is_zero()) throw DegenerateInput("inverse of zero in the cube-root extension");
        const RatFunc inv = n.inverse();
        return {(p * p - a() * q * s) * inv, (a() * s * s - p * q) * inv, (q * q - p * s) * inv};
    }
    bool in_base() const { return q.is_zero() && s.is_zero(); }
};

}  // namespace

Qz24Report qz24_probe() {
    const CubeRootExt one{RatFunc(1), RatFunc(), RatFunc()};
    std::array<CubeRootExt, 3> uj;
    for (int j = 0; j < 3; ++j) uj[static_cast<std::size_t>(j)] = CubeRootExt{RatFunc(), RatFunc(1), RatFunc()} * Scalar::zeta_power(j);
    Qz24Report report;
    std::array<CubeRootExt, 3> c{};
    for (std::size_t j = 0; j < 3; ++j) {
        const CubeRootExt& x = uj[j];
        CubeRootExt dq = x * x * x - one;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != j) dq = dq * (x - uj[i]);
        const CubeRootExt xi = (x * x * Scalar(3)).inverse();
        const CubeRootExt weight = xi * dq.inverse();
        CubeRootExt power = one;
        for (std::size_t l = 0; l < 3; ++l) {
            c[l] = c[l] + weight * power;
            power = power * x;
        }
    }
    for (std::size_t l = 0; l < 3; ++l) {
        if (!c[l].in_base()) throw StructuralError("covector does not descend to Q(w)(a)");
        report.c[l] = c[l].p;
    }
    report.value = report.c[0] * report.c[2] - report.c[1] * report.c[1];
    return report;
}

}  // namespace trigonal
