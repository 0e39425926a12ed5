#include "trigonal/curve.hpp"

#include <algorithm>
#include <climits>

#include "trigonal/error.hpp"
#include "trigonal/series.hpp"

namespace trigonal {

// ---------------------------------------------------------------------------------------
// P1Point

const Scalar& P1Point::value() const {
    if (!v_) throw DomainError("value() of the point at infinity");
    return *v_;
}

std::string P1Point::str() const { return v_ ? v_->str() : "inf"; }

P1Point P1Point::parse(std::string_view text) {
    if (text == "inf" || text == "infinity" || text == "oo" || text == "Infinity") return infinity();
    return P1Point(Scalar::parse(text));
}

// ---------------------------------------------------------------------------------------
// CurveParams

CurveParams CurveParams::validate(const Scalar& u1, const Scalar& u2, const Scalar& u3) {
    const std::array<Scalar, 3> u{u1, u2, u3};
    for (int i = 0; i < 3; ++i) {
        if (u[static_cast<std::size_t>(i)].pow(3).is_one()) {
            throw InvalidParameters("u" + std::to_string(i + 1) + "^3 = 1 (u" + std::to_string(i + 1) + " = " +
                                    u[static_cast<std::size_t>(i)].str() + " is a cube root of unity)");
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (u[static_cast<std::size_t>(i)] == u[static_cast<std::size_t>(j)]) {
                throw InvalidParameters("u" + std::to_string(i + 1) + " = u" + std::to_string(j + 1) + " (both " +
                                        u[static_cast<std::size_t>(i)].str() + ")");
            }
        }
    }
    CurveParams p;
    p.u_ = u;
    p.q_ = UniPoly({Scalar(-1), Scalar(0), Scalar(0), Scalar(1)});
    for (const auto& uj : u) p.q_ *= UniPoly::linear_root(uj);
    p.dq_ = p.q_.derivative();
    p.branch_ = {Scalar(1), Scalar::zeta_power(1), Scalar::zeta_power(2), u1, u2, u3};
    if (p.q_.degree() != 6) throw StructuralError("Q_u does not have degree 6");
    for (const auto& b : p.branch_) {
        if (p.dq_(b).is_zero()) throw StructuralError("Q_u has a repeated root at " + b.str());
    }
    return p;
}

CurveParams validate_params(const Scalar& u1, const Scalar& u2, const Scalar& u3) {
    return CurveParams::validate(u1, u2, u3);
}

Scalar CurveParams::discriminant() const {
    Scalar d(1);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) d *= (branch_[i] - branch_[j]).pow(2);
    return d;
}

std::string CurveParams::str() const { return "(" + u_[0].str() + ", " + u_[1].str() + ", " + u_[2].str() + ")"; }

// ---------------------------------------------------------------------------------------
// CurvePoint

CurvePoint CurvePoint::finite(const CurveParams& u, const Scalar& x0, const Scalar& y0) {
    const Scalar q0 = u.q_poly()(x0);
    if (q0.is_zero()) throw DomainError("x = " + x0.str() + " is a branch value; use a branch point");
    if (y0.pow(3) != q0) throw DomainError("(" + x0.str() + ", " + y0.str() + ") is not on the curve");
    CurvePoint p;
    p.kind_ = Kind::Finite;
    p.x_ = x0;
    p.y_ = y0;
    return p;
}

CurvePoint CurvePoint::on_sheet(const CurveParams& u, const Scalar& x0, int sheet) {
    const Scalar q0 = u.q_poly()(x0);
    if (q0.is_zero()) throw DomainError("x = " + x0.str() + " is a branch value");
    auto root = cube_root(q0);
    if (!root) throw DomainError("Q(" + x0.str() + ") = " + q0.str() + " has no cube root in Q(w)");
    return finite(u, x0, *root * Scalar::zeta_power(sheet));
}

CurvePoint CurvePoint::branch(const CurveParams& u, const Scalar& x0) {
    if (!u.is_branch(x0)) throw DomainError("x = " + x0.str() + " is not a branch value");
    CurvePoint p;
    p.kind_ = Kind::Branch;
    p.x_ = x0;
    return p;
}

CurvePoint CurvePoint::infinity(int sheet) {
    if (sheet < 0 || sheet > 2) throw DomainError("sheet at infinity must be 0, 1 or 2");
    CurvePoint p;
    p.kind_ = Kind::Infinity;
    p.sheet_ = sheet;
    return p;
}

std::string CurvePoint::str() const {
    switch (kind_) {
        case Kind::Finite: return "P(" + x_.str() + ", " + y_.str() + ")";
        case Kind::Branch: return "B(" + x_.str() + ")";
        case Kind::Infinity: return "I" + std::to_string(sheet_);
    }
    return {};
}

// ---------------------------------------------------------------------------------------
// Differential

Differential Differential::omega(int i) {
    if (i < 0 || i > 3) throw DomainError("basis index must be in 0..3");
    Differential d;
    if (i == 0) {
        d.b0 = Scalar(1);
    } else {
        d.b[static_cast<std::size_t>(i - 1)] = Scalar(1);
    }
    return d;
}

Differential Differential::from_coords(const std::array<Scalar, 4>& c) { return {c[0], {c[1], c[2], c[3]}}; }

bool Differential::is_zero() const { return b0.is_zero() && b[0].is_zero() && b[1].is_zero() && b[2].is_zero(); }

Differential Differential::operator+(const Differential& o) const {
    return {b0 + o.b0, {b[0] + o.b[0], b[1] + o.b[1], b[2] + o.b[2]}};
}

Differential Differential::operator-(const Differential& o) const {
    return {b0 - o.b0, {b[0] - o.b[0], b[1] - o.b[1], b[2] - o.b[2]}};
}

Differential Differential::operator*(const Scalar& s) const { return {b0 * s, {b[0] * s, b[1] * s, b[2] * s}}; }

std::string Differential::str() const {
    const auto c = coords();
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Scalar& ci = c[static_cast<std::size_t>(i)];
        if (ci.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += (ci.is_one() ? "" : "(" + ci.str() + ")*") + "w" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------------------
// KDifferential

KDifferential KDifferential::from(const Differential& d) {
    // dx/y = y^2/Q dx and dx/y^2 = y/Q dx
    KDifferential q;
    q.k = 1;
    q.q_power = 1;
    q.g = d.b_poly();
    q.h = UniPoly(d.b0);
    return q;
}

int KDifferential::numerator_pole_bound() const {
    int m = 0;
    if (!f.is_zero()) m = std::max(m, f.degree());
    if (!g.is_zero()) m = std::max(m, g.degree() + 2);
    if (!h.is_zero()) m = std::max(m, h.degree() + 4);
    return m;
}

KDifferential KDifferential::operator*(const Scalar& s) const {
    KDifferential r = *this;
    r.f *= s;
    r.g *= s;
    r.h *= s;
    return r;
}

KDifferential normalize(const CurveParams& u, KDifferential q) {
    const UniPoly& Q = u.q_poly();
    if (q.is_zero()) {
        q.q_power = 0;
        return q;
    }
    while (q.q_power > 0 && divides(Q, q.f) && divides(Q, q.g) && divides(Q, q.h)) {
        q.f = q.f / Q;
        q.g = q.g / Q;
        q.h = q.h / Q;
        --q.q_power;
    }
    return q;
}

KDifferential multiply(const CurveParams& u, const KDifferential& a, const KDifferential& b) {
    const UniPoly& Q = u.q_poly();
    KDifferential r;
    r.k = a.k + b.k;
    r.q_power = a.q_power + b.q_power;
    r.f = a.f * b.f + Q * (a.g * b.h + a.h * b.g);
    r.g = a.f * b.g + a.g * b.f + Q * (a.h * b.h);
    r.h = a.f * b.h + a.g * b.g + a.h * b.f;
    return normalize(u, std::move(r));
}

KDifferential with_q_power(const CurveParams& u, const KDifferential& q, int e) {
    if (e < q.q_power) throw DomainError("with_q_power cannot lower the denominator exponent");
    const UniPoly scale = u.q_poly().pow(e - q.q_power);
    KDifferential r = q;
    r.q_power = e;
    r.f *= scale;
    r.g *= scale;
    r.h *= scale;
    return r;
}

KDifferential add(const CurveParams& u, const KDifferential& a, const KDifferential& b) {
    if (a.k != b.k) throw DomainError("adding differentials of different degree");
    const int e = std::max(a.q_power, b.q_power);
    KDifferential x = with_q_power(u, a, e);
    const KDifferential y = with_q_power(u, b, e);
    x.f += y.f;
    x.g += y.g;
    x.h += y.h;
    return normalize(u, std::move(x));
}

// ---------------------------------------------------------------------------------------
// Orders of vanishing

namespace {

int poly_order(const UniPoly& p, const Scalar& x0) { return p.root_multiplicity(x0); }

int order_at_branch(const KDifferential& q, const Scalar& x0) {
    int ord = INT_MAX;
    if (!q.f.is_zero()) ord = std::min(ord, 3 * poly_order(q.f, x0));
    if (!q.g.is_zero()) ord = std::min(ord, 3 * poly_order(q.g, x0) + 1);
    if (!q.h.is_zero()) ord = std::min(ord, 3 * poly_order(q.h, x0) + 2);
    return ord - 3 * q.q_power + 2 * q.k;
}

int order_at_finite(const CurveParams& u, const KDifferential& q, const Scalar& x0, const Scalar& y0) {
    const int prec = 3 * q.numerator_pole_bound() + 4;
    const Scalar q0 = u.q_poly()(x0);
    const LocalSeries z =
        LocalSeries::from_poly(u.q_poly().taylor_shift(x0) - UniPoly(q0), prec) * q0.inverse();
    const LocalSeries y = LocalSeries::cube_root_one_plus(z) * y0;
    const LocalSeries fs = LocalSeries::from_poly(q.f.taylor_shift(x0), prec);
    const LocalSeries gs = LocalSeries::from_poly(q.g.taylor_shift(x0), prec);
    const LocalSeries hs = LocalSeries::from_poly(q.h.taylor_shift(x0), prec);
    const LocalSeries F = fs + gs * y + hs * y * y;
    if (F.is_known_zero()) throw StructuralError("numerator vanishes beyond its degree bound at a finite point");
    // Q^-e and dx are units at a non-branch point.
    return F.valuation();
}

LocalSeries poly_at_infinity(const UniPoly& p, int prec) {
    std::map<int, Scalar> m;
    for (int i = 0; i <= p.degree(); ++i) m[-i] = p.coeff(i);
    return LocalSeries(std::move(m), prec);
}

int order_at_infinity(const CurveParams& u, const KDifferential& q, int sheet) {
    // F has poles only at infinity, each of order <= M, so its order at one sheet is <= 2M.
    const int M = q.numerator_pole_bound();
    const LocalSeries F = numerator_at_infinity(u, q, sheet, 2 * M + 4);
    if (F.is_known_zero()) throw StructuralError("numerator vanishes beyond its degree bound at infinity");
    // ord(Q) = -6, ord(dx) = -2.
    return F.valuation() + 6 * q.q_power - 2 * q.k;
}

}  // namespace

LocalSeries y_at_infinity(const CurveParams& u, int sheet, int order) {
    if (sheet < 0 || sheet > 2) throw DomainError("sheet at infinity must be 0, 1 or 2");
    // y = w^s t^-2 (t^6 Q(1/t))^(1/3), and t^6 Q(1/t) = 1 + O(t).
    std::map<int, Scalar> terms;
    const UniPoly& Q = u.q_poly();
    for (int i = 0; i < 6; ++i) terms[6 - i] = Q.coeff(i);
    const LocalSeries z(std::move(terms), order + 2);
    return LocalSeries::monomial(-2, Scalar::zeta_power(sheet), order + 2) * LocalSeries::cube_root_one_plus(z);
}

LocalSeries numerator_at_infinity(const CurveParams& u, const KDifferential& q, int sheet, int order) {
    const int M = q.numerator_pole_bound();
    const LocalSeries y = y_at_infinity(u, sheet, order + M + 2);
    const LocalSeries F = poly_at_infinity(q.f, order) + poly_at_infinity(q.g, order + M + 2) * y +
                          poly_at_infinity(q.h, order + M + 2) * y * y;
    return F.truncated(order);
}

int vanishing_order(const CurveParams& u, const KDifferential& q, const CurvePoint& p) {
    if (q.is_zero()) throw DegenerateInput("order of vanishing of the zero differential");
    switch (p.kind()) {
        case CurvePoint::Kind::Branch: return order_at_branch(q, p.x());
        case CurvePoint::Kind::Infinity: return order_at_infinity(u, q, p.sheet());
        case CurvePoint::Kind::Finite: return order_at_finite(u, q, p.x(), p.y());
    }
    return 0;
}

int fiber_vanishing_order(const CurveParams& u, const KDifferential& q, const Scalar& x0) {
    if (q.is_zero()) throw DegenerateInput("order of vanishing of the zero differential");
    if (u.is_branch(x0)) throw DomainError("fiber_vanishing_order needs a non-branch x0");
    // Over a non-branch x0 the local ring of the fiber is free on 1, y, y^2, so q lies in
    // (x - x0)^m exactly when each component does.
    int ord = INT_MAX;
    for (const UniPoly* c : {&q.f, &q.g, &q.h})
        if (!c->is_zero()) ord = std::min(ord, poly_order(*c, x0));
    return ord;
}

bool is_holomorphic(const CurveParams& u, const KDifferential& q) {
    if (q.is_zero()) return true;
    for (const auto& b : u.branch_x())
        if (order_at_branch(q, b) < 0) return false;
    for (int s = 0; s < 3; ++s)
        if (order_at_infinity(u, q, s) < 0) return false;
    return true;
}

// ---------------------------------------------------------------------------------------
// Divisors

namespace {

/// Divides out every branch root of p; returns the stripped polynomial.
UniPoly strip_branch_roots(const CurveParams& u, UniPoly p) {
    for (const auto& b : u.branch_x()) {
        const UniPoly lin = UniPoly::linear_root(b);
        while (!p.is_zero() && p(b).is_zero()) p = p / lin;
    }
    return p;
}

}  // namespace

Divisor divisor_of(const CurveParams& u, const Differential& d) {
    if (d.is_zero()) throw DegenerateInput("divisor of the zero differential");
    const KDifferential q = KDifferential::from(d);
    Divisor div;
    for (const auto& b : u.branch_x()) {
        const int m = order_at_branch(q, b);
        if (m != 0) div.add_branch(b, m);
    }
    for (int s = 0; s < 3; ++s) {
        const int m = order_at_infinity(u, q, s);
        if (m != 0) div.add_infinity(s, m);
    }
    // Away from branch points and infinity, d = (b0 y + g(x)) dx/y^2 with dx/y^2 a unit.
    const UniPoly g = d.b_poly();
    if (d.b0.is_zero()) {
        const UniPoly rest = strip_branch_roots(u, g);
        if (rest.degree() > 0) div.add_fibers(rest);
    } else if (!g.is_zero()) {
        // Zeros lie where y = -g/b0, i.e. on the roots of the norm b0^3 Q + g^3; each root
        // carries exactly one such point.
        const UniPoly norm = UniPoly(d.b0.pow(3)) * u.q_poly() + g.pow(3);
        const UniPoly rest = strip_branch_roots(u, norm);
        if (rest.degree() > 0) {
            const UniPoly y_val = g * (-d.b0.inverse());
            for (auto& [factor, m] : squarefree_decomposition(rest)) {
                div.add_cluster({factor, y_val % factor, m});
            }
        }
    }
    return div;
}

Divisor divisor_of_function(const CurveParams& u, const RatFunc& f) {
    if (f.is_zero()) throw DegenerateInput("divisor of the zero function");
    Divisor div;
    UniPoly num = f.num();
    UniPoly den = f.den();
    for (const auto& b : u.branch_x()) {
        const int m = num.root_multiplicity(b) - den.root_multiplicity(b);
        const UniPoly lin = UniPoly::linear_root(b);
        while (num(b).is_zero()) num = num / lin;
        while (den(b).is_zero()) den = den / lin;
        if (m != 0) div.add_branch(b, 3 * m);
    }
    if (num.degree() > 0) div.add_fibers(num, +1);
    if (den.degree() > 0) div.add_fibers(den, -1);
    const int at_inf = f.den().degree() - f.num().degree();
    for (int s = 0; s < 3; ++s)
        if (at_inf != 0) div.add_infinity(s, at_inf);
    return div;
}

Divisor trigonal_fiber(const CurveParams& u, const P1Point& x0) {
    Divisor d;
    if (x0.is_infinity()) {
        for (int s = 0; s < 3; ++s) d.add_infinity(s, 1);
    } else if (u.is_branch(x0.value())) {
        d.add_branch(x0.value(), 3);
    } else {
        d.add_fibers(UniPoly::linear_root(x0.value()));
    }
    return d;
}

Divisor branch_divisor(const CurveParams& u) {
    Divisor d;
    for (const auto& b : u.branch_x()) d.add_branch(b, 1);
    return d;
}

std::array<Scalar, 4> canonical_map(const CurveParams& u, const CurvePoint& p) {
    (void)u;
    switch (p.kind()) {
        case CurvePoint::Kind::Finite:
            // frame dx/y^2: w0 / frame = y, w_k / frame = x^(k-1)
            return {p.y(), Scalar(1), p.x(), p.x() * p.x()};
        case CurvePoint::Kind::Branch: return {Scalar(0), Scalar(1), p.x(), p.x() * p.x()};
        case CurvePoint::Kind::Infinity:
            // frame x^2 dx/y^2; y/x^2 -> w^s
            return {Scalar::zeta_power(p.sheet()), Scalar(0), Scalar(0), Scalar(1)};
    }
    return {};
}

int multiplicity_at(const Divisor& d, const CurvePoint& p) {
    switch (p.kind()) {
        case CurvePoint::Kind::Branch: return d.branch_multiplicity(p.x());
        case CurvePoint::Kind::Infinity: return d.infinity()[static_cast<std::size_t>(p.sheet())];
        case CurvePoint::Kind::Finite: {
            int m = d.fiber_num().root_multiplicity(p.x()) - d.fiber_den().root_multiplicity(p.x());
            for (const auto& c : d.clusters())
                if (c.modulus(p.x()).is_zero() && c.y_root(p.x()) == p.y()) m += c.multiplicity;
            return m;
        }
    }
    return 0;
}

}  // namespace trigonal
