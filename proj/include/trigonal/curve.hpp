#pragma once

#include <array>
#include <optional>
#include <string>

#include "trigonal/divisor.hpp"
#include "trigonal/poly.hpp"
#include "trigonal/scalar.hpp"
#include "trigonal/series.hpp"

namespace trigonal {

/// A point of P^1: a Scalar or infinity.
class P1Point {
public:
    P1Point(const Scalar& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    P1Point(long v) : v_(Scalar(v)) {}   // NOLINT
    static P1Point infinity() { return P1Point(); }

    bool is_infinity() const { return !v_.has_value(); }
    /// Throws DomainError at infinity.
    const Scalar& value() const;

    friend bool operator==(const P1Point&, const P1Point&) = default;

    /// "inf" or the canonical scalar literal.
    std::string str() const;
    /// Accepts "inf", "infinity", "oo" or a scalar literal.
    static P1Point parse(std::string_view text);

private:
    P1Point() = default;
    std::optional<Scalar> v_;
};

/// A point u = (u1, u2, u3) of the base: the curve y^3 = (x^3 - 1)(x - u1)(x - u2)(x - u3).
class CurveParams {
public:
    /// Throws InvalidParameters naming the violated condition.
    static CurveParams validate(const Scalar& u1, const Scalar& u2, const Scalar& u3);

    const std::array<Scalar, 3>& u() const { return u_; }
    const Scalar& u(int j) const { return u_[static_cast<std::size_t>(j - 1)]; }  ///< 1-based
    /// Q(x), monic of degree 6.
    const UniPoly& q_poly() const { return q_; }
    const UniPoly& q_derivative() const { return dq_; }
    /// Roots of Q in the order 1, w, w^2, u1, u2, u3.
    const std::array<Scalar, 6>& branch_x() const { return branch_; }
    /// Q'(u_j), 1-based.
    Scalar q_prime_at_u(int j) const { return dq_(u(j)); }
    bool is_branch(const Scalar& x0) const { return q_(x0).is_zero(); }
    /// prod_{i<j} (b_i - b_j)^2 over the six roots.
    Scalar discriminant() const;

    std::string str() const;

private:
    CurveParams() = default;
    std::array<Scalar, 3> u_;
    UniPoly q_;
    UniPoly dq_;
    std::array<Scalar, 6> branch_;
};

CurveParams validate_params(const Scalar& u1, const Scalar& u2, const Scalar& u3);

/// A single point of C_u.
class CurvePoint {
public:
    enum class Kind { Finite, Branch, Infinity };

    /// Throws DomainError unless y0^3 = Q(x0) != 0.
    static CurvePoint finite(const CurveParams& u, const Scalar& x0, const Scalar& y0);
    /// Point over x0 on the given sheet: y0 = (canonical cube root of Q(x0)) * w^sheet.
    /// Throws DomainError when Q(x0) has no cube root in Q(w) or x0 is a branch value.
    static CurvePoint on_sheet(const CurveParams& u, const Scalar& x0, int sheet);
    /// Throws DomainError unless Q(x0) = 0.
    static CurvePoint branch(const CurveParams& u, const Scalar& x0);
    /// Sheet s is the point at infinity where y / x^2 -> w^s.
    static CurvePoint infinity(int sheet);

    Kind kind() const { return kind_; }
    const Scalar& x() const { return x_; }
    const Scalar& y() const { return y_; }
    int sheet() const { return sheet_; }

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
    std::string str() const;

private:
    Kind kind_ = Kind::Infinity;
    Scalar x_;
    Scalar y_;
    int sheet_ = 0;
};

/// Holomorphic 1-form b0*w0 + b1*w1 + b2*w2 + b3*w3 with
/// w0 = dx/y, w1 = dx/y^2, w2 = x dx/y^2, w3 = x^2 dx/y^2.
struct Differential {
    Scalar b0;
    std::array<Scalar, 3> b;

    /// Basis element w_i, i in 0..3.
    static Differential omega(int i);
    /// Coordinates (b0, b1, b2, b3).
    static Differential from_coords(const std::array<Scalar, 4>& c);
    std::array<Scalar, 4> coords() const { return {b0, b[0], b[1], b[2]}; }
    /// b1 + b2 x + b3 x^2
    UniPoly b_poly() const { return UniPoly({b[0], b[1], b[2]}); }
    bool is_zero() const;

    Differential operator+(const Differential& o) const;
    Differential operator-(const Differential& o) const;
    Differential operator*(const Scalar& s) const;
    friend bool operator==(const Differential&, const Differential&) = default;
    std::string str() const;
};

/// A k-differential (f + g y + h y^2) / Q^q_power * (dx)^k in the function-field model.
struct KDifferential {
    int k = 1;
    int q_power = 0;
    UniPoly f;
    UniPoly g;
    UniPoly h;

    static KDifferential from(const Differential& d);
    bool is_zero() const { return f.is_zero() && g.is_zero() && h.is_zero(); }
    /// Largest pole order at infinity of the numerator function: max(deg f, deg g + 2, deg h + 4).
    int numerator_pole_bound() const;
    KDifferential operator*(const Scalar& s) const;
    friend bool operator==(const KDifferential&, const KDifferential&) = default;
};

/// Product in the function field, reduced with y^3 = Q and with common Q-powers cancelled.
KDifferential multiply(const CurveParams& u, const KDifferential& a, const KDifferential& b);
/// Throws DomainError when the k's differ.
KDifferential add(const CurveParams& u, const KDifferential& a, const KDifferential& b);
/// Same differential rewritten over the denominator Q^e (e >= current q_power).
KDifferential with_q_power(const CurveParams& u, const KDifferential& q, int e);
/// Divides out common factors of Q between the numerator components and Q^q_power.
KDifferential normalize(const CurveParams& u, KDifferential q);

/// Order of q at p in the local coordinate (x - x0, y, or 1/x); throws DegenerateInput for q = 0.
int vanishing_order(const CurveParams& u, const KDifferential& q, const CurvePoint& p);
/// Minimum order of q over the three points above a non-branch x0 (no cube root needed).
int fiber_vanishing_order(const CurveParams& u, const KDifferential& q, const Scalar& x0);
/// y in the coordinate t = 1/x at the point at infinity on `sheet`, known below t^order.
LocalSeries y_at_infinity(const CurveParams& u, int sheet, int order);
/// The numerator f + g y + h y^2 of q in t = 1/x on `sheet`, known below t^order.
LocalSeries numerator_at_infinity(const CurveParams& u, const KDifferential& q, int sheet, int order);

/// True when q has no poles on C_u.
bool is_holomorphic(const CurveParams& u, const KDifferential& q);

/// Zero divisor of a nonzero holomorphic 1-form (effective, degree 6).
Divisor divisor_of(const CurveParams& u, const Differential& d);
/// Divisor of a rational function of x pulled back along the trigonal map.
Divisor divisor_of_function(const CurveParams& u, const RatFunc& f);
/// The degree-3 fiber of the x-map over x0.
Divisor trigonal_fiber(const CurveParams& u, const P1Point& x0);
/// All six branch points with multiplicity one.
Divisor branch_divisor(const CurveParams& u);

/// Homogeneous coordinates [w0(p) : w1(p) : w2(p) : w3(p)] in a local frame.
std::array<Scalar, 4> canonical_map(const CurveParams& u, const CurvePoint& p);

/// Multiplicity of p in d, taking fiber and cluster entries into account.
int multiplicity_at(const Divisor& d, const CurvePoint& p);

}  // namespace trigonal
