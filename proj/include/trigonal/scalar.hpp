#pragma once

#include <complex>
#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trigonal {

using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q"; throws DomainError on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Exact element of Q(w), w a primitive cube root of unity.
///
/// Stored as re + zeta * w with w^2 = -1 - w.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(Rational re, Rational zeta) : re_(std::move(re)), zeta_(std::move(zeta)) {
        re_.canonicalize();
        zeta_.canonicalize();
    }

    static Scalar zeta() { return Scalar(Rational(0), Rational(1)); }
    /// w^k for any integer k.
    static Scalar zeta_power(long k);

    const Rational& rational_part() const { return re_; }
    const Rational& zeta_part() const { return zeta_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(zeta_) == 0; }
    bool is_rational() const { return sgn(zeta_) == 0; }
    bool is_one() const { return zeta_ == 0 && re_ == 1; }

    /// Complex conjugate; swaps w and w^2.
    Scalar conj() const;
    /// Field norm a^2 - ab + b^2 down to Q.
    Rational norm() const;
    /// Throws DegenerateInput for zero.
    Scalar inverse() const;
    Scalar pow(long e) const;

    std::complex<double> to_complex() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -zeta_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.zeta_ == b.zeta_;
    }
    /// Lexicographic on (rational part, zeta part); a total order for use as map keys,
    /// not a field ordering.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

    /// Canonical literal: "p/q" or "p/q+r/s*w" (e.g. "1/2+-3/4*w").
    std::string str() const;
    /// Accepts the canonical form plus "w", "-w", "r*w" and sums of such terms joined by '+'.
    static Scalar parse(std::string_view text);

private:
    Rational re_{0};
    Rational zeta_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Cube root inside Q(w) for values of the form (rational) * (unit); nullopt otherwise
/// or when the rational factor is not a perfect cube.
std::optional<Scalar> cube_root(const Scalar& s);

}  // namespace trigonal
