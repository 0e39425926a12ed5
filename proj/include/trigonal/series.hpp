#pragma once

#include <map>
#include <string>
#include <vector>

#include "trigonal/poly.hpp"
#include "trigonal/scalar.hpp"

namespace trigonal {

/// Truncated Laurent series sum_{n < order} c_n t^n in a local coordinate t.
///
/// Terms with exponent >= order() are unknown. Finitely many exponents are stored;
/// every stored exponent is < order(). Arithmetic propagates truncation conservatively.
class LocalSeries {
public:
    /// The series O(t^order) (zero up to the truncation).
    explicit LocalSeries(int order = 0) : order_(order) {}
    LocalSeries(std::map<int, Scalar> coeffs, int order);

    static LocalSeries constant(const Scalar& c, int order);
    /// c * t^exponent + O(t^order)
    static LocalSeries monomial(int exponent, const Scalar& c, int order);
    static LocalSeries from_poly(const UniPoly& p, int order);

    int order() const { return order_; }
    /// Smallest exponent with a nonzero coefficient; order() when none is known.
    int valuation() const;
    bool is_known_zero() const { return valuation() >= order_; }
    Scalar coeff(int exponent) const;
    const std::map<int, Scalar>& terms() const { return c_; }

    /// Coefficient of t^-1; throws DomainError when it lies beyond the truncation.
    Scalar residue() const;
    /// Keeps only the strictly negative exponents; exact (no truncation).
    LocalSeries principal_part() const;
    LocalSeries derivative() const;
    /// Term-wise antiderivative; throws DomainError if a t^-1 term is present.
    LocalSeries antiderivative() const;
    LocalSeries truncated(int order) const;
    /// Throws DegenerateInput if no nonzero coefficient is known.
    LocalSeries inverse() const;
    LocalSeries pow(int e) const;
    /// (1 + z)^(1/3) by the binomial series; requires valuation(z) >= 1.
    static LocalSeries cube_root_one_plus(const LocalSeries& z);
    /// p(s) for a polynomial p, by Horner.
    static LocalSeries compose(const UniPoly& p, const LocalSeries& s);

    LocalSeries& operator+=(const LocalSeries& o);
    LocalSeries& operator-=(const LocalSeries& o);
    LocalSeries& operator*=(const LocalSeries& o);
    LocalSeries& operator*=(const Scalar& s);
    friend LocalSeries operator+(LocalSeries a, const LocalSeries& b) { return a += b; }
    friend LocalSeries operator-(LocalSeries a, const LocalSeries& b) { return a -= b; }
    friend LocalSeries operator*(LocalSeries a, const LocalSeries& b) { return a *= b; }
    friend LocalSeries operator*(LocalSeries a, const Scalar& s) { return a *= s; }
    friend LocalSeries operator*(const Scalar& s, LocalSeries a) { return a *= s; }
    LocalSeries operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const LocalSeries&, const LocalSeries&) = default;

    std::string str(const std::string& var = "y") const;

private:
    void prune();
    std::map<int, Scalar> c_;
    int order_ = 0;
};

/// x - center as a series in y at a simple root `center` of q, where y^3 = q(x);
/// known through y^order. Throws StructuralError when q'(center) = 0.
LocalSeries branch_coordinate(const UniPoly& q, const Scalar& center, int order);

/// f(x) expanded in y at the branch point x = center of y^3 = q(x), known through y^order.
LocalSeries local_series(const UniPoly& q, const Scalar& center, const RatFunc& f, int order);

}  // namespace trigonal
