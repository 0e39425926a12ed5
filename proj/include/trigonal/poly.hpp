#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/scalar.hpp"

namespace trigonal {

/// Dense univariate polynomial over Q(w), coefficients low-to-high degree.
///
/// The zero polynomial has no coefficients and degree -1; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::vector<Scalar> coeffs);  // NOLINT(google-explicit-constructor)
    UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}
    UniPoly(const Scalar& c) : UniPoly(std::vector<Scalar>{c}) {}  // NOLINT
    UniPoly(long c) : UniPoly(Scalar(c)) {}                        // NOLINT

    static UniPoly x() { return UniPoly({Scalar(0), Scalar(1)}); }
    static UniPoly monomial(int degree, const Scalar& c = Scalar(1));
    /// (x - r)
    static UniPoly linear_root(const Scalar& r) { return UniPoly({-r, Scalar(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of x^i; zero beyond the degree.
    Scalar coeff(int i) const;
    Scalar leading() const;

    Scalar operator()(const Scalar& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(x + shift), i.e. the Taylor expansion of p around `shift`.
    UniPoly taylor_shift(const Scalar& shift) const;
    /// Multiplicity of `r` as a root (0 when p(r) != 0); throws DegenerateInput for p = 0.
    int root_multiplicity(const Scalar& r) const;
    /// Remainder mod x^n.
    UniPoly truncate(int n) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }
    UniPoly operator-() const;
    UniPoly pow(int e) const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    /// Human-readable form in `var`, e.g. "x^2-3*x+(1/2+1*w)".
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

/// Euclidean division; throws DegenerateInput when the divisor is zero.
DivMod divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);  ///< exact quotient part
bool divides(const UniPoly& d, const UniPoly& p);

/// Monic gcd; throws DegenerateInput when both inputs are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

struct ExtendedGcd {
    UniPoly gcd;  ///< monic
    UniPoly s;    ///< s*p + t*q = gcd
    UniPoly t;
};
ExtendedGcd extended_gcd(const UniPoly& p, const UniPoly& q);

/// Inverse of `a` modulo `m`; throws DegenerateInput when they are not coprime.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);

/// Yun's square-free decomposition of a nonzero polynomial: pairs (P_i, i) with P_i monic,
/// square-free, pairwise coprime and p = lc * prod P_i^i. Constant factors are dropped.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Rational function num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(UniPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
    RatFunc(const Scalar& c) : RatFunc(UniPoly(c)) {}        // NOLINT
    RatFunc(long c) : RatFunc(UniPoly(c)) {}                 // NOLINT
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc x() { return RatFunc(UniPoly::x()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Throws DegenerateInput at a pole.
    Scalar operator()(const Scalar& x) const;
    RatFunc inverse() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc pow(int e) const;

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// "(x-5)/(x-6)", "x-5", "1/(3*a^2-3*a)".
    std::string str(const std::string& var = "x") const;

private:
    UniPoly num_;
    UniPoly den_;
};

}  // namespace trigonal
