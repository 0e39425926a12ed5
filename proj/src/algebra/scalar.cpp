#include "trigonal/scalar.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <vector>

#include "trigonal/error.hpp"

namespace trigonal {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return all_digits(s);
}

std::vector<std::string_view> split_terms(std::string_view text) {
    std::vector<std::string_view> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        // A '+' directly after '/' or '*' would be part of a malformed token; keep it and let
        // the term parser reject it.
        if (text[i] == '+' && text[i - 1] != '/' && text[i - 1] != '*') {
            terms.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    }
    terms.push_back(text.substr(start));
    return terms;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) {
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(mpz_class(std::string(num)));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (!all_digits(den)) {
            throw DomainError("malformed rational literal '" + std::string(text) + "'");
        }
        mpz_class d(std::string{den});
        if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        q = Rational(mpz_class(std::string(num)), d);
    }
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(); }

Scalar Scalar::zeta_power(long k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return Scalar(1);
        case 1: return zeta();
        default: return Scalar(Rational(-1), Rational(-1));
    }
}

Scalar Scalar::conj() const {
    // conj(a + b w) = a + b w^2 = (a - b) - b w
    return Scalar(re_ - zeta_, -zeta_);
}

Rational Scalar::norm() const {
    Rational n = re_ * re_ - re_ * zeta_ + zeta_ * zeta_;
    n.canonicalize();
    return n;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DegenerateInput("division by zero in Q(w)");
    Rational n = norm();
    Scalar c = conj();
    return Scalar(c.re_ / n, c.zeta_ / n);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::complex<double> Scalar::to_complex() const {
    const double a = re_.get_d();
    const double b = zeta_.get_d();
    return {a - 0.5 * b, b * std::numbers::sqrt3 / 2.0};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    zeta_ += o.zeta_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    zeta_ -= o.zeta_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    // (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
    Rational bd = zeta_ * o.zeta_;
    Rational re = re_ * o.re_ - bd;
    Rational ze = re_ * o.zeta_ + zeta_ * o.re_ - bd;
    re_ = std::move(re);
    zeta_ = std::move(ze);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.zeta_, b.zeta_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string Scalar::str() const {
    if (is_rational()) return format_rational(re_);
    return format_rational(re_) + "+" + format_rational(zeta_) + "*w";
}

Scalar Scalar::parse(std::string_view text) {
    if (text.empty()) throw DomainError("empty scalar literal");
    Scalar total;
    for (std::string_view term : split_terms(text)) {
        if (term.empty()) throw DomainError("malformed scalar literal '" + std::string(text) + "'");
        if (term.back() == 'w') {
            std::string_view coeff = term.substr(0, term.size() - 1);
            Rational c(1);
            if (coeff.empty() || coeff == "+") {
                c = 1;
            } else if (coeff == "-") {
                c = -1;
            } else {
                if (coeff.back() != '*') {
                    throw DomainError("malformed scalar literal '" + std::string(text) + "'");
                }
                c = parse_rational(coeff.substr(0, coeff.size() - 1));
            }
            total += Scalar(Rational(0), c);
        } else {
            total += Scalar(parse_rational(term));
        }
    }
    return total;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

std::optional<Scalar> cube_root(const Scalar& s) {
    if (s.is_zero()) return Scalar(0);
    // Scale into the Eisenstein integers, where the cube root (if any) is integral.
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), s.rational_part().get_den_mpz_t(), s.zeta_part().get_den_mpz_t());
    const Scalar scaled = s * Scalar(Rational(d * d * d));
    const std::complex<long double> z(scaled.to_complex());
    if (std::abs(z) > 1e36L) return std::nullopt;  // beyond what the rounding below can certify

    const long double r = std::cbrt(std::abs(z));
    const long double arg = std::arg(z);
    std::vector<Scalar> roots;
    for (int k = 0; k < 3; ++k) {
        const long double phi = (arg + 2.0L * std::numbers::pi_v<long double> * k) / 3.0L;
        const long double re = r * std::cos(phi);
        const long double im = r * std::sin(phi);
        const long double b = std::round(im * 2.0L / std::numbers::sqrt3_v<long double>);
        const long double a = std::round(re + b / 2.0L);
        Scalar candidate(Rational(mpz_class(std::to_string(static_cast<long long>(a)))),
                         Rational(mpz_class(std::to_string(static_cast<long long>(b)))));
        if (candidate.pow(3) == scaled) roots.push_back(candidate / Scalar(Rational(d)));
    }
    if (roots.empty()) return std::nullopt;
    for (const auto& root : roots) {
        if (root.is_rational()) return root;
    }
    return *std::min_element(roots.begin(), roots.end());
}

}  // namespace trigonal
