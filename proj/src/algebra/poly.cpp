#include "trigonal/poly.hpp"

#include <algorithm>

#include "trigonal/error.hpp"

namespace trigonal {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int degree, const Scalar& c) {
    std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

Scalar UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<std::size_t>(i)];
}

Scalar UniPoly::leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

Scalar UniPoly::operator()(const Scalar& x) const {
    Scalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::taylor_shift(const Scalar& shift) const {
    // Horner in the shifted variable: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...)
    UniPoly result;
    const UniPoly step({shift, Scalar(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        result *= step;
        result += UniPoly(*it);
    }
    return result;
}

int UniPoly::root_multiplicity(const Scalar& r) const {
    if (is_zero()) throw DegenerateInput("root multiplicity of the zero polynomial");
    UniPoly shifted = taylor_shift(r);
    int m = 0;
    while (shifted.coeff(m).is_zero()) ++m;
    return m;
}

UniPoly UniPoly::truncate(int n) const {
    if (n >= static_cast<int>(c_.size())) return *this;
    return UniPoly(std::vector<Scalar>(c_.begin(), c_.begin() + std::max(n, 0)));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    UniPoly result(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

std::string coeff_text(const Scalar& c, bool first, bool has_var) {
    if (c.is_rational()) {
        Rational a = abs(c.rational_part());
        std::string sign = sgn(c.rational_part()) < 0 ? "-" : (first ? "" : "+");
        if (has_var && a == 1) return sign;
        return sign + format_rational(a) + (has_var ? "*" : "");
    }
    return std::string(first ? "" : "+") + "(" + c.str() + ")" + (has_var ? "*" : "");
}

}  // namespace

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        out += coeff_text(c, first, i > 0);
        if (i > 0) out += var;
        if (i > 1) out += "^" + std::to_string(i);
        first = false;
    }
    return out;
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DegenerateInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Scalar> rem = a.coeffs();
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Scalar inv_lead = b.leading().inverse();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Scalar q = rem[static_cast<std::size_t>(i)] * inv_lead;
        quot[static_cast<std::size_t>(i - db)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }
UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }

bool divides(const UniPoly& d, const UniPoly& p) { return (p % d).is_zero(); }

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    UniPoly a = p;
    UniPoly b = q;
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() && q.is_zero()) throw DegenerateInput("gcd of two zero polynomials");
    UniPoly r0 = p, r1 = q;
    UniPoly s0(1), s1;
    UniPoly t0, t1(1);
    while (!r1.is_zero()) {
        DivMod qr = divmod(r0, r1);
        r0 = std::exchange(r1, qr.remainder);
        s0 = std::exchange(s1, s0 - qr.quotient * s1);
        t0 = std::exchange(t1, t0 - qr.quotient * t1);
    }
    const Scalar inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
    ExtendedGcd g = extended_gcd(a % m, m);
    if (g.gcd.degree() != 0) throw DegenerateInput("polynomial is not invertible modulo " + m.str());
    return g.s % m;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DegenerateInput("square-free decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly d = f.derivative();
    UniPoly a = poly_gcd(f, d);
    UniPoly b = f / a;
    UniPoly c = d / a;
    UniPoly e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = poly_gcd(b, e);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        c = e / g;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw DegenerateInput("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = poly_gcd(num, den);
    num = num / g;
    den = den / g;
    const Scalar lc = den.leading();
    num_ = num * lc.inverse();
    den_ = den * lc.inverse();
}

Scalar RatFunc::operator()(const Scalar& x) const {
    Scalar d = den_(x);
    if (d.is_zero()) throw DegenerateInput("rational function evaluated at a pole");
    return num_(x) / d;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DegenerateInput("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(e), den_.pow(e));
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    auto wrap = [&](const UniPoly& p) {
        std::string s = p.str(var);
        const bool single_term =
            std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Scalar& c) { return !c.is_zero(); }) == 1;
        return single_term && p.leading().is_rational() ? s : "(" + s + ")";
    };
    if (num_.is_constant() && num_.leading().is_rational()) {
        // c/den printed as 1/(den/c) so that scalar factors land in the denominator.
        const Scalar c = num_.leading();
        if (c.rational_part() < 0) return "-1/" + wrap(den_ * (-c).inverse());
        return "1/" + wrap(den_ * c.inverse());
    }
    return wrap(num_) + "/" + wrap(den_);
}

}  // namespace trigonal
