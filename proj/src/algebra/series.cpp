#include "trigonal/series.hpp"

#include <algorithm>
#include <limits>

#include "trigonal/error.hpp"

namespace trigonal {

namespace {
// Truncation used for exactly-known series (constants inside Horner, etc.).
constexpr int kExact = 1 << 28;
}  // namespace

LocalSeries::LocalSeries(std::map<int, Scalar> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
    prune();
}

void LocalSeries::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero() || it->first >= order_) {
            it = c_.erase(it);
        } else {
            ++it;
        }
    }
}

LocalSeries LocalSeries::constant(const Scalar& c, int order) { return monomial(0, c, order); }

LocalSeries LocalSeries::monomial(int exponent, const Scalar& c, int order) {
    return LocalSeries({{exponent, c}}, order);
}

LocalSeries LocalSeries::from_poly(const UniPoly& p, int order) {
    std::map<int, Scalar> m;
    for (int i = 0; i <= p.degree(); ++i) m[i] = p.coeff(i);
    return LocalSeries(std::move(m), order);
}

int LocalSeries::valuation() const { return c_.empty() ? order_ : c_.begin()->first; }

Scalar LocalSeries::coeff(int exponent) const {
    if (exponent >= order_) throw DomainError("series coefficient beyond truncation order");
    auto it = c_.find(exponent);
    return it == c_.end() ? Scalar(0) : it->second;
}

Scalar LocalSeries::residue() const { return coeff(-1); }

LocalSeries LocalSeries::principal_part() const {
    std::map<int, Scalar> m;
    for (const auto& [e, c] : c_) {
        if (e < 0) m[e] = c;
    }
    return LocalSeries(std::move(m), kExact);
}

LocalSeries LocalSeries::derivative() const {
    std::map<int, Scalar> m;
    for (const auto& [e, c] : c_) {
        if (e != 0) m[e - 1] = c * Scalar(e);
    }
    return LocalSeries(std::move(m), order_ >= kExact ? kExact : order_ - 1);
}

LocalSeries LocalSeries::antiderivative() const {
    std::map<int, Scalar> m;
    for (const auto& [e, c] : c_) {
        if (e == -1) throw DomainError("antiderivative of a series with a t^-1 term");
        m[e + 1] = c / Scalar(e + 1);
    }
    if (order_ <= -1) throw DomainError("antiderivative: t^-1 coefficient unknown");
    return LocalSeries(std::move(m), order_ >= kExact ? kExact : order_ + 1);
}

LocalSeries LocalSeries::truncated(int order) const {
    LocalSeries r = *this;
    r.order_ = std::min(order_, order);
    r.prune();
    return r;
}

LocalSeries LocalSeries::inverse() const {
    if (c_.empty()) throw DegenerateInput("inverse of a series with no known nonzero term");
    const int v = valuation();
    const int rel = order_ >= kExact ? kExact : order_ - v;
    // Relative precision of an exact series is capped; callers truncate explicitly.
    const int n_terms = std::min(rel, 256);
    const Scalar inv_lead = c_.begin()->second.inverse();
    std::vector<Scalar> b(static_cast<std::size_t>(n_terms));
    if (n_terms > 0) b[0] = inv_lead;
    for (int n = 1; n < n_terms; ++n) {
        Scalar acc;
        for (const auto& [e, c] : c_) {
            const int k = e - v;
            if (k == 0) continue;
            if (k > n) break;
            acc += c * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = -acc * inv_lead;
    }
    std::map<int, Scalar> m;
    for (int n = 0; n < n_terms; ++n) m[n - v] = b[static_cast<std::size_t>(n)];
    return LocalSeries(std::move(m), n_terms - v);
}

LocalSeries LocalSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    LocalSeries result = constant(Scalar(1), kExact);
    LocalSeries base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

LocalSeries LocalSeries::cube_root_one_plus(const LocalSeries& z) {
    if (z.valuation() < 1) throw DomainError("cube_root_one_plus needs a series of positive valuation");
    const int order = z.order();
    if (order >= kExact) throw DomainError("cube_root_one_plus needs a truncated argument");
    LocalSeries result = constant(Scalar(1), order);
    LocalSeries zn = constant(Scalar(1), order);
    Rational binom(1);
    const Rational third(1, 3);
    for (int n = 1; n < order; ++n) {
        zn *= z;
        if (zn.is_known_zero()) break;
        binom *= (third - (n - 1));
        binom /= n;
        result += zn * Scalar(binom);
    }
    return result;
}

LocalSeries LocalSeries::compose(const UniPoly& p, const LocalSeries& s) {
    LocalSeries result(kExact);
    for (int i = p.degree(); i >= 0; --i) {
        result *= s;
        result += constant(p.coeff(i), kExact);
    }
    return result;
}

LocalSeries& LocalSeries::operator+=(const LocalSeries& o) {
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.c_) c_[e] += c;
    prune();
    return *this;
}

LocalSeries& LocalSeries::operator-=(const LocalSeries& o) {
    order_ = std::min(order_, o.order_);
    for (const auto& [e, c] : o.c_) c_[e] -= c;
    prune();
    return *this;
}

LocalSeries& LocalSeries::operator*=(const LocalSeries& o) {
    const int va = valuation();
    const int vb = o.valuation();
    const long long cand_a = static_cast<long long>(order_) + vb;
    const long long cand_b = static_cast<long long>(o.order_) + va;
    long long order = std::min(cand_a, cand_b);
    order = std::min<long long>(order, kExact);
    std::map<int, Scalar> m;
    for (const auto& [ea, ca] : c_) {
        for (const auto& [eb, cb] : o.c_) {
            if (ea + eb >= order) break;
            m[ea + eb] += ca * cb;
        }
    }
    c_ = std::move(m);
    order_ = static_cast<int>(order);
    prune();
    return *this;
}

LocalSeries& LocalSeries::operator*=(const Scalar& s) {
    for (auto& [e, c] : c_) c *= s;
    prune();
    return *this;
}

std::string LocalSeries::str(const std::string& var) const {
    std::string out;
    for (const auto& [e, c] : c_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (e != 0) out += "*" + var + "^" + std::to_string(e);
    }
    if (order_ < kExact) {
        if (!out.empty()) out += " + ";
        out += "O(" + var + "^" + std::to_string(order_) + ")";
    }
    return out.empty() ? "0" : out;
}

LocalSeries branch_coordinate(const UniPoly& q, const Scalar& center, int order) {
    if (!q(center).is_zero()) throw DomainError("branch_coordinate: " + center.str() + " is not a root");
    const UniPoly shifted = q.taylor_shift(center);
    if (shifted.coeff(1).is_zero()) throw StructuralError("repeated root of Q at " + center.str());
    // y^3 = s * r(s) with r(0) = q'(center); iterate s = y^3 / r(s), each pass gains three orders.
    const UniPoly r = shifted / UniPoly::x();
    const LocalSeries y3 = LocalSeries::monomial(3, Scalar(1), order);
    LocalSeries s = y3 * r.coeff(0).inverse();
    for (int gained = 3; gained < order; gained += 3) {
        s = y3 * LocalSeries::compose(r, s).inverse();
    }
    return s.truncated(order);
}

LocalSeries local_series(const UniPoly& q, const Scalar& center, const RatFunc& f, int order) {
    if (order < 1) throw DomainError("local_series needs order >= 1");
    const int pole = 3 * f.den().root_multiplicity(center);
    const int work = order + 2 * pole + 3;
    const LocalSeries s = branch_coordinate(q, center, work);
    const LocalSeries num = LocalSeries::compose(f.num().taylor_shift(center), s);
    if (f.den().degree() == 0) return (num * f.den().coeff(0).inverse()).truncated(order);
    const LocalSeries den = LocalSeries::compose(f.den().taylor_shift(center), s);
    return (num * den.inverse()).truncated(order);
}

}  // namespace trigonal
