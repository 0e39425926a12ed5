#include "trigonal/divisor.hpp"

#include <algorithm>
#include <numeric>

#include "trigonal/error.hpp"

namespace trigonal {

namespace {

bool cluster_less(const PointCluster& a, const PointCluster& b) {
    auto key = [](const PointCluster& c) { return std::make_pair(c.modulus.degree(), c.multiplicity); };
    if (key(a) != key(b)) return key(a) < key(b);
    if (a.modulus.coeffs() != b.modulus.coeffs())
        return std::lexicographical_compare(a.modulus.coeffs().begin(), a.modulus.coeffs().end(),
                                            b.modulus.coeffs().begin(), b.modulus.coeffs().end());
    return std::lexicographical_compare(a.y_root.coeffs().begin(), a.y_root.coeffs().end(),
                                        b.y_root.coeffs().begin(), b.y_root.coeffs().end());
}

std::string fiber_text(const UniPoly& p, int sign) {
    std::string out;
    for (const auto& [factor, m] : squarefree_decomposition(p)) {
        if (!out.empty()) out += " + ";
        if (sign * m != 1) out += (sign * m == -1 ? std::string("-") : std::to_string(sign * m) + "*");
        if (factor.degree() == 1) {
            out += "F(" + (-factor.coeff(0)).str() + ")";
        } else {
            out += "F[" + factor.str() + "]";
        }
    }
    return out;
}

}  // namespace

void Divisor::add_branch(const Scalar& x0, int m) {
    branch_[x0] += m;
    normalize();
}

void Divisor::add_infinity(int sheet, int m) {
    if (sheet < 0 || sheet > 2) throw DomainError("sheet at infinity must be 0, 1 or 2");
    infinity_[static_cast<std::size_t>(sheet)] += m;
}

void Divisor::add_fibers(const UniPoly& a, int sign) {
    if (a.is_zero()) throw DegenerateInput("fiber divisor of the zero polynomial");
    if (sign >= 0) {
        fiber_num_ *= a.monic();
    } else {
        fiber_den_ *= a.monic();
    }
    normalize();
}

void Divisor::add_cluster(PointCluster c) {
    if (c.modulus.degree() < 1) return;
    c.modulus = c.modulus.monic();
    c.y_root = c.y_root % c.modulus;
    for (auto& existing : clusters_) {
        if (existing.modulus == c.modulus && existing.y_root == c.y_root) {
            existing.multiplicity += c.multiplicity;
            normalize();
            return;
        }
    }
    clusters_.push_back(std::move(c));
    normalize();
}

void Divisor::normalize() {
    UniPoly g = poly_gcd(fiber_num_, fiber_den_);
    if (g.degree() > 0) {
        fiber_num_ = fiber_num_ / g;
        fiber_den_ = fiber_den_ / g;
    }
    fiber_num_ = fiber_num_.monic();
    fiber_den_ = fiber_den_.monic();
    std::erase_if(branch_, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(clusters_, [](const PointCluster& c) { return c.multiplicity == 0; });
    std::sort(clusters_.begin(), clusters_.end(), cluster_less);
}

int Divisor::degree() const {
    int d = 3 * (fiber_num_.degree() - fiber_den_.degree());
    for (const auto& [x, m] : branch_) d += m;
    for (int m : infinity_) d += m;
    for (const auto& c : clusters_) d += c.degree();
    return d;
}

bool Divisor::is_effective() const {
    if (fiber_den_.degree() > 0) return false;
    for (const auto& [x, m] : branch_)
        if (m < 0) return false;
    for (int m : infinity_)
        if (m < 0) return false;
    for (const auto& c : clusters_)
        if (c.multiplicity < 0) return false;
    return true;
}

bool Divisor::is_empty() const {
    return fiber_num_.degree() == 0 && fiber_den_.degree() == 0 && branch_.empty() && clusters_.empty() &&
           std::all_of(infinity_.begin(), infinity_.end(), [](int m) { return m == 0; });
}

int Divisor::branch_multiplicity(const Scalar& x0) const {
    auto it = branch_.find(x0);
    return it == branch_.end() ? 0 : it->second;
}

Divisor Divisor::operator-() const {
    Divisor r;
    r.fiber_num_ = fiber_den_;
    r.fiber_den_ = fiber_num_;
    for (const auto& [x, m] : branch_) r.branch_[x] = -m;
    for (std::size_t s = 0; s < 3; ++s) r.infinity_[s] = -infinity_[s];
    for (auto c : clusters_) {
        c.multiplicity = -c.multiplicity;
        r.clusters_.push_back(std::move(c));
    }
    r.normalize();
    return r;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    const Divisor other = o;  // o may alias *this
    fiber_num_ *= other.fiber_num_;
    fiber_den_ *= other.fiber_den_;
    for (const auto& [x, m] : other.branch_) branch_[x] += m;
    for (std::size_t s = 0; s < 3; ++s) infinity_[s] += other.infinity_[s];
    normalize();
    for (const auto& c : other.clusters_) add_cluster(c);
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) { return *this += -o; }

Divisor Divisor::min(const Divisor& a, const Divisor& b) {
    if (a.clusters_ != b.clusters_) {
        throw DomainError("minimum of divisors with differing point clusters is not supported");
    }
    Divisor r;
    r.fiber_num_ = poly_gcd(a.fiber_num_, b.fiber_num_);
    const UniPoly g = poly_gcd(a.fiber_den_, b.fiber_den_);
    r.fiber_den_ = (a.fiber_den_ * b.fiber_den_) / g;
    std::map<Scalar, int> keys = a.branch_;
    for (const auto& [x, m] : b.branch_) keys.emplace(x, 0);
    for (const auto& [x, unused] : keys) {
        r.branch_[x] = std::min(a.branch_multiplicity(x), b.branch_multiplicity(x));
    }
    for (std::size_t s = 0; s < 3; ++s) r.infinity_[s] = std::min(a.infinity_[s], b.infinity_[s]);
    r.clusters_ = a.clusters_;
    r.normalize();
    return r;
}

std::string Divisor::str() const {
    std::vector<std::string> parts;
    auto term = [](int m, const std::string& what) {
        return (m == 1 ? "" : m == -1 ? "-" : std::to_string(m) + "*") + what;
    };
    if (fiber_num_.degree() > 0) parts.push_back(fiber_text(fiber_num_, 1));
    if (fiber_den_.degree() > 0) parts.push_back(fiber_text(fiber_den_, -1));
    for (const auto& [x, m] : branch_) parts.push_back(term(m, "B(" + x.str() + ")"));
    for (std::size_t s = 0; s < 3; ++s)
        if (infinity_[s] != 0) parts.push_back(term(infinity_[s], "I" + std::to_string(s)));
    for (const auto& c : clusters_)
        parts.push_back(term(c.multiplicity, "P[" + c.modulus.str() + "; y=" + c.y_root.str() + "]"));
    if (parts.empty()) return "0";
    return std::accumulate(std::next(parts.begin()), parts.end(), parts.front(),
                           [](std::string acc, const std::string& p) { return acc + " + " + p; });
}

}  // namespace trigonal
