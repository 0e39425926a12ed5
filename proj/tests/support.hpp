#pragma once

#include "trigonal/curve.hpp"
#include "trigonal/sampling.hpp"

namespace trigonal::testing {

inline CurveParams u023() { return CurveParams::validate(Scalar(0), Scalar(2), Scalar(3)); }

inline Scalar q(long num, long den) { return Scalar(Rational(num, den)); }

/// Q'(u_j) as the product of differences to the other five roots, independent of Q's coefficients.
inline Scalar q_prime_by_roots(const CurveParams& u, int j) {
    Scalar out(1);
    const Scalar& r = u.u(j);
    for (const Scalar& b : u.branch_x()) {
        if (!(b == r)) out *= r - b;
    }
    return out;
}

/// Closed-form covector sum_j a_j u_j^(l-1) / Q'(u_j), recomputed from the roots.
inline std::array<Scalar, 3> covector_by_roots(const CurveParams& u, const std::array<Scalar, 3>& a) {
    std::array<Scalar, 3> c{};
    for (int l = 0; l < 3; ++l) {
        for (int j = 1; j <= 3; ++j) c[static_cast<std::size_t>(l)] += a[static_cast<std::size_t>(j - 1)] * u.u(j).pow(l) / q_prime_by_roots(u, j);
    }
    return c;
}

}  // namespace trigonal::testing
