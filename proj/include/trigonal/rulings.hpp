#pragma once

#include <array>
#include <optional>
#include <string>

#include "trigonal/curve.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/poly.hpp"

namespace trigonal {

/// A line on the quadric cone z2^2 = z1 z3, cut out by two hyperplanes pulled back to the
/// w-basis via z_i -> w_i.
///
/// family 1: {z2 + z1 = t (z3 - z1)} and {z1 = t (z2 - z1)}
/// family 2: {z2 + z1 = t z1} and {z3 - z1 = t (z2 - z1)}
struct RulingLine {
    int family = 1;
    P1Point t = P1Point(0);
    std::array<Differential, 2> hyperplanes;

    /// Throws DomainError unless family is 1 or 2.
    static RulingLine make(int family, const P1Point& t);
    /// x-coordinate of the trigonal fiber the line cuts: 1 + 1/t (family 1) or t - 1 (family 2).
    P1Point fiber_x() const;
};

/// Intersection of the line with the canonical curve: the common zeros of its two hyperplanes.
/// Throws StructuralError if it differs from the trigonal fiber over fiber_x().
Divisor ruling_divisor(const CurveParams& u, const P1Point& t, int family);

/// The family-2 parameter paired with t1: 1/t1 + 2.
P1Point paired_parameter(const P1Point& t1);

struct D0Cycle {
    P1Point t1 = P1Point(0);
    P1Point t2 = P1Point(0);
    Divisor plus;
    Divisor minus;
    /// nullopt when plus == minus ("trivially equal").
    std::optional<RatFunc> witness;

    std::string witness_str() const;
};

/// plus = ruling_divisor(t1, 1), minus = ruling_divisor(1/t1 + 2, 2).
D0Cycle d0_cycle(const CurveParams& u, const P1Point& t1);
/// Same with an arbitrary family-2 parameter.
D0Cycle d0_pair(const CurveParams& u, const P1Point& t1, const P1Point& t2);

/// f with div(f) = fiber(x1) - fiber(x2). Throws DomainError when x1 == x2.
RatFunc principal_witness(const CurveParams& u, const P1Point& x1, const P1Point& x2);

}  // namespace trigonal
