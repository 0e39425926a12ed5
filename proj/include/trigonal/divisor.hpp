#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "trigonal/poly.hpp"
#include "trigonal/scalar.hpp"

namespace trigonal {

/// Points {(x0, y_root(x0)) : modulus(x0) = 0}, one point per root, all with the same
/// multiplicity. `modulus` is monic and square-free with no branch roots.
struct PointCluster {
    UniPoly modulus;
    UniPoly y_root;  ///< reduced mod `modulus`
    int multiplicity = 1;

    int degree() const { return modulus.degree() * multiplicity; }
    friend bool operator==(const PointCluster&, const PointCluster&) = default;
};

/// Formal Z-combination of points of C_u.
///
/// Stored in four parts:
///  - full trigonal fibers over non-branch x: fiber_num / fiber_den, coprime monic polynomials
///    whose root multiplicities are the fiber multiplicities (every point of the fiber gets it);
///  - branch points keyed by x-coordinate;
///  - the three points at infinity indexed by sheet;
///  - point clusters for divisors that do not split into full fibers.
/// Every divisor in the family's ruling and kernel computations is a sum of the first three
/// kinds, so those are compared exactly. Clusters are compared structurally.
class Divisor {
public:
    Divisor() = default;

    void add_branch(const Scalar& x0, int m);
    void add_infinity(int sheet, int m);
    /// Adds sign * (fibers over the roots of `a`, with multiplicity).
    void add_fibers(const UniPoly& a, int sign = 1);
    void add_cluster(PointCluster c);

    const UniPoly& fiber_num() const { return fiber_num_; }
    const UniPoly& fiber_den() const { return fiber_den_; }
    const std::map<Scalar, int>& branch() const { return branch_; }
    const std::array<int, 3>& infinity() const { return infinity_; }
    const std::vector<PointCluster>& clusters() const { return clusters_; }

    int degree() const;
    bool is_effective() const;
    bool is_empty() const;
    int branch_multiplicity(const Scalar& x0) const;

    Divisor operator-() const;
    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend bool operator==(const Divisor&, const Divisor&) = default;
    /// a >= b iff a - b is effective.
    friend bool operator>=(const Divisor& a, const Divisor& b) { return (a - b).is_effective(); }

    /// Pointwise minimum. Throws DomainError if the cluster parts differ, since cluster
    /// intersections are not tracked.
    static Divisor min(const Divisor& a, const Divisor& b);

    std::string str() const;

private:
    void normalize();

    UniPoly fiber_num_{1};
    UniPoly fiber_den_{1};
    std::map<Scalar, int> branch_;
    std::array<int, 3> infinity_{};
    std::vector<PointCluster> clusters_;
};

}  // namespace trigonal
