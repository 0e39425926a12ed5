#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigonal/curve.hpp"
#include "trigonal/matrix.hpp"
#include "trigonal/scalar.hpp"

namespace trigonal {

/// Exponents of z0, z1, z2, z3.
using Monomial = std::array<int, 4>;
using ProjPoint = std::array<Scalar, 4>;

/// Graded lexicographic order with z0 > z1 > z2 > z3.
bool grlex_greater(const Monomial& a, const Monomial& b);
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};
/// All monomials of the given degree, largest first.
std::vector<Monomial> monomials(int degree);
/// "z0^2*z3", or "1" for the constant monomial.
std::string monomial_str(const Monomial& m);

/// A homogeneous form in z0..z3, coefficients keyed by monomial (largest first).
class Form {
public:
    Form() = default;
    explicit Form(std::map<Monomial, Scalar, GrlexGreater> terms);

    const std::map<Monomial, Scalar, GrlexGreater>& terms() const { return terms_; }
    Scalar coeff(const Monomial& m) const;
    int degree() const;
    bool is_zero() const { return terms_.empty(); }

    Scalar operator()(const ProjPoint& z) const;
    /// The form with the given monomial's coefficient scaled to 1; throws DegenerateInput if it is 0.
    Form normalized_at(const Monomial& m) const;
    Form operator*(const Form& o) const;
    friend bool operator==(const Form&, const Form&) = default;

    /// Monomial `first` is printed first, then the rest largest first, e.g. "z2^2-z1*z3".
    std::string str(const Monomial& first) const;
    std::string str() const;

private:
    std::map<Monomial, Scalar, GrlexGreater> terms_;
};

/// The quadric of the canonical ideal, stored as a form and as its symmetric Gram matrix.
struct QuadricForm {
    Form form;
    Matrix gram{4, 4};  ///< z^T gram z = form(z)

    Scalar operator()(const ProjPoint& z) const { return form(z); }
    std::string str() const;
};

/// The cubic of the canonical ideal reduced modulo the quadric (no monomial divisible by z1 z3),
/// with its grlex-leading coefficient equal to 1.
struct CubicForm {
    Form form;

    Scalar operator()(const ProjPoint& z) const { return form(z); }
    std::string str() const;
};

/// A symmetric 4x4 tensor in Sym^2.
struct SymTensor {
    Matrix m{4, 4};
};

/// Distinct non-branch x-values drawn from a seeded mt19937_64, avoiding `exclude`.
std::vector<Scalar> sample_fibers(const CurveParams& u, int count, std::uint64_t seed,
                                  const std::vector<Scalar>& exclude = {});

/// Value of each monomial at the three points over x0, as coefficients of 1, y, y^2 in
/// Q(w)[y] / (y^3 - Q(x0)); z = (s0 y, s1, s2 x0, s3 x0^2) for basis scales s.
std::array<Vector, 3> fiber_values(const CurveParams& u, const std::vector<Monomial>& monos, const Scalar& x0,
                                   const ProjPoint& basis_scale);

/// The form evaluated at the three points over x0 (zero vector iff it vanishes on the fiber).
std::array<Scalar, 3> evaluate_on_fiber(const CurveParams& u, const Form& f, const Scalar& x0);

/// Evaluation matrix of the monomials at sampled fibers, three rows per fiber.
Matrix evaluation_matrix(const CurveParams& u, const std::vector<Monomial>& monos, const std::vector<Scalar>& xs,
                         const ProjPoint& basis_scale);

/// Kernel of Sym^2 H^0(K) -> H^0(2K), normalized so the z2^2 coefficient is 1. With basis
/// scales s the canonical coordinates are z_i = s_i w_i. Throws StructuralError unless the
/// kernel is 1-dimensional on two disjoint samples and the two agree.
QuadricForm sym2_relation(const CurveParams& u, const ProjPoint& basis_scale = {1, 1, 1, 1},
                          std::uint64_t seed = 1);

/// Dimension of the kernel of Sym^3 H^0(K) -> H^0(3K) at the sampled fibers.
int sym3_kernel_dimension(const CurveParams& u, std::uint64_t seed = 1);

/// The cubic generator of the canonical ideal. Throws StructuralError unless the Sym^3 kernel is
/// 5-dimensional and the reduced cubic agrees on two disjoint samples.
CubicForm canonical_cubic(const CurveParams& u, std::uint64_t seed = 1);

/// Whether a cubic lies in span{z_i q}.
bool in_quadric_span(const Form& cubic, const Form& quadric);

/// Rewrites z1 z3 as z2^2 until no monomial is divisible by z1 z3.
Form reduce_mod_quadric(const Form& f);

int noether_rank(const SymTensor& t);
/// v v^T; throws DomainError for v = 0.
SymTensor veronese(const ProjPoint& v);
/// Whether the rank-1 direction v v^T is a Schiffer variation, i.e. v lies on the canonical curve.
bool schiffer_test(const CurveParams& u, const ProjPoint& v);

}  // namespace trigonal
