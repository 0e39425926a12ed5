#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "trigonal/curve.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/matrix.hpp"
#include "trigonal/poly.hpp"
#include "trigonal/scalar.hpp"

namespace trigonal {

/// xi = a1 d/du1 + a2 d/du2 + a3 d/du3.
struct TangentVector {
    std::array<Scalar, 3> a;

    /// d/du_j, 1-based.
    static TangentVector basis(int j);
    bool is_zero() const;
    std::string str() const;
    friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

/// Entry (l, k) is the coefficient of 6*pi*i in the integral of w_l ^ (d_xi w_k),
/// basis order (w0, w1, w2, w3).
struct PairingMatrix {
    std::array<std::array<Scalar, 4>, 4> entry{};

    const Scalar& operator()(int l, int k) const {
        return entry[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
    }
    Matrix as_matrix() const;
    friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;
};

/// Closed-form pairing: (0,k) = (k,0) = sum_j a_j u_j^(k-1) / Q'(u_j) for k >= 1, zero elsewhere.
PairingMatrix pairing_matrix(const CurveParams& u, const TangentVector& xi);

/// Residue of w_l ^ d_j w_k at the branch point over u_j, computed from local expansions in y,
/// in units of 6*pi*i and before sign normalization. Throws StructuralError when the principal
/// part of d_j w_k has a 1/y term.
Scalar raw_residue_pairing(const CurveParams& u, int j, int l, int k, int series_order = 12);

/// The global sign relating raw residues to the closed form, calibrated once at u = (0, 2, 3).
int residue_sign();

/// raw_residue_pairing multiplied by residue_sign(); equals pairing_matrix(u, d_j)(l, k).
Scalar residue_pairing(const CurveParams& u, int j, int l, int k, int series_order = 12);

struct NumericOptions {
    int nodes = 256;          ///< trapezoid nodes on each circle
    int principal_terms = 6;  ///< number of negative powers of y resolved in d_j w_k
};

/// Floating-point version of raw_residue_pairing times residue_sign(): contour integrals over a
/// circle |y| = rho around the branch point over u_j, with x(y) recovered by Newton's method.
std::complex<double> numeric_residue_pairing(const CurveParams& u, int j, int l, int k,
                                             const NumericOptions& opts = {});

/// Rank of the pairing matrix: 0 for xi = 0, otherwise 2.
int ks_rank(const CurveParams& u, const TangentVector& xi);

/// c_l = sum_j a_j u_j^(l-1) / Q'(u_j), l = 1..3; equals a * A.
std::array<Scalar, 3> covector(const CurveParams& u, const TangentVector& xi);

/// Rows (1, u_j, u_j^2) / Q'(u_j).
Matrix matrix_A(const CurveParams& u);

/// Basis of {sum b_l w_l : b . c = 0} inside span(w1, w2, w3). Throws ZeroTangent for xi = 0.
std::vector<Differential> kernel_W(const CurveParams& u, const TangentVector& xi);

/// Null space of the pairing matrix, as differentials.
std::vector<Differential> pairing_kernel(const PairingMatrix& m);

struct ConicReport {
    std::array<Scalar, 3> c;
    Scalar value;  ///< c1 c3 - c2^2
    bool on_conic = false;
};

ConicReport conic_condition(const CurveParams& u, const TangentVector& xi);

/// Common zero divisor of W_xi, recomputed with a second basis. Throws ZeroTangent for xi = 0.
Divisor base_locus(const CurveParams& u, const TangentVector& xi);

/// Pairing against the ten products w_i w_j (i <= j), in the order of product_index().
std::array<Scalar, 10> product_functional(const CurveParams& u, const TangentVector& xi);
/// Index pairs (i, j), i <= j, in lexicographic order.
const std::array<std::array<int, 2>, 10>& product_index();
/// w_i w_j as a quadratic differential over Q^2.
KDifferential product_differential(const CurveParams& u, int i, int j);

/// <xi, q> for q given by coefficients on the ten products.
Scalar xi_functional(const CurveParams& u, const TangentVector& xi, const std::array<Scalar, 10>& coeffs);
/// <xi, q> for a holomorphic quadratic differential; throws DomainError when q has poles.
Scalar xi_functional(const CurveParams& u, const TangentVector& xi, const KDifferential& q);
/// Coefficients of q on the ten products (one choice; the product map has a 1-dimensional kernel).
std::array<Scalar, 10> product_coordinates(const CurveParams& u, const KDifferential& q);

struct SupportReport {
    bool supported = false;
    int h0_quadratic = 0;     ///< dim H^0(2K), always 9
    int h0_twisted = 0;       ///< dim H^0(2K - D)
    int functional_rank = 0;  ///< rank of <xi, .> restricted to H^0(2K - D)
};

/// Whether xi annihilates every quadratic differential vanishing on D.
/// Throws ZeroTangent for xi = 0 and DomainError for non-effective D.
SupportReport support_report(const CurveParams& u, const TangentVector& xi, const Divisor& d);
bool supported_on(const CurveParams& u, const TangentVector& xi, const Divisor& d);

/// Basis (as ten-coefficient vectors) of the quadratic differentials vanishing on D, taken modulo
/// the product relation w2^2 - w1 w3.
std::vector<std::array<Scalar, 10>> quadratic_sections(const CurveParams& u, const Divisor& d);

enum class CeresaVariant { NotOnConic, OnConicNotSupported, OnConicSupported };
std::string to_string(CeresaVariant v);

struct CeresaCertificate {
    CeresaVariant variant = CeresaVariant::NotOnConic;
    ConicReport conic;
    Divisor base_locus;
    std::vector<Differential> kernel;
    SupportReport support;
};

CeresaCertificate delta_nu_c_test(const CurveParams& u, const TangentVector& xi);

/// The direction whose covector is (1, t, t^2), or (0, 0, 1) at t = infinity.
TangentVector cone_directions(const CurveParams& u, const P1Point& t);

/// Exact covector and conic value over the locus u = (r, r w, r w^2), r^3 = a, with
/// xi_j = 1 / (3 u_j^2), as rational functions of a.
struct Qz24Report {
    std::array<RatFunc, 3> c;
    RatFunc value;
};
Qz24Report qz24_probe();

}  // namespace trigonal
