#include "doctest.h"
#include "support.hpp"
#include "trigonal/deformation.hpp"
#include "trigonal/error.hpp"

#include <cmath>

using namespace trigonal;
using testing::q;
using testing::u023;

namespace {

std::vector<Vector> coords123(const std::vector<Differential>& ds) {
    std::vector<Vector> out;
    for (const auto& d : ds) out.push_back({d.b[0], d.b[1], d.b[2]});
    return out;
}

std::array<Scalar, 10> product_coeffs(int i, int j, const Scalar& c = Scalar(1)) {
    std::array<Scalar, 10> out{};
    const auto& idx = product_index();
    for (std::size_t n = 0; n < 10; ++n)
        if (idx[n][0] == i && idx[n][1] == j) out[n] = c;
    return out;
}

std::array<Scalar, 10> relation_coeffs() {
    auto r = product_coeffs(2, 2);
    r[6] = Scalar(-1);
    REQUIRE(product_index()[6] == std::array<int, 2>{1, 3});
    return r;
}

Divisor branch_point(const Scalar& x, int m) {
    Divisor d;
    d.add_branch(x, m);
    return d;
}

}  // namespace

TEST_CASE("pairing_matrix examples") {
    const CurveParams u = u023();
    const PairingMatrix m = pairing_matrix(u, TangentVector::basis(1));
    CHECK(m(0, 1) == q(-1, 6));
    CHECK(m(1, 0) == q(-1, 6));
    CHECK(m(0, 2) == Scalar(0));
    CHECK(m(0, 0) == Scalar(0));
    Sampler s(53);
    for (int i = 0; i < 10; ++i) {
        const CurveParams v = s.params();
        const PairingMatrix p = pairing_matrix(v, s.tangent());
        for (int l = 1; l < 4; ++l)
            for (int k = 1; k < 4; ++k) CHECK(p(l, k) == Scalar(0));
        for (int j = 1; j <= 3; ++j)
            CHECK(pairing_matrix(v, TangentVector::basis(j))(0, 1) * testing::q_prime_by_roots(v, j) == Scalar(1));
    }
}

TEST_CASE("residue_pairing examples") {
    const CurveParams u = u023();
    CHECK(residue_pairing(u, 1, 0, 1) == q(-1, 6));
    CHECK(residue_pairing(u, 1, 0, 0) == Scalar(0));
    CHECK(residue_pairing(u, 1, 2, 3) == Scalar(0));
    CHECK(residue_sign() == -1);
}

TEST_CASE("residue oracle agrees with the closed form entrywise") {
    Sampler s(59);
    std::vector<CurveParams> us = {u023()};
    for (int i = 0; i < 2; ++i) us.push_back(s.params());
    for (const auto& u : us) {
        for (int j = 1; j <= 3; ++j) {
            const PairingMatrix m = pairing_matrix(u, TangentVector::basis(j));
            CHECK(raw_residue_pairing(u, j, 0, 1) * testing::q_prime_by_roots(u, j) == Scalar(residue_sign()));
            for (int l = 0; l < 4; ++l)
                for (int k = 0; k < 4; ++k) CHECK(residue_pairing(u, j, l, k) == m(l, k));
        }
    }
}

TEST_CASE("numeric contour oracle") {
    const CurveParams u = u023();
    const auto z = numeric_residue_pairing(u, 1, 0, 1);
    CHECK(std::abs(z - std::complex<double>(-1.0 / 6.0, 0)) < 1e-8 / 6.0);
    const auto zero = numeric_residue_pairing(u, 2, 3, 2);
    CHECK(std::abs(zero) < 1e-10);
}

TEST_CASE("ks_rank") {
    const CurveParams u = u023();
    CHECK(ks_rank(u, TangentVector{}) == 0);
    CHECK(ks_rank(u, TangentVector::basis(1)) == 2);
    CHECK(ks_rank(u, TangentVector{{Scalar(1), Scalar(1), Scalar(1)}}) == 2);
    Sampler s(61);
    for (int i = 0; i < 20; ++i) CHECK(ks_rank(s.params(), s.tangent()) == 2);
}

TEST_CASE("kernel_W examples") {
    const CurveParams u = u023();
    CHECK(same_span(coords123(kernel_W(u, TangentVector::basis(1))),
                    {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}}));
    Sampler s(67);
    for (int i = 0; i < 10; ++i) {
        const CurveParams v = s.params();
        for (int j = 1; j <= 3; ++j) {
            const Scalar& r = v.u(j);
            CHECK(same_span(coords123(kernel_W(v, TangentVector::basis(j))),
                            {{-r, Scalar(1), Scalar(0)}, {Scalar(0), -r, Scalar(1)}}));
        }
        const TangentVector xi = s.tangent();
        const auto w = kernel_W(v, xi);
        CHECK(w.size() == 2);
        CHECK(same_span(coords123(w), coords123(pairing_kernel(pairing_matrix(v, xi)))));
        for (const auto& d : pairing_kernel(pairing_matrix(v, xi))) CHECK(d.b0 == Scalar(0));
    }
    CHECK_THROWS_AS(kernel_W(u, TangentVector{}), ZeroTangent);
}

TEST_CASE("covector and matrix A") {
    Sampler s(71);
    for (int i = 0; i < 10; ++i) {
        const CurveParams u = s.params();
        const TangentVector xi = s.tangent();
        const auto c = covector(u, xi);
        CHECK(c == testing::covector_by_roots(u, xi.a));
        const Vector viaA = left_multiply(Vector(xi.a.begin(), xi.a.end()), matrix_A(u));
        CHECK(Vector(c.begin(), c.end()) == viaA);
    }
}

TEST_CASE("conic_condition examples") {
    Sampler s(73);
    for (int i = 0; i < 10; ++i) {
        const CurveParams u = s.params();
        const ConicReport r = conic_condition(u, TangentVector::basis(1));
        CHECK(r.on_conic);
        CHECK(r.value == Scalar(0));
        const Scalar scale = r.c[0];
        CHECK(r.c[1] == scale * u.u(1));
        CHECK(r.c[2] == scale * u.u(1) * u.u(1));
        const ConicReport inf = conic_condition(u, cone_directions(u, P1Point::infinity()));
        CHECK(inf.on_conic);
        CHECK(inf.c[0] == Scalar(0));
        CHECK(inf.c[1] == Scalar(0));
    }
    const ConicReport r = conic_condition(u023(), TangentVector{{Scalar(1), Scalar(1), Scalar(1)}});
    CHECK_FALSE(r.on_conic);
    CHECK(r.value == q(5, 182));
}

TEST_CASE("base_locus examples") {
    const CurveParams u = u023();
    CHECK(base_locus(u, TangentVector::basis(1)) == branch_point(Scalar(0), 3));
    CHECK(base_locus(u, TangentVector::basis(2)) == branch_point(Scalar(2), 3));
    CHECK(base_locus(u, TangentVector{{Scalar(1), Scalar(1), Scalar(1)}}).is_empty());
    CHECK_THROWS_AS(base_locus(u, TangentVector{}), ZeroTangent);
}

TEST_CASE("on_conic iff the base locus is nonempty") {
    Sampler s(79);
    for (int i = 0; i < 15; ++i) {
        const CurveParams u = s.params();
        const TangentVector random = s.tangent();
        CHECK(conic_condition(u, random).on_conic == !base_locus(u, random).is_empty());
        const Scalar t = s.scalar();
        const TangentVector cone = cone_directions(u, P1Point(t));
        CHECK(conic_condition(u, cone).on_conic);
        CHECK(base_locus(u, cone) == trigonal_fiber(u, P1Point(t)));
    }
}

TEST_CASE("cone_directions") {
    Sampler s(83);
    for (int i = 0; i < 8; ++i) {
        const CurveParams u = s.params();
        const TangentVector xi = cone_directions(u, P1Point(u.u(1)));
        CHECK(xi.a[1] == Scalar(0));
        CHECK(xi.a[2] == Scalar(0));
        CHECK_FALSE(xi.a[0].is_zero());
        const auto w = kernel_W(u, cone_directions(u, P1Point::infinity()));
        CHECK(same_span(coords123(w), {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}}));
        CHECK(base_locus(u, cone_directions(u, P1Point::infinity())) == trigonal_fiber(u, P1Point::infinity()));
    }
}

TEST_CASE("xi_functional examples") {
    const CurveParams u = u023();
    const TangentVector d1 = TangentVector::basis(1);
    CHECK(xi_functional(u, d1, product_coeffs(0, 1)) == q(-1, 6));
    CHECK(xi_functional(u, d1, product_differential(u, 0, 1)) == q(-1, 6));
    Sampler s(89);
    for (int i = 0; i < 20; ++i) {
        const CurveParams v = s.params();
        const TangentVector xi = s.tangent();
        CHECK(xi_functional(v, xi, relation_coeffs()) == Scalar(0));
        CHECK(xi_functional(v, xi, product_coeffs(1, 1)) == Scalar(0));
        CHECK(xi_functional(v, xi, product_differential(v, 1, 1)) == Scalar(0));
        // Any coordinate choice of the same quadratic differential gives the same value.
        const KDifferential qd = product_differential(v, 0, 2);
        CHECK(xi_functional(v, xi, product_coordinates(v, qd)) == xi_functional(v, xi, product_coeffs(0, 2)));
    }
    const KDifferential pole{2, 3, UniPoly(1), UniPoly(), UniPoly()};
    CHECK_THROWS_AS(xi_functional(u, d1, pole), DomainError);
}

TEST_CASE("supported_on examples") {
    const CurveParams u = u023();
    const TangentVector d1 = TangentVector::basis(1);
    const SupportReport three = support_report(u, d1, branch_point(Scalar(0), 3));
    CHECK(three.supported);
    CHECK(three.h0_quadratic == 9);
    CHECK(three.h0_twisted == 6);
    const SupportReport one = support_report(u, d1, branch_point(Scalar(0), 1));
    CHECK_FALSE(one.supported);
    CHECK(one.h0_twisted == 8);
    CHECK_FALSE(supported_on(u, d1, Divisor{}));
    CHECK(quadratic_sections(u, Divisor{}).size() == 9);
    CHECK_THROWS_AS(supported_on(u, d1, -branch_point(Scalar(0), 1)), DomainError);
}

TEST_CASE("support is monotone in the divisor") {
    Sampler s(97);
    for (int i = 0; i < 4; ++i) {
        const CurveParams u = s.params();
        const TangentVector xi = i == 0 ? TangentVector::basis(2) : s.tangent();
        int previous_dim = 9;
        bool previous_supported = false;
        for (int m = 0; m <= 6; ++m) {
            const SupportReport r = support_report(u, xi, branch_point(u.u(2), m));
            CHECK(r.h0_twisted <= previous_dim);
            if (previous_supported) CHECK(r.supported);
            previous_dim = r.h0_twisted;
            previous_supported = r.supported;
        }
        if (i == 0) CHECK(previous_supported);
    }
}

TEST_CASE("delta_nu_c_test") {
    const CurveParams u = u023();
    const CeresaCertificate c = delta_nu_c_test(u, TangentVector::basis(1));
    CHECK(c.variant == CeresaVariant::OnConicSupported);
    CHECK(c.base_locus == branch_point(Scalar(0), 3));
    CHECK(to_string(c.variant) == "OnConicSupported");
    Sampler s(101);
    int off = 0;
    for (int i = 0; i < 20; ++i) off += delta_nu_c_test(u, s.tangent()).variant == CeresaVariant::NotOnConic;
    CHECK(off >= 18);

    // The cube-root locus u = (2, 2w, 2w^2), a = 8, with xi_j = 1/(3 u_j^2).
    const Scalar w = Scalar::zeta();
    const CurveParams v = CurveParams::validate(Scalar(2), Scalar(2) * w, Scalar(2) * w * w);
    TangentVector xi;
    for (int j = 1; j <= 3; ++j) xi.a[static_cast<std::size_t>(j - 1)] = (Scalar(3) * v.u(j) * v.u(j)).inverse();
    const CeresaCertificate probe = delta_nu_c_test(v, xi);
    CHECK(probe.variant == CeresaVariant::NotOnConic);
    CHECK(probe.conic.c[1] == q(1, 168));
    CHECK(probe.conic.value == q(-1, 28224));
}

TEST_CASE("qz24_probe") {
    const Qz24Report r = qz24_probe();
    CHECK(r.c[0].is_zero());
    CHECK(r.c[2].is_zero());
    CHECK(r.c[1].str("a") == "1/(3*a^2-3*a)");
    CHECK(r.value.str("a") == "-1/(9*a^4-18*a^3+9*a^2)");
    CHECK(r.value(Scalar(2)) == q(-1, 36));
}
