#include "doctest.h"
#include "support.hpp"
#include "trigonal/error.hpp"
#include "trigonal/matrix.hpp"
#include "trigonal/series.hpp"

using namespace trigonal;
using testing::q;

TEST_CASE("scalar: roots of unity relations") {
    const Scalar w = Scalar::zeta();
    CHECK(w.pow(3) == Scalar(1));
    CHECK(Scalar(1) + w + w * w == Scalar(0));
    CHECK(Scalar::zeta_power(-1) == w * w);
    CHECK(w.conj() == w * w);
    CHECK(w.norm() == 1);
}

TEST_CASE("scalar: field axioms on random elements") {
    Sampler s(11);
    for (int i = 0; i < 300; ++i) {
        const Scalar a = s.scalar(), b = s.scalar(), c = s.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(b * b.inverse() == Scalar(1));
        }
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
    CHECK_THROWS_AS(Scalar(0).inverse(), DegenerateInput);
}

TEST_CASE("scalar: literal round trip") {
    CHECK(Scalar::parse("1/2+-3/4*w") == Scalar(Rational(1, 2), Rational(-3, 4)));
    CHECK(Scalar::parse("1/2+-3/4*w").str() == "1/2+-3/4*w");
    CHECK(Scalar::parse("-w") == -Scalar::zeta());
    CHECK(Scalar::parse("4/6").str() == "2/3");
    CHECK(Scalar(Rational(0), Rational(2)).str() == "0+2*w");
    Sampler s(5);
    for (int i = 0; i < 100; ++i) {
        const Scalar a = s.scalar();
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK_THROWS_AS(Scalar::parse(""), DomainError);
    CHECK_THROWS_AS(Scalar::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Scalar::parse("abc"), DomainError);
    CHECK_THROWS_AS(Scalar::parse("2w"), DomainError);
}

TEST_CASE("scalar: cube roots") {
    CHECK(cube_root(Scalar(8)) == Scalar(2));
    CHECK(cube_root(Scalar(-27)) == Scalar(-3));
    CHECK(cube_root(q(1, 8)) == q(1, 2));
    CHECK_FALSE(cube_root(Scalar(2)).has_value());
    // w is not a cube in Q(w): its cube roots are primitive 9th roots of unity.
    CHECK_FALSE(cube_root(Scalar(8) * Scalar::zeta()).has_value());
    const Scalar c = Scalar(-2) * Scalar::zeta();
    const auto r = cube_root(c.pow(3));
    REQUIRE(r.has_value());
    CHECK(r->pow(3) == c.pow(3));
}

TEST_CASE("poly_gcd examples") {
    const UniPoly x = UniPoly::x();
    CHECK(poly_gcd(x * x - UniPoly(1), x - UniPoly(1)) == x - UniPoly(1));
    CHECK(poly_gcd(x - UniPoly(2), x - UniPoly(3)) == UniPoly(1));
    Sampler s(3);
    for (int i = 0; i < 20; ++i) {
        const Scalar u = s.scalar();
        const UniPoly xu = UniPoly::linear_root(u);
        const UniPoly g = poly_gcd(xu * xu, x * xu);
        if (u.is_zero()) {
            CHECK(g == x * x);
        } else {
            CHECK(g == xu);
            CHECK((xu * xu) % g == UniPoly());
            CHECK((x * xu) % g == UniPoly());
        }
    }
    CHECK_THROWS_AS(poly_gcd(UniPoly(), UniPoly()), DegenerateInput);
}

namespace {

UniPoly random_poly(Sampler& s, int max_degree) {
    std::vector<Scalar> c;
    const long deg = s.integer(0, max_degree);
    for (long i = 0; i <= deg; ++i) c.push_back(s.scalar(5, 3));
    return UniPoly(c);
}

}  // namespace

TEST_CASE("poly: gcd divides, division reconstructs, Yun reconstructs") {
    Sampler s(17);
    for (int i = 0; i < 60; ++i) {
        const UniPoly common = random_poly(s, 2);
        const UniPoly a = random_poly(s, 3) * common;
        const UniPoly b = random_poly(s, 3) * common;
        if (a.is_zero() || b.is_zero()) continue;
        const UniPoly g = poly_gcd(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(g.degree() <= std::min(a.degree(), b.degree()));
        if (!common.is_zero()) CHECK(divides(common.monic(), g));
        const DivMod dm = divmod(a, b);
        CHECK(dm.quotient * b + dm.remainder == a);
        CHECK(dm.remainder.degree() < b.degree());
        const ExtendedGcd e = extended_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.gcd);
        UniPoly rebuilt(a.leading());
        for (const auto& [f, m] : squarefree_decomposition(a)) rebuilt *= f.pow(m);
        CHECK(rebuilt == a);
    }
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(Matrix(2, 2)).size() == 2);
    CHECK(kernel_basis(Matrix::identity(3)).empty());
    const Matrix row = Matrix::from_rows({{Scalar(1), Scalar(2), Scalar(4)}});
    const auto k = kernel_basis(row);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + Scalar(2) * v[1] + Scalar(4) * v[2] == Scalar(0));
    CHECK(rank(Matrix::from_rows(k)) == 2);
}

TEST_CASE("matrix: rank-nullity, kernel, inverse on random matrices") {
    Sampler s(23);
    for (int i = 0; i < 40; ++i) {
        const auto rows = static_cast<std::size_t>(s.integer(1, 5));
        const auto cols = static_cast<std::size_t>(s.integer(1, 5));
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = s.integer(0, 2) == 0 ? Scalar(0) : s.scalar(3, 2);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.size() == cols);
        for (const auto& v : k) CHECK(is_zero(m * v));
        if (!k.empty()) CHECK(rank(Matrix::from_rows(k)) == k.size());
        if (rows == cols) {
            const Scalar d = determinant(m);
            CHECK(d.is_zero() == (rank(m) < rows));
            if (!d.is_zero()) CHECK(m * inverse(m) == Matrix::identity(rows));
        }
    }
    CHECK_THROWS_AS(inverse(Matrix(2, 2)), DegenerateInput);
}

TEST_CASE("local_series examples") {
    const auto u = testing::u023();
    const LocalSeries sx = local_series(u.q_poly(), Scalar(0), RatFunc::x(), 8);
    CHECK(sx.valuation() == 3);
    CHECK(sx.coeff(3) == q(-1, 6));
    CHECK(sx.coeff(4) == Scalar(0));
    CHECK(sx.coeff(5) == Scalar(0));
    const LocalSeries one = local_series(u.q_poly(), Scalar(0), RatFunc(1), 8);
    CHECK(one.truncated(8) == LocalSeries::constant(Scalar(1), 8));
    for (int j = 1; j <= 3; ++j) {
        const LocalSeries s = local_series(u.q_poly(), u.u(j), RatFunc(UniPoly::linear_root(u.u(j))), 8);
        CHECK(s.valuation() == 3);
        CHECK(s.coeff(3) == u.q_prime_at_u(j).inverse());
    }
}

TEST_CASE("local_series is multiplicative") {
    Sampler s(29);
    for (int i = 0; i < 10; ++i) {
        const CurveParams u = s.params();
        const int j = static_cast<int>(s.integer(1, 3));
        const RatFunc f(random_poly(s, 3), UniPoly::linear_root(u.u(j) + Scalar(1)));
        const RatFunc g(random_poly(s, 2));
        const LocalSeries sf = local_series(u.q_poly(), u.u(j), f, 9);
        const LocalSeries sg = local_series(u.q_poly(), u.u(j), g, 9);
        const LocalSeries sfg = local_series(u.q_poly(), u.u(j), f * g, 9);
        const LocalSeries prod = sf * sg;
        const int order = std::min(prod.order(), sfg.order());
        CHECK(order >= 9);
        CHECK(prod.truncated(order) == sfg.truncated(order));
    }
}

TEST_CASE("local series arithmetic tracks truncation") {
    const LocalSeries a({{-2, Scalar(1)}, {0, Scalar(3)}}, 4);
    const LocalSeries b({{1, Scalar(2)}}, 5);
    const LocalSeries p = a * b;
    CHECK(p.order() == 3);
    CHECK(p.coeff(-1) == Scalar(2));
    CHECK(p.residue() == Scalar(2));
    CHECK((a * a.inverse()).truncated(3) == LocalSeries::constant(Scalar(1), 3));
    CHECK_THROWS_AS(LocalSeries::monomial(-1, Scalar(1), 3).antiderivative(), DomainError);
}
