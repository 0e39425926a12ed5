// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "trigonal/canonical_ideal.hpp"
#include "trigonal/deformation.hpp"
#include "trigonal/reports.hpp"
#include "trigonal/rulings.hpp"

using namespace trigonal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        if (!ok) ++failed_;
        ++total_;
    }
    Outcome outcome(const std::string& summary) const {
        Outcome o{failed_ == 0, summary};
        if (failed_ != 0) {
            o.detail += "; " + std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed:";
            for (const auto& f : failures_) o.detail += " [" + f + "]";
        }
        return o;
    }

private:
    int failed_ = 0;
    int total_ = 0;
    std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

Divisor branch_point(const Scalar& x, int m) {
    Divisor d;
    d.add_branch(x, m);
    return d;
}

// 1. Residue oracle reproduces the closed-form pairing with one global sign.
Outcome residues_match_closed_form() {
    const auto start = std::chrono::steady_clock::now();
    Checker ck;
    Sampler s(2024);
    std::optional<Scalar> eps;
    for (int i = 0; i < 20; ++i) {
        const CurveParams u = s.params();
        for (int j = 1; j <= 3; ++j) {
            const Scalar qp = testing::q_prime_by_roots(u, j);
            const Scalar sign = raw_residue_pairing(u, j, 0, 1) * qp;
            if (!eps) eps = sign;
            ck.expect(sign == *eps, "global sign differs at " + u.str());
            ck.expect(sign == Scalar(1) || sign == Scalar(-1), "sign not +-1");
            ck.expect(residue_pairing(u, j, 0, 1) == qp.inverse(), "normalized entry (0,1) != 1/Q'(u_j)");
            ck.expect(raw_residue_pairing(u, j, 0, 0).is_zero(), "(0,0) nonzero");
            for (int l = 1; l < 4; ++l)
                for (int k = 1; k < 4; ++k)
                    ck.expect(raw_residue_pairing(u, j, l, k).is_zero(), "entry with l,k >= 1 nonzero");
        }
    }
    const double t = seconds_since(start);
    ck.expect(t < 10.0, "runtime " + fmt_seconds(t));
    return ck.outcome("20 u x 3 j, eps = " + (eps ? eps->str() : "?") + ", " + fmt_seconds(t));
}

// 2. Kernel of the pairing matrix equals the covector kernel; rank 2.
Outcome pairing_kernel_matches_covector() {
    Checker ck;
    Sampler s(2025);
    for (int i = 0; i < 50; ++i) {
        const CurveParams u = s.params();
        const TangentVector xi = s.tangent();
        const Matrix m = pairing_matrix(u, xi).as_matrix();
        const Matrix restricted = m.select_columns({1, 2, 3});
        const auto c = testing::covector_by_roots(u, xi.a);
        const auto closed = kernel_basis(Matrix::from_rows({Vector(c.begin(), c.end())}));
        ck.expect(same_span(kernel_basis(restricted), closed), "kernel mismatch at " + u.str());
        std::vector<Vector> w;
        for (const auto& d : kernel_W(u, xi)) w.push_back({d.b[0], d.b[1], d.b[2]});
        ck.expect(same_span(w, closed), "kernel_W mismatch");
        ck.expect(ks_rank(u, xi) == 2 && rank(m) == 2, "rank != 2");
    }
    return ck.outcome("50 random (u, xi)");
}

// 3. on_conic iff base locus nonempty, with cone loci equal to fibers.
Outcome conic_iff_base_locus() {
    Checker ck;
    Sampler s(2026);
    int cone = 0, random_on = 0;
    for (int i = 0; i < 50; ++i) {
        const CurveParams u = s.params();
        P1Point t = P1Point(s.scalar());
        switch (i % 10) {
            case 0: t = P1Point::infinity(); break;
            case 1: t = P1Point(u.u(1 + i % 3)); break;
            case 2: t = P1Point(Scalar::zeta_power(i)); break;
            default: break;
        }
        const TangentVector xi = cone_directions(u, t);
        const bool on = conic_condition(u, xi).on_conic;
        const Divisor locus = base_locus(u, xi);
        ck.expect(on, "cone direction off the conic at t = " + t.str());
        ck.expect(on == !locus.is_empty(), "equivalence fails on a cone direction");
        ck.expect(locus == trigonal_fiber(u, t), "base locus " + locus.str() + " is not the fiber over " + t.str());
        ++cone;
    }
    for (int i = 0; i < 50; ++i) {
        const CurveParams u = s.params();
        const TangentVector xi = s.tangent();
        const bool on = conic_condition(u, xi).on_conic;
        random_on += on;
        ck.expect(on == !base_locus(u, xi).is_empty(), "equivalence fails on a random direction");
    }
    return ck.outcome(std::to_string(cone) + " cone + 50 random directions (" + std::to_string(random_on) +
                      " random on conic)");
}

// 4. Canonical ideal: quadric, 5-dimensional cubic space, reduced cubic on the curve.
Outcome canonical_ideal() {
    Checker ck;
    Sampler s(2027);
    const ProjPoint vertex = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
    for (int i = 0; i < 10; ++i) {
        const CurveParams u = s.params();
        const QuadricForm qf = sym2_relation(u);
        ck.expect(qf.str() == "z2^2-z1*z3", "quadric " + qf.str());
        ck.expect(sym3_kernel_dimension(u) == 5, "Sym^3 kernel dimension");
        const CubicForm c = canonical_cubic(u, 1);
        ck.expect(canonical_cubic(u, 2).form == c.form, "cubic differs between sample sets");
        int points = 0;
        for (const Scalar& x0 : sample_fibers(u, 10, 500 + static_cast<std::uint64_t>(i))) {
            for (const Scalar& v : evaluate_on_fiber(u, c.form, x0)) {
                ck.expect(v.is_zero(), "cubic nonzero on a curve point");
                ++points;
            }
        }
        ck.expect(points == 30, "point count");
        ck.expect(!c(vertex).is_zero(), "cubic vanishes at the cone vertex");
    }
    return ck.outcome("10 random u, 30 curve points each");
}

// 5. Support of d/du1 on branch divisors; the relation is annihilated.
Outcome support_test() {
    Checker ck;
    const CurveParams u = testing::u023();
    const TangentVector d1 = TangentVector::basis(1);
    const SupportReport three = support_report(u, d1, branch_point(Scalar(0), 3));
    const SupportReport one = support_report(u, d1, branch_point(Scalar(0), 1));
    ck.expect(three.supported, "not supported on 3*B(0)");
    ck.expect(!one.supported, "supported on B(0)");
    ck.expect(three.h0_quadratic == 9 && one.h0_quadratic == 9, "dim H0(2K) != 9");
    Sampler s(2028);
    std::array<Scalar, 10> relation{};
    relation[7] = Scalar(1);   // (2,2)
    relation[6] = Scalar(-1);  // (1,3)
    ck.expect(product_index()[7] == std::array<int, 2>{2, 2} && product_index()[6] == std::array<int, 2>{1, 3},
              "product index layout");
    for (int i = 0; i < 20; ++i) {
        const CurveParams v = s.params();
        ck.expect(xi_functional(v, s.tangent(), relation).is_zero(), "relation not annihilated");
    }
    return ck.outcome("dim H0(2K - 3*B(0)) = " + std::to_string(three.h0_twisted) +
                      ", dim H0(2K - B(0)) = " + std::to_string(one.h0_twisted));
}

// 6. Ruling divisors agree under the pairing relation; witnesses otherwise.
Outcome rational_triviality() {
    Checker ck;
    Sampler s(2029);
    for (int i = 0; i < 20; ++i) {
        const CurveParams u = s.params();
        P1Point t1 = P1Point(s.scalar());
        if (i == 0) t1 = P1Point(0);
        if (i == 1) t1 = P1Point(1);
        if (i == 2) t1 = P1Point::infinity();
        if (i >= 3 && i < 9) {
            const Scalar b = u.branch_x()[static_cast<std::size_t>(i - 3)];
            if (!(b == Scalar(1))) t1 = P1Point((b - Scalar(1)).inverse());
        }
        const D0Cycle c = d0_cycle(u, t1);
        ck.expect(c.plus == c.minus, "divisors differ at t1 = " + t1.str());
        ck.expect(c.plus == trigonal_fiber(u, RulingLine::make(1, t1).fiber_x()), "plus is not the fiber");
    }
    for (int i = 0; i < 10; ++i) {
        const CurveParams u = s.params();
        const P1Point t1 = i == 0 ? P1Point::infinity() : P1Point(s.scalar());
        P1Point t2 = i == 1 ? P1Point::infinity() : P1Point(s.scalar());
        if (t2 == paired_parameter(t1)) t2 = P1Point(t1.is_infinity() ? Scalar(3) : t1.value() + Scalar(7));
        const D0Cycle c = d0_pair(u, t1, t2);
        ck.expect(c.witness.has_value(), "no witness for a violating pair");
        if (c.witness) ck.expect(divisor_of_function(u, *c.witness) == c.plus - c.minus, "witness divisor mismatch");
    }
    return ck.outcome("20 related pairs, 10 violating pairs");
}

// 7. Canonical divisors have degree 6; the divisor of w0 is the branch divisor.
Outcome divisor_degrees() {
    Checker ck;
    Sampler s(2030);
    for (int i = 0; i < 5; ++i) {
        const CurveParams u = s.params();
        for (int k = 0; k < 10; ++k) {
            const Divisor d = divisor_of(u, s.differential());
            ck.expect(d.degree() == 6 && d.is_effective(), "divisor " + d.str());
        }
        ck.expect(divisor_of(u, Differential::omega(0)) == branch_divisor(u), "div(w0) != branch divisor");
    }
    return ck.outcome("5 u x 10 differentials");
}

// 8. Floating contour quadrature against the exact values.
Outcome numeric_oracle() {
    const auto start = std::chrono::steady_clock::now();
    Checker ck;
    Sampler s(2031);
    struct Case {
        CurveParams u;
        int j, l, k;
    };
    std::vector<Case> cases = {{testing::u023(), 1, 0, 1}};
    cases.push_back({s.params(), 2, 0, 2});
    cases.push_back({s.params(), 3, 0, 3});
    cases.push_back({s.params(), 1, 3, 0});
    cases.push_back({s.params(), 2, 0, 1});
    double worst = 0;
    for (const auto& c : cases) {
        const Scalar exact = pairing_matrix(c.u, TangentVector::basis(c.j))(c.l, c.k);
        const auto z = numeric_residue_pairing(c.u, c.j, c.l, c.k);
        const double rel = std::abs(z - exact.to_complex()) / std::abs(exact.to_complex());
        worst = std::max(worst, rel);
        ck.expect(rel <= 1e-8, "relative error " + std::to_string(rel));
    }
    const double t = seconds_since(start);
    ck.expect(t < 5.0, "runtime " + fmt_seconds(t));
    std::ostringstream os;
    os << "5 cases, worst relative error " << worst << ", " << fmt_seconds(t);
    return ck.outcome(os.str());
}

// 9. Cube-root family covector, rederived from power sums of the cube roots of a.
Outcome qz24_probe_check() {
    Checker ck;
    const RatFunc a = RatFunc::x();
    // u_j = r w^j with r^3 = a; Q'(u_j) = 3 u_j^2 (a - 1) and xi_j = 1/(3 u_j^2), so
    // c_l = sum_j u_j^(l-5) / (9 (a - 1)); the power sum of u_j^m is 3 a^(m/3) when 3 | m, else 0.
    const auto power_sum = [&](int m) { return m % 3 == 0 ? RatFunc(3) * a.pow(m / 3) : RatFunc(0); };
    std::array<RatFunc, 3> expected;
    for (int l = 1; l <= 3; ++l)
        expected[static_cast<std::size_t>(l - 1)] = power_sum(l - 5) / (RatFunc(9) * (a - RatFunc(1)));
    const Qz24Report probe = qz24_probe();
    for (std::size_t i = 0; i < 3; ++i) ck.expect(probe.c[i] == expected[i], "covector entry " + std::to_string(i));
    ck.expect(expected[1] == (RatFunc(3) * a * (a - RatFunc(1))).inverse(), "hand form of c2");
    const Json report = qz24_report(Scalar(2));
    ck.expect(report["at"]["conic_value"] == "-1/36", "conic value at a = 2");
    ck.expect(report["variant"] == "NotOnConic", "variant");
    ck.expect(report.contains("open_question"), "annotation missing");
    return ck.outcome("c(a) = (0, " + probe.c[1].str("a") + ", 0), value at 2 = " +
                      report["at"]["conic_value"].get<std::string>());
}

struct Process {
    int code;
    std::string out;
};

Process run_cli_binary(const std::string& args) {
    const std::string cmd = std::string(TRIGONAL_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

// 10. Byte-identical scans and the documented exit codes.
Outcome determinism_and_exit_codes() {
    Checker ck;
    const Process first = run_cli_binary("scan --random 100 --seed 7");
    const Process second = run_cli_binary("scan --random 100 --seed 7");
    ck.expect(first.code == 0, "scan exit code");
    ck.expect(!first.out.empty() && first.out == second.out, "scan output differs between runs");
    int not_on_conic = -1;
    const auto last = first.out.rfind('\n', first.out.size() - 2);
    if (last != std::string::npos) {
        const Json summary = Json::parse(first.out.substr(last + 1), nullptr, false);
        if (summary.is_object()) not_on_conic = summary["strata"]["NotOnConic"].get<int>();
    }
    ck.expect(not_on_conic >= 90, "NotOnConic count " + std::to_string(not_on_conic));
    const Process ok = run_cli_binary("analyze --u 0,2,3 --xi 1,0,0");
    ck.expect(ok.code == 0 && ok.out.find("\"OnConicSupported\"") != std::string::npos, "analyze example");
    const Process bad_u = run_cli_binary("analyze --u 1,2,3 --xi 1,0,0");
    ck.expect(bad_u.code == 2 && bad_u.out.find("u1^3 = 1") != std::string::npos, "invalid u exit code");
    const Process zero = run_cli_binary("analyze --u 0,2,3 --xi 0,0,0");
    ck.expect(zero.code == 3, "zero tangent exit code");
    const Process residue = run_cli_binary("residue-check --u 0,2,3 --j 1 --numeric");
    ck.expect(residue.code == 0, "residue-check exit code");
    return ck.outcome("scan seed 7: " + std::to_string(not_on_conic) + "/100 NotOnConic; exits 0/2/3 as documented");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"residue oracle matches the closed-form pairing", residues_match_closed_form},
        {"pairing kernel equals the covector kernel", pairing_kernel_matches_covector},
        {"conic condition iff nonempty base locus", conic_iff_base_locus},
        {"canonical ideal quadric and cubic", canonical_ideal},
        {"support on branch divisors", support_test},
        {"rational triviality of ruling divisors", rational_triviality},
        {"canonical divisor degrees", divisor_degrees},
        {"numeric contour oracle", numeric_oracle},
        {"cube-root family probe", qz24_probe_check},
        {"CLI determinism and exit codes", determinism_and_exit_codes},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << o.detail
                  << ")" << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
