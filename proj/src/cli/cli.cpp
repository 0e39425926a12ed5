#include "trigonal/cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "trigonal/error.hpp"
#include "trigonal/reports.hpp"

namespace trigonal {

namespace {

struct Options {
    std::string u = "0,2,3";
    std::string xi;
    int j = 1;
    std::string t1;
    std::string t;
    std::string a;
    std::string point;
    std::size_t random = 0;
    std::uint64_t seed = 1;
    std::string grid;
    bool numeric = false;
    std::string format = "json";
    int series_order = 12;
    bool timing = false;
    unsigned jobs = 1;
};

CurveParams parse_u(const std::string& text) {
    const auto v = parse_scalar_list(text, 3);
    return CurveParams::validate(v[0], v[1], v[2]);
}

TangentVector parse_xi(const std::string& text) {
    const auto v = parse_scalar_list(text, 3);
    return TangentVector{{v[0], v[1], v[2]}};
}

void require_json(const Options& o, const std::string& command) {
    if (o.format != "json") throw InvalidParameters("--format csv is not available for " + command);
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const Options& o, std::ostream& out) {
    require_json(o, "analyze");
    const auto start = std::chrono::steady_clock::now();
    const CurveParams u = parse_u(o.u);
    if (o.xi.empty()) throw InvalidParameters("analyze needs --xi");
    Json report = analyze_report(u, parse_xi(o.xi));
    if (o.timing) {
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        report["timing_ms"] = ms.count();
    }
    print_json(out, report);
    return kExitOk;
}

int cmd_residue_check(const Options& o, std::ostream& out) {
    const CurveParams u = parse_u(o.u);
    if (o.j < 1 || o.j > 3) throw InvalidParameters("--j must be 1, 2 or 3");
    if (o.series_order < 3) throw InvalidParameters("--series-order must be at least 3");
    const ResidueTable table = residue_table(u, o.j, o.numeric, o.series_order);
    if (o.format == "csv") {
        out << "l,k,closed,oracle" << (o.numeric ? ",numeric_re,numeric_im" : "") << '\n';
        for (const auto& r : table.rows) {
            out << r.l << ',' << r.k << ',' << r.closed.str() << ',' << r.oracle.str();
            if (r.numeric_re) out << ',' << Json(*r.numeric_re).dump() << ',' << Json(*r.numeric_im).dump();
            out << '\n';
        }
    } else {
        Json report{{"command", "residue-check"}, {"input", {{"u", to_json(u)["u"]}, {"j", o.j}}}};
        report.update(to_json(table));
        report["tags"] = Json{{"entries", "pairing-residue-formula"}};
        print_json(out, report);
    }
    return table.exact_agree && table.numeric_agree ? kExitOk : kExitOracleDisagreement;
}

int cmd_scan(const Options& o, std::ostream& out, bool u_given) {
    if (o.grid.empty() && o.random == 0) throw InvalidParameters("scan needs --grid cone:N|box:R or --random N");
    if (!o.grid.empty() && o.random != 0) throw InvalidParameters("--grid and --random are exclusive");
    std::optional<CurveParams> u;
    if (u_given || !o.grid.empty()) u = parse_u(o.u);
    const auto rows = scan(o.grid, u, o.random, o.seed, o.jobs);
    const Json summary = scan_summary(rows);
    if (o.format == "csv") {
        out << "index,u1,u2,u3,xi1,xi2,xi3,conic_value,on_conic,variant,note\n";
        for (const auto& r : rows) {
            out << r.index << ',' << r.u.u(1).str() << ',' << r.u.u(2).str() << ',' << r.u.u(3).str() << ','
                << r.xi.a[0].str() << ',' << r.xi.a[1].str() << ',' << r.xi.a[2].str() << ','
                << r.conic_value.str() << ',' << (r.conic_value.is_zero() ? "true" : "false") << ','
                << to_string(r.variant) << ',' << r.note << '\n';
        }
        out << "# " << summary.dump() << '\n';
    } else {
        for (const auto& r : rows) out << to_json(r).dump() << '\n';
        out << summary.dump() << '\n';
    }
    return kExitOk;
}

int cmd_ideal(const Options& o, std::ostream& out) {
    require_json(o, "ideal");
    print_json(out, ideal_report(parse_u(o.u), o.seed));
    return kExitOk;
}

int cmd_schiffer(const Options& o, std::ostream& out) {
    require_json(o, "schiffer");
    if (o.point.empty()) throw InvalidParameters("schiffer needs --point z0,z1,z2,z3");
    const auto v = parse_scalar_list(o.point, 4);
    print_json(out, schiffer_report(parse_u(o.u), {v[0], v[1], v[2], v[3]}));
    return kExitOk;
}

int cmd_d0(const Options& o, std::ostream& out) {
    require_json(o, "d0");
    if (o.t1.empty()) throw InvalidParameters("d0 needs --t1");
    std::optional<P1Point> t2;
    if (!o.t.empty()) t2 = P1Point::parse(o.t);
    print_json(out, d0_report(parse_u(o.u), P1Point::parse(o.t1), t2));
    return kExitOk;
}

int cmd_qz24(const Options& o, std::ostream& out) {
    require_json(o, "qz24");
    std::optional<Scalar> a;
    if (!o.a.empty()) a = Scalar::parse(o.a);
    print_json(out, qz24_report(a));
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact deformation invariants of the trigonal genus-4 family y^3 = (x^3-1)(x-u1)(x-u2)(x-u3)",
                 "trigonal"};
    app.require_subcommand(1);

    const auto add_u = [&](CLI::App* sub) {
        return sub->add_option("--u", o.u, "branch parameters u1,u2,u3 (default 0,2,3)");
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto* analyze = app.add_subcommand("analyze", "full report for one (u, xi)");
    add_u(analyze);
    analyze->add_option("--xi", o.xi, "tangent direction a1,a2,a3")->required();
    analyze->add_flag("--timing", o.timing, "include wall-clock time (output is then not reproducible)");
    add_format(analyze);

    auto* residue = app.add_subcommand("residue-check", "closed-form pairing vs. series residues");
    add_u(residue);
    residue->add_option("--j", o.j, "coordinate direction 1, 2 or 3");
    residue->add_flag("--numeric", o.numeric, "add a floating contour quadrature column");
    residue->add_option("--series-order", o.series_order, "local series precision (default 12)");
    add_format(residue);

    auto* scan_cmd = app.add_subcommand("scan", "stratify many directions by certificate");
    CLI::Option* scan_u = add_u(scan_cmd);
    scan_cmd->add_option("--random", o.random, "number of random (u, xi) rows");
    scan_cmd->add_option("--seed", o.seed, "PRNG seed");
    scan_cmd->add_option("--grid", o.grid, "cone:N (cone directions) or box:R (integer box) at fixed u");
    scan_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(scan_cmd);

    auto* ideal = app.add_subcommand("ideal", "quadric and cubic of the canonical ideal");
    add_u(ideal);
    ideal->add_option("--seed", o.seed, "fiber sampling seed");
    add_format(ideal);

    auto* schiffer = app.add_subcommand("schiffer", "Schiffer test for the rank-1 direction at a point");
    add_u(schiffer);
    schiffer->add_option("--point", o.point, "projective point z0,z1,z2,z3")->required();
    add_format(schiffer);

    auto* d0 = app.add_subcommand("d0", "ruling divisors and their rational equivalence");
    add_u(d0);
    d0->add_option("--t1", o.t1, "first ruling parameter (scalar or inf)")->required();
    d0->add_option("--t", o.t, "second ruling parameter; defaults to the paired value");
    add_format(d0);

    auto* qz24 = app.add_subcommand("qz24", "covector of the cube-root family");
    qz24->add_option("--a", o.a, "evaluate at this a");
    add_format(qz24);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidParameters;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (residue->parsed()) return cmd_residue_check(o, out);
        if (scan_cmd->parsed()) return cmd_scan(o, out, scan_u->count() > 0);
        if (ideal->parsed()) return cmd_ideal(o, out);
        if (schiffer->parsed()) return cmd_schiffer(o, out);
        if (d0->parsed()) return cmd_d0(o, out);
        if (qz24->parsed()) return cmd_qz24(o, out);
    } catch (const ZeroTangent& e) {
        err << "error: " << e.what() << '\n';
        return kExitZeroTangent;
    } catch (const StructuralError& e) {
        err << "error: " << e.what() << '\n';
        return kExitStructural;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidParameters;
    }
    return kExitInvalidParameters;
}

}  // namespace trigonal
