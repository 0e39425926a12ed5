#include "trigonal/reports.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "trigonal/error.hpp"
#include "trigonal/sampling.hpp"

namespace trigonal {

std::vector<Scalar> parse_scalar_list(const std::string& text, std::size_t expected) {
    std::vector<Scalar> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
    if (out.size() != expected) {
        throw DomainError("expected " + std::to_string(expected) + " comma-separated values, got \"" + text + "\"");
    }
    return out;
}

Json to_json(const Scalar& s) { return s.str(); }

Json to_json(const CurveParams& u) { return Json{{"u", {u.u(1).str(), u.u(2).str(), u.u(3).str()}}}; }

Json to_json(const CurvePoint& p) {
    switch (p.kind()) {
        case CurvePoint::Kind::Finite: return Json{{"kind", "finite"}, {"x", p.x().str()}, {"y", p.y().str()}};
        case CurvePoint::Kind::Branch: return Json{{"kind", "branch"}, {"x", p.x().str()}};
        case CurvePoint::Kind::Infinity: return Json{{"kind", "infinity"}, {"sheet", p.sheet()}};
    }
    return {};
}

Json to_json(const TangentVector& xi) { return Json::array({xi.a[0].str(), xi.a[1].str(), xi.a[2].str()}); }

Json to_json(const Differential& d) {
    const auto c = d.coords();
    return Json::array({c[0].str(), c[1].str(), c[2].str(), c[3].str()});
}

namespace {

void append_fibers(Json& out, const UniPoly& p, int sign) {
    if (p.degree() <= 0) return;
    for (const auto& [factor, m] : squarefree_decomposition(p)) {
        Json point{{"kind", "fiber"}};
        if (factor.degree() == 1) {
            point["x"] = (-factor.coeff(0)).str();
        } else {
            point["modulus"] = factor.str();
        }
        out.push_back(Json::array({point, sign * m}));
    }
}

}  // namespace

Json to_json(const Divisor& d) {
    Json out = Json::array();
    for (const auto& [x, m] : d.branch()) out.push_back(Json::array({Json{{"kind", "branch"}, {"x", x.str()}}, m}));
    append_fibers(out, d.fiber_num(), 1);
    append_fibers(out, d.fiber_den(), -1);
    for (int s = 0; s < 3; ++s) {
        const int m = d.infinity()[static_cast<std::size_t>(s)];
        if (m != 0) out.push_back(Json::array({Json{{"kind", "infinity"}, {"sheet", s}}, m}));
    }
    for (const auto& c : d.clusters()) {
        out.push_back(Json::array(
            {Json{{"kind", "cluster"}, {"modulus", c.modulus.str()}, {"y", c.y_root.str()}}, c.multiplicity}));
    }
    return out;
}

Json to_json(const PairingMatrix& m) {
    Json rows = Json::array();
    for (int l = 0; l < 4; ++l) {
        Json row = Json::array();
        for (int k = 0; k < 4; ++k) row.push_back(m(l, k).str());
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const ConicReport& c) {
    return Json{{"covector", {c.c[0].str(), c.c[1].str(), c.c[2].str()}},
                {"value", c.value.str()},
                {"on_conic", c.on_conic}};
}

Json to_json(const SupportReport& s) {
    return Json{{"supported", s.supported},
                {"dim_h0_2k", s.h0_quadratic},
                {"dim_h0_2k_minus_d", s.h0_twisted},
                {"functional_rank", s.functional_rank}};
}

Json to_json(const CeresaCertificate& c) {
    Json kernel = Json::array();
    for (const auto& d : c.kernel) kernel.push_back(to_json(d));
    return Json{{"variant", to_string(c.variant)},
                {"conic_value", c.conic.value.str()},
                {"base_locus", to_json(c.base_locus)},
                {"kernel", kernel},
                {"support", to_json(c.support)}};
}

Json to_json(const Form& f) {
    Json out = Json::object();
    for (const auto& [m, c] : f.terms()) out[monomial_str(m)] = c.str();
    return out;
}

const std::vector<std::string>& report_tags() {
    static const std::vector<std::string> tags = {
        "pairing-residue-formula",  "pairing-rank",          "kernel-covector-equation", "conic-condition",
        "base-locus-of-kernel",     "support-on-divisor",    "collino-pirola-criterion", "canonical-quadric",
        "canonical-cubic",          "schiffer-variation",    "ruling-relation",          "rational-triviality",
        "cube-root-family-probe",
    };
    return tags;
}

// ---------------------------------------------------------------------------------------

Json analyze_report(const CurveParams& u, const TangentVector& xi) {
    if (xi.is_zero()) throw ZeroTangent("tangent vector is zero");
    const PairingMatrix m = pairing_matrix(u, xi);
    const CeresaCertificate cert = delta_nu_c_test(u, xi);
    Json kernel = Json::array();
    for (const auto& d : cert.kernel) kernel.push_back(to_json(d));
    Json report;
    report["command"] = "analyze";
    report["input"] = Json{{"u", to_json(u)["u"]}, {"xi", to_json(xi)}};
    report["pairing_matrix"] = to_json(m);
    report["ks_rank"] = ks_rank(u, xi);
    report["kernel"] = kernel;
    report["conic"] = to_json(cert.conic);
    report["base_locus"] = to_json(cert.base_locus);
    report["base_locus_text"] = cert.base_locus.str();
    report["support"] = to_json(cert.support);
    report["certificate"] = to_string(cert.variant);
    report["tags"] = Json{{"pairing_matrix", "pairing-residue-formula"},
                          {"ks_rank", "pairing-rank"},
                          {"kernel", "kernel-covector-equation"},
                          {"conic", "conic-condition"},
                          {"base_locus", "base-locus-of-kernel"},
                          {"support", "support-on-divisor"},
                          {"certificate", "collino-pirola-criterion"}};
    return report;
}

ResidueTable residue_table(const CurveParams& u, int j, bool numeric, int series_order) {
    ResidueTable t;
    t.sign = residue_sign();
    const PairingMatrix closed = pairing_matrix(u, TangentVector::basis(j));
    double scale = 0;
    for (int l = 0; l < 4; ++l)
        for (int k = 0; k < 4; ++k) scale = std::max(scale, std::abs(closed(l, k).to_complex()));
    for (int l = 0; l < 4; ++l) {
        for (int k = 0; k < 4; ++k) {
            ResidueRow row;
            row.l = l;
            row.k = k;
            row.closed = closed(l, k);
            row.oracle = residue_pairing(u, j, l, k, series_order);
            if (!(row.closed == row.oracle)) t.exact_agree = false;
            if (numeric) {
                const auto z = numeric_residue_pairing(u, j, l, k);
                row.numeric_re = z.real();
                row.numeric_im = z.imag();
                const double err = std::abs(z - row.closed.to_complex()) / scale;
                t.max_numeric_error = std::max(t.max_numeric_error, err);
                if (!(err <= 1e-8)) t.numeric_agree = false;
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

Json to_json(const ResidueTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) {
        Json row{{"l", r.l}, {"k", r.k}, {"closed", r.closed.str()}, {"oracle", r.oracle.str()}};
        if (r.numeric_re) {
            row["numeric_re"] = *r.numeric_re;
            row["numeric_im"] = *r.numeric_im;
        }
        rows.push_back(row);
    }
    Json out{{"sign", t.sign}, {"entries", rows}, {"exact_agree", t.exact_agree}};
    if (!t.rows.empty() && t.rows.front().numeric_re) {
        out["numeric_agree"] = t.numeric_agree;
        out["max_relative_error"] = t.max_numeric_error;
    }
    return out;
}

// ---------------------------------------------------------------------------------------
// Scans

ScanRow scan_row(std::size_t index, const CurveParams& u, const TangentVector& xi, std::string note) {
    const CeresaCertificate cert = delta_nu_c_test(u, xi);
    return ScanRow{index, u, xi, cert.conic.value, cert.variant, std::move(note)};
}

Json to_json(const ScanRow& r) {
    Json row{{"index", r.index},
             {"u", to_json(r.u)["u"]},
             {"xi", to_json(r.xi)},
             {"conic_value", r.conic_value.str()},
             {"on_conic", r.conic_value.is_zero()},
             {"variant", to_string(r.variant)}};
    if (!r.note.empty()) row["note"] = r.note;
    return row;
}

namespace {

struct ScanInput {
    CurveParams u;
    TangentVector xi;
    std::string note;
};

std::vector<ScanInput> scan_inputs(const std::string& grid, const std::optional<CurveParams>& u,
                                   std::size_t random_count, std::uint64_t seed) {
    std::vector<ScanInput> inputs;
    if (grid.empty()) {
        Sampler sampler(seed);
        for (std::size_t i = 0; i < random_count; ++i) {
            const CurveParams p = u ? *u : sampler.params();
            inputs.push_back({p, sampler.tangent(), {}});
        }
        return inputs;
    }
    const auto colon = grid.find(':');
    if (colon == std::string::npos) throw DomainError("grid must be cone:N or box:R, got \"" + grid + "\"");
    const std::string kind = grid.substr(0, colon);
    long n = 0;
    try {
        n = std::stol(grid.substr(colon + 1));
    } catch (const std::exception&) {
        throw DomainError("grid size is not an integer in \"" + grid + "\"");
    }
    const CurveParams p = u ? *u : CurveParams::validate(Scalar(0), Scalar(2), Scalar(3));
    if (kind == "cone") {
        if (n < 1) throw DomainError("cone grid needs N >= 1");
        for (long i = 0; i + 1 < n; ++i) {
            const Scalar t(i - n / 2);
            inputs.push_back({p, cone_directions(p, t), "t=" + t.str()});
        }
        inputs.push_back({p, cone_directions(p, P1Point::infinity()), "t=inf"});
    } else if (kind == "box") {
        if (n < 1) throw DomainError("box grid needs R >= 1");
        for (long a = -n; a <= n; ++a)
            for (long b = -n; b <= n; ++b)
                for (long c = -n; c <= n; ++c) {
                    const TangentVector xi{{Scalar(a), Scalar(b), Scalar(c)}};
                    if (!xi.is_zero()) inputs.push_back({p, xi, {}});
                }
    } else {
        throw DomainError("unknown grid kind \"" + kind + "\"");
    }
    return inputs;
}

}  // namespace

std::vector<ScanRow> scan(const std::string& grid, const std::optional<CurveParams>& u, std::size_t random_count,
                          std::uint64_t seed, unsigned jobs) {
    const auto inputs = scan_inputs(grid, u, random_count, seed);
    std::vector<ScanRow> rows;
    rows.reserve(inputs.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) rows.push_back(scan_row(i, inputs[i].u, inputs[i].xi, inputs[i].note));
        return rows;
    }
    // Evaluate in parallel chunks; rows keep input order.
    std::vector<std::future<ScanRow>> pending;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        pending.push_back(std::async(std::launch::async, [&inputs, i] {
            return scan_row(i, inputs[i].u, inputs[i].xi, inputs[i].note);
        }));
        if (pending.size() == jobs || i + 1 == inputs.size()) {
            for (auto& f : pending) rows.push_back(f.get());
            pending.clear();
        }
    }
    return rows;
}

Json scan_summary(const std::vector<ScanRow>& rows) {
    Json strata{{"NotOnConic", 0}, {"OnConicNotSupported", 0}, {"OnConicSupported", 0}};
    std::size_t on_conic = 0;
    for (const auto& r : rows) {
        strata[to_string(r.variant)] = strata[to_string(r.variant)].get<int>() + 1;
        if (r.conic_value.is_zero()) ++on_conic;
    }
    return Json{{"summary", true}, {"rows", rows.size()}, {"on_conic", on_conic}, {"strata", strata}};
}

// ---------------------------------------------------------------------------------------

Json ideal_report(const CurveParams& u, std::uint64_t seed) {
    const QuadricForm q = sym2_relation(u, {1, 1, 1, 1}, seed);
    const CubicForm c = canonical_cubic(u, seed);
    return Json{{"command", "ideal"},
                {"input", to_json(u)},
                {"monomial_order", "grlex z0>z1>z2>z3"},
                {"quadric", q.str()},
                {"quadric_terms", to_json(q.form)},
                {"cubic", c.str()},
                {"cubic_terms", to_json(c.form)},
                {"sym3_kernel_dimension", sym3_kernel_dimension(u, seed)},
                {"cubic_in_quadric_span", in_quadric_span(c.form, q.form)},
                {"cubic_at_cone_vertex", c({1, 0, 0, 0}).str()},
                {"tags", {{"quadric", "canonical-quadric"}, {"cubic", "canonical-cubic"}}}};
}

Json schiffer_report(const CurveParams& u, const ProjPoint& v) {
    const QuadricForm q = sym2_relation(u);
    const CubicForm c = canonical_cubic(u);
    const bool result = schiffer_test(u, v);
    return Json{{"command", "schiffer"},
                {"input", Json{{"u", to_json(u)["u"]}, {"point", {v[0].str(), v[1].str(), v[2].str(), v[3].str()}}}},
                {"quadric_value", q(v).str()},
                {"cubic_value", c(v).str()},
                {"noether_rank", noether_rank(veronese(v))},
                {"schiffer", result},
                {"tags", {{"schiffer", "schiffer-variation"}}}};
}

Json d0_report(const CurveParams& u, const P1Point& t1, const std::optional<P1Point>& t2) {
    const D0Cycle c = t2 ? d0_pair(u, t1, *t2) : d0_cycle(u, t1);
    Json out{{"command", "d0"},
             {"input", to_json(u)},
             {"t1", c.t1.str()},
             {"t2", c.t2.str()},
             {"relation_holds", c.t2 == paired_parameter(c.t1)},
             {"plus", to_json(c.plus)},
             {"minus", to_json(c.minus)},
             {"plus_text", c.plus.str()},
             {"minus_text", c.minus.str()},
             {"equal", c.plus == c.minus},
             {"witness", c.witness_str()}};
    if (c.witness) out["witness_divisor"] = divisor_of_function(u, *c.witness).str();
    out["tags"] = Json{{"t2", "ruling-relation"}, {"witness", "rational-triviality"}};
    return out;
}

Json qz24_report(const std::optional<Scalar>& a) {
    const Qz24Report probe = qz24_probe();
    Json out{{"command", "qz24"},
             {"covector", {probe.c[0].str("a"), probe.c[1].str("a"), probe.c[2].str("a")}},
             {"conic_value", probe.value.str("a")},
             {"variant", probe.value.is_zero() ? "on-conic" : to_string(CeresaVariant::NotOnConic)},
             {"open_question",
              "local constancy along this family would suggest the tangent direction meets the conic; "
              "the exact covector is off the conic. Reported as computed, not resolved."},
             {"tags", {{"covector", "cube-root-family-probe"}, {"conic_value", "conic-condition"}}}};
    if (!a) return out;
    if (a->is_zero() || a->is_one()) throw InvalidParameters("a must differ from 0 and 1");
    Json at{{"a", a->str()},
            {"covector", {probe.c[0](*a).str(), probe.c[1](*a).str(), probe.c[2](*a).str()}},
            {"conic_value", probe.value(*a).str()}};
    if (const auto root = cube_root(*a)) {
        // Same quantities along the actual curve u = (r, r w, r w^2).
        const Scalar& r = *root;
        const CurveParams u = CurveParams::validate(r, r * Scalar::zeta(), r * Scalar::zeta_power(2));
        TangentVector xi;
        for (int j = 1; j <= 3; ++j) xi.a[static_cast<std::size_t>(j - 1)] = (Scalar(3) * u.u(j) * u.u(j)).inverse();
        const CeresaCertificate cert = delta_nu_c_test(u, xi);
        const bool agree = cert.conic.c[0] == probe.c[0](*a) && cert.conic.c[1] == probe.c[1](*a) &&
                           cert.conic.c[2] == probe.c[2](*a) && cert.conic.value == probe.value(*a);
        at["curve_check"] = Json{{"u", to_json(u)["u"]},
                                 {"xi", to_json(xi)},
                                 {"conic", to_json(cert.conic)},
                                 {"variant", to_string(cert.variant)},
                                 {"agrees_with_symbolic", agree}};
        if (!agree) throw StructuralError("cube-root family probe disagrees with the curve computation");
    }
    out["at"] = at;
    return out;
}

}  // namespace trigonal
