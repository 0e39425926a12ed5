#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "trigonal/error.hpp"
#include "trigonal/reports.hpp"

namespace py = pybind11;
using namespace trigonal;

namespace {

Scalar parse(const py::handle& v) { return Scalar::parse(py::str(v).cast<std::string>()); }

std::vector<Scalar> scalars(const py::sequence& seq, std::size_t expected, const char* name) {
    if (py::len(seq) != expected) {
        throw InvalidParameters(std::string(name) + " needs " + std::to_string(expected) + " entries");
    }
    std::vector<Scalar> out;
    for (const auto& v : seq) out.push_back(parse(v));
    return out;
}

CurveParams params(const py::sequence& u) {
    const auto v = scalars(u, 3, "u");
    return CurveParams::validate(v[0], v[1], v[2]);
}

TangentVector tangent(const py::sequence& xi) {
    const auto v = scalars(xi, 3, "xi");
    return TangentVector{{v[0], v[1], v[2]}};
}

std::optional<P1Point> p1(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return P1Point::parse(*text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact deformation invariants of the trigonal genus-4 family; every call returns JSON text.";

    auto base = py::register_exception<Error>(m, "TrigonalError", PyExc_ValueError);
    py::register_exception<InvalidParameters>(m, "InvalidParameters", base.ptr());
    py::register_exception<ZeroTangent>(m, "ZeroTangent", base.ptr());
    py::register_exception<StructuralError>(m, "StructuralError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<DegenerateInput>(m, "DegenerateInput", base.ptr());

    m.def("analyze", [](const py::sequence& u, const py::sequence& xi) {
        return analyze_report(params(u), tangent(xi)).dump();
    }, py::arg("u"), py::arg("xi"));

    m.def("residue_check", [](const py::sequence& u, int j, bool numeric, int series_order) {
        if (j < 1 || j > 3) throw InvalidParameters("j must be 1, 2 or 3");
        return to_json(residue_table(params(u), j, numeric, series_order)).dump();
    }, py::arg("u"), py::arg("j") = 1, py::arg("numeric") = false, py::arg("series_order") = 12);

    m.def("scan", [](const std::string& grid, std::optional<py::sequence> u, std::size_t random, std::uint64_t seed,
                     unsigned jobs) {
        std::optional<CurveParams> fixed;
        if (u) fixed = params(*u);
        std::vector<ScanRow> rows;
        {
            py::gil_scoped_release release;
            rows = scan(grid, fixed, random, seed, jobs);
        }
        Json out{{"rows", Json::array()}, {"summary", scan_summary(rows)}};
        for (const auto& r : rows) out["rows"].push_back(to_json(r));
        return out.dump();
    }, py::arg("grid") = "", py::arg("u") = py::none(), py::arg("random") = 0, py::arg("seed") = 1,
       py::arg("jobs") = 1);

    m.def("ideal", [](const py::sequence& u, std::uint64_t seed) { return ideal_report(params(u), seed).dump(); },
          py::arg("u"), py::arg("seed") = 1);

    m.def("schiffer", [](const py::sequence& u, const py::sequence& point) {
        const auto v = scalars(point, 4, "point");
        return schiffer_report(params(u), {v[0], v[1], v[2], v[3]}).dump();
    }, py::arg("u"), py::arg("point"));

    m.def("d0", [](const py::sequence& u, const std::string& t1, std::optional<std::string> t) {
        return d0_report(params(u), P1Point::parse(t1), p1(t)).dump();
    }, py::arg("u"), py::arg("t1"), py::arg("t") = py::none());

    m.def("qz24", [](std::optional<std::string> a) {
        std::optional<Scalar> value;
        if (a) value = Scalar::parse(*a);
        return qz24_report(value).dump();
    }, py::arg("a") = py::none());
}
