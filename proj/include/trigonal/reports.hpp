#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trigonal/canonical_ideal.hpp"
#include "trigonal/curve.hpp"
#include "trigonal/deformation.hpp"
#include "trigonal/rulings.hpp"

namespace trigonal {

using Json = nlohmann::ordered_json;

/// Splits "a,b,c" into scalar literals; throws DomainError on a wrong count or bad literal.
std::vector<Scalar> parse_scalar_list(const std::string& text, std::size_t expected);

Json to_json(const Scalar& s);
Json to_json(const CurveParams& u);
Json to_json(const CurvePoint& p);
Json to_json(const TangentVector& xi);
Json to_json(const Differential& d);
/// List of [point, multiplicity]. Full fibers appear as {"kind": "fiber", "x": ...}, or with
/// "modulus" when the fiber lies over the roots of a square-free factor of degree > 1.
Json to_json(const Divisor& d);
Json to_json(const PairingMatrix& m);
Json to_json(const ConicReport& c);
Json to_json(const SupportReport& s);
Json to_json(const CeresaCertificate& c);
Json to_json(const Form& f);

/// Descriptive tags attached to report fields; see README for the list.
const std::vector<std::string>& report_tags();

Json analyze_report(const CurveParams& u, const TangentVector& xi);

struct ResidueRow {
    int l = 0;
    int k = 0;
    Scalar closed;
    Scalar oracle;
    std::optional<double> numeric_re;
    std::optional<double> numeric_im;
};
struct ResidueTable {
    int sign = 1;
    std::vector<ResidueRow> rows;
    bool exact_agree = true;
    bool numeric_agree = true;
    double max_numeric_error = 0;  ///< relative to the largest |closed| entry
};
ResidueTable residue_table(const CurveParams& u, int j, bool numeric, int series_order = 12);
Json to_json(const ResidueTable& t);

struct ScanRow {
    std::size_t index = 0;
    CurveParams u;
    TangentVector xi;
    Scalar conic_value;
    CeresaVariant variant = CeresaVariant::NotOnConic;
    std::string note;
};
Json to_json(const ScanRow& r);
ScanRow scan_row(std::size_t index, const CurveParams& u, const TangentVector& xi, std::string note = {});

/// Rows for `random:N` with seed, `cone:N` or `box:R` (the last two at fixed u).
std::vector<ScanRow> scan(const std::string& grid, const std::optional<CurveParams>& u, std::size_t random_count,
                          std::uint64_t seed, unsigned jobs = 1);
Json scan_summary(const std::vector<ScanRow>& rows);

Json ideal_report(const CurveParams& u, std::uint64_t seed = 1);
Json schiffer_report(const CurveParams& u, const ProjPoint& v);
Json d0_report(const CurveParams& u, const P1Point& t1, const std::optional<P1Point>& t2 = std::nullopt);
/// Symbolic covector and conic value; with `a`, also their values there and, when a is a
/// rational cube, the same quantities recomputed along u = (r, r w, r w^2).
Json qz24_report(const std::optional<Scalar>& a = std::nullopt);

}  // namespace trigonal
