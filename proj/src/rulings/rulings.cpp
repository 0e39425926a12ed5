#include "trigonal/rulings.hpp"

#include "trigonal/error.hpp"

namespace trigonal {

namespace {

Differential form(long b1, long b2, long b3) { return Differential{Scalar(0), {Scalar(b1), Scalar(b2), Scalar(b3)}}; }

Differential form(const Scalar& b1, const Scalar& b2, const Scalar& b3) { return Differential{Scalar(0), {b1, b2, b3}}; }

}  // namespace

RulingLine RulingLine::make(int family, const P1Point& t) {
    RulingLine line;
    line.family = family;
    line.t = t;
    if (family == 1) {
        if (t.is_infinity()) {
            line.hyperplanes = {form(1, 0, -1), form(1, -1, 0)};
        } else {
            const Scalar& s = t.value();
            line.hyperplanes = {form(Scalar(1) + s, Scalar(1), -s), form(Scalar(1) + s, -s, Scalar(0))};
        }
    } else if (family == 2) {
        if (t.is_infinity()) {
            line.hyperplanes = {form(-1, 0, 0), form(1, -1, 0)};
        } else {
            const Scalar& s = t.value();
            line.hyperplanes = {form(Scalar(1) - s, Scalar(1), Scalar(0)), form(s - Scalar(1), -s, Scalar(1))};
        }
    } else {
        throw DomainError("ruling family must be 1 or 2");
    }
    return line;
}

P1Point RulingLine::fiber_x() const {
    if (family == 1) {
        if (t.is_infinity()) return P1Point(1);
        if (t.value().is_zero()) return P1Point::infinity();
        return P1Point(Scalar(1) + t.value().inverse());
    }
    if (t.is_infinity()) return P1Point::infinity();
    return P1Point(t.value() - Scalar(1));
}

Divisor ruling_divisor(const CurveParams& u, const P1Point& t, int family) {
    const RulingLine line = RulingLine::make(family, t);
    const Divisor d = Divisor::min(divisor_of(u, line.hyperplanes[0]), divisor_of(u, line.hyperplanes[1]));
    const Divisor expected = trigonal_fiber(u, line.fiber_x());
    if (!(d == expected)) {
        throw StructuralError("ruling divisor " + d.str() + " is not the fiber over " + line.fiber_x().str());
    }
    return d;
}

P1Point paired_parameter(const P1Point& t1) {
    if (t1.is_infinity()) return P1Point(2);
    if (t1.value().is_zero()) return P1Point::infinity();
    return P1Point(t1.value().inverse() + Scalar(2));
}

std::string D0Cycle::witness_str() const { return witness ? witness->str() : "trivially equal"; }

D0Cycle d0_pair(const CurveParams& u, const P1Point& t1, const P1Point& t2) {
    D0Cycle c;
    c.t1 = t1;
    c.t2 = t2;
    c.plus = ruling_divisor(u, t1, 1);
    c.minus = ruling_divisor(u, t2, 2);
    if (!(c.plus == c.minus)) {
        c.witness = principal_witness(u, RulingLine::make(1, t1).fiber_x(), RulingLine::make(2, t2).fiber_x());
    }
    return c;
}

D0Cycle d0_cycle(const CurveParams& u, const P1Point& t1) { return d0_pair(u, t1, paired_parameter(t1)); }

RatFunc principal_witness(const CurveParams& u, const P1Point& x1, const P1Point& x2) {
    (void)u;
    if (x1 == x2) throw DomainError("witness needs distinct fibers, got " + x1.str() + " twice");
    if (x2.is_infinity()) return RatFunc(UniPoly::linear_root(x1.value()));
    if (x1.is_infinity()) return RatFunc(UniPoly(1), UniPoly::linear_root(x2.value()));
    return RatFunc(UniPoly::linear_root(x1.value()), UniPoly::linear_root(x2.value()));
}

}  // namespace trigonal
