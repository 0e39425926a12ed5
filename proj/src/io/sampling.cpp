#include "trigonal/sampling.hpp"

#include "trigonal/error.hpp"

namespace trigonal {

long Sampler::integer(long lo, long hi) {
    const auto size = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % size);
}

Rational Sampler::rational(long max_num, long max_den) {
    const long num = integer(-max_num, max_num);
    const long den = integer(1, max_den);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Scalar Sampler::scalar(long max_num, long max_den) {
    const Rational re = rational(max_num, max_den);
    const Rational zeta = rational(max_num, max_den);
    return integer(0, 1) == 0 ? Scalar(re) : Scalar(re, zeta);
}

CurveParams Sampler::params() {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const Scalar a = scalar(), b = scalar(), c = scalar();
        try {
            return CurveParams::validate(a, b, c);
        } catch (const InvalidParameters&) {
        }
    }
    throw StructuralError("could not sample valid curve parameters");
}

TangentVector Sampler::tangent() {
    for (;;) {
        TangentVector t{{Scalar(integer(-5, 5)), Scalar(integer(-5, 5)), Scalar(integer(-5, 5))}};
        if (!t.is_zero()) return t;
    }
}

Differential Sampler::differential() {
    for (;;) {
        Differential d{Scalar(integer(-3, 3)), {Scalar(integer(-3, 3)), Scalar(integer(-3, 3)), Scalar(integer(-3, 3))}};
        if (!d.is_zero()) return d;
    }
}

}  // namespace trigonal
