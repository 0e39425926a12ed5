#pragma once

#include <cstdint>
#include <random>

#include "trigonal/curve.hpp"
#include "trigonal/deformation.hpp"

namespace trigonal {

/// Seeded source of exact test data.
///
/// Every draw uses raw 64-bit outputs of std::mt19937_64 mapped to a range by `raw % size`,
/// so streams are reproducible with any conforming implementation of the engine.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Integer uniform-by-modulo in [lo, hi].
    long integer(long lo, long hi);
    /// num/den with num in [-max_num, max_num], den in [1, max_den].
    Rational rational(long max_num = 9, long max_den = 4);
    /// Rational part always drawn; the w-part is drawn and kept on every other draw on average.
    Scalar scalar(long max_num = 9, long max_den = 4);
    /// A valid u, drawn by rejection.
    CurveParams params();
    /// A nonzero tangent vector with small integer coordinates.
    TangentVector tangent();
    /// A nonzero holomorphic 1-form with small integer coordinates.
    Differential differential();

private:
    std::mt19937_64 rng_;
};

}  // namespace trigonal
