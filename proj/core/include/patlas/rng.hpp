#pragma once

#include <cstdint>
#include <random>

#include "patlas/ternary_cubic.hpp"  // cplx

namespace patlas {

/// Seeded generator with uniform doubles built directly from the raw 64-bit
/// stream, so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on the complex disk of the given radius (by rejection).
    cplx complex_in_disk(double radius) {
        for (;;) {
            double re = uniform(-1.0, 1.0), im = uniform(-1.0, 1.0);
            if (re * re + im * im <= 1.0) return cplx(re * radius, im * radius);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace patlas
