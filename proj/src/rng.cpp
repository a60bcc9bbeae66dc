#include "linfoot/rng.hpp"

#include <cmath>

#include "linfoot/error.hpp"
#include "linfoot/special.hpp"

namespace linfoot {

namespace {

// SplitMix64 finalizer; full-avalanche 64-bit permutation.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(mix64(seed) ^ (stream_id * 0xda942042e4dd58b5ULL))) {}

std::uint64_t RngStream::next_u64() {
    return mix64(key_ + (counter_++) * 0x9e3779b97f4a7c15ULL);
}

double RngStream::next_uniform() {
    // 53 random bits centered in their cell: value in (0,1) exactly.
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    // Modulo bias < 2^-? for bound << 2^64; acceptable for simulation sizes.
    return next_u64() % bound;
}

double RngStream::next_normal() {
    return std_normal_quantile(next_uniform());
}

double RngStream::next_exponential() {
    return -std::log(next_uniform());
}

double RngStream::next_gamma(double shape) {
    if (!(shape > 0.0)) throw domain_error("next_gamma: requires shape > 0");
    if (shape < 1.0) {
        // G(a) = G(a+1) * U^{1/a}; computed in log space so tiny shapes
        // (high Clayton theta) stay inside the normal double range.
        const double g = next_gamma(shape + 1.0);
        const double u = next_uniform();
        return std::exp(std::log(g) + std::log(u) / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::uint64_t RngStream::mix_id(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ (b * 0x2545f4914f6cdd1dULL));
}

} // namespace linfoot
