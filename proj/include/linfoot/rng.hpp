#pragma once

#include <cstdint>

namespace linfoot {

/// Counter-based pseudo-random stream keyed by (seed, stream_id).
/// Output n is a strong 64-bit mix of (key, n), so equal keys reproduce the
/// same sequence on every platform and distinct stream ids give independent
/// streams that can be handed to parallel tasks.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0,1); never returns an endpoint.
    double next_uniform();

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound);

    /// Standard normal via the inverse-CDF map of next_uniform().
    double next_normal();

    /// Exponential(rate 1).
    double next_exponential();

    /// Gamma(shape, rate 1), shape > 0, Marsaglia-Tsang with the shape<1 boost.
    double next_gamma(double shape);

    std::uint64_t counter() const { return counter_; }

    /// Stable 64-bit combiner for deriving per-task stream ids.
    static std::uint64_t mix_id(std::uint64_t a, std::uint64_t b);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace linfoot
