#pragma once

#include <cstdint>
#include <initializer_list>

namespace varextropy {

/// Identifies one substream: a run-level seed plus a replicate-level stream id.
struct RngSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Folds a list of keys (experiment tag, n, m, replicate, ...) into a stream id.
std::uint64_t stream_key(std::initializer_list<std::uint64_t> parts) noexcept;

/// xoshiro256** generator whose state is a pure function of (seed, stream_id),
/// so replicate r draws the same variates whichever thread runs it.
class SubstreamRng {
public:
    explicit SubstreamRng(RngSpec spec) noexcept;

    std::uint64_t next() noexcept;

    /// Uniform on the open interval (0, 1) with 53-bit resolution.
    double uniform() noexcept;

    /// Standard normal (Marsaglia polar method).
    double normal() noexcept;

    /// Gamma(shape, 1) via Marsaglia-Tsang; shape < 1 uses the U^(1/shape) boost.
    double gamma(double shape) noexcept;

private:
    std::uint64_t s_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace varextropy
