#pragma once

#include "orbitkit/rational.hpp"

#include <cstdint>
#include <random>

namespace orbitkit {

/// Deterministic random stream identified by (master_seed, stream_index).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard. It is
/// seeded with splitmix64(splitmix64(master_seed) ^ splitmix64(stream_index + golden)), so
/// distinct indices give unrelated streams. Bounded integers are drawn by rejection on raw
/// engine output; no std::*_distribution is used because those are implementation-defined.
///
/// Parallel work derives one stream per item with derive(i) instead of sharing a stream.
class SeedStream {
public:
    SeedStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const noexcept { return master_; }
    std::uint64_t stream_index() const noexcept { return index_; }

    /// Child stream, independent of this stream's consumption state.
    SeedStream derive(std::uint64_t child_index) const;

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Uniform in [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    bool coin() { return (engine_() >> 63) != 0; }
    /// Uniform double in [lo, hi) built from the top 53 bits.
    double uniform_real(double lo, double hi);

private:
    std::uint64_t master_;
    std::uint64_t index_;
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// p/q with |p| <= magnitude_bound and 1 <= q <= magnitude_bound, uniform in (p, q).
Rational sample_rational(SeedStream& stream, std::int64_t magnitude_bound);
/// As sample_rational but never zero.
Rational sample_nonzero_rational(SeedStream& stream, std::int64_t magnitude_bound);
/// Strictly positive p/q with 1 <= p, q <= magnitude_bound.
Rational sample_positive_rational(SeedStream& stream, std::int64_t magnitude_bound);

}  // namespace orbitkit
