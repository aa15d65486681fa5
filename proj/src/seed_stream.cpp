#include "orbitkit/seed_stream.hpp"

#include "orbitkit/errors.hpp"

#include <limits>

namespace orbitkit {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SeedStream::SeedStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_(master_seed),
      index_(stream_index),
      engine_(splitmix64(splitmix64(master_seed) ^ splitmix64(stream_index + kGolden)))
{
}

SeedStream SeedStream::derive(std::uint64_t child_index) const
{
    return SeedStream(splitmix64(master_ ^ splitmix64(index_)), child_index);
}

std::uint64_t SeedStream::uniform_below(std::uint64_t bound)
{
    if (bound == 0) {
        throw Error("uniform_below: bound must be positive");
    }
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t v = engine_();
    while (v > limit) {
        v = engine_();
    }
    return v % bound;
}

std::int64_t SeedStream::uniform_int(std::int64_t lo, std::int64_t hi)
{
    if (hi < lo) {
        throw Error("uniform_int: empty range");
    }
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) {
        return static_cast<std::int64_t>(engine_());
    }
    return lo + static_cast<std::int64_t>(uniform_below(span));
}

double SeedStream::uniform_real(double lo, double hi)
{
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Rational sample_rational(SeedStream& stream, std::int64_t magnitude_bound)
{
    if (magnitude_bound < 1) {
        throw Error("sample_rational: magnitude_bound must be >= 1");
    }
    const std::int64_t p = stream.uniform_int(-magnitude_bound, magnitude_bound);
    const std::int64_t q = stream.uniform_int(1, magnitude_bound);
    Rational r(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
    r.canonicalize();
    return r;
}

Rational sample_nonzero_rational(SeedStream& stream, std::int64_t magnitude_bound)
{
    Rational r = sample_positive_rational(stream, magnitude_bound);
    return stream.coin() ? r : Rational(-r);
}

Rational sample_positive_rational(SeedStream& stream, std::int64_t magnitude_bound)
{
    if (magnitude_bound < 1) {
        throw Error("sample_positive_rational: magnitude_bound must be >= 1");
    }
    const std::int64_t p = stream.uniform_int(1, magnitude_bound);
    const std::int64_t q = stream.uniform_int(1, magnitude_bound);
    Rational r(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
    r.canonicalize();
    return r;
}

}  // namespace orbitkit
