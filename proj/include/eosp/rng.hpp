#ifndef EOSP_RNG_HPP
#define EOSP_RNG_HPP

#include <cstdint>
#include <random>

namespace eosp {

/// Portable seeded random source.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are not, so integer and real draws are
/// mapped here. Independent substreams are derived from (seed, stream id)
/// through splitmix64, so adding a stream never shifts the draws of another.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL)));
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [lo, hi], unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range == 0)
      return static_cast<std::int64_t>(next());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % range);
  }

private:
  std::mt19937_64 engine_;
};

/// Substream ids used by the instance generator and randomized baselines.
enum class Stream : std::uint64_t {
  Weights = 1,
  Windows = 2,
  Pairs = 3,
  Deltas = 4,
  FaoProposals = 16,
};

inline Rng substream(std::uint64_t seed, Stream s) {
  return Rng::substream(seed, static_cast<std::uint64_t>(s));
}

} // namespace eosp

#endif
