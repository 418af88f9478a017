#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace graphex {

/// Deterministic random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. All variates are derived here from raw 64-bit words rather than
/// through <random> distributions, whose algorithms are implementation-defined.
///
/// Child streams: child(i) is seeded with
///   splitmix64(splitmix64(seed) ^ splitmix64(i + 0x9E3779B97F4A7C15))
/// and depends only on the parent seed and i, never on how much of the parent
/// stream has been consumed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  Rng child(std::uint64_t index) const;

  std::uint64_t nextU64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Unbiased integer in [0, n); n must be positive.
  std::uint64_t index(std::uint64_t n);
  bool bernoulli(double p);
  double exponential(double rate = 1.0);
  std::uint64_t poisson(double mean);
  /// Number of failures before the first success of a Bernoulli(p) sequence,
  /// saturated at UINT64_MAX when it would overflow.
  std::uint64_t geometricFailures(double p);
  /// Draw an index with probability proportional to weights[k].
  std::size_t discrete(std::span<const double> weights);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace graphex
