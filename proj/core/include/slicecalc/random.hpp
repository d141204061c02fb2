#pragma once

#include <cstdint>
#include <random>

#include "slicecalc/rational.hpp"

namespace slicecalc {

/// Seeded generator with platform-independent draws. std::mt19937_64 output
/// is fixed by the standard; the distributions are not, so bounded draws are
/// done here by rejection sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

  bool coin() { return (engine_() >> 63) != 0; }

  /// p / q with |p| <= num_bound and 1 <= q <= den_bound.
  Rational small_rational(std::int64_t num_bound, std::int64_t den_bound);

  /// Independent stream derived from this seed and a label.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t label);

 private:
  std::mt19937_64 engine_;
};

}  // namespace slicecalc
