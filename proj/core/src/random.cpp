#include "slicecalc/random.hpp"

#include <limits>
#include <stdexcept>

namespace slicecalc {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational Rng::small_rational(std::int64_t num_bound, std::int64_t den_bound) {
  const auto p = uniform(-num_bound, num_bound);
  const auto q = uniform(1, den_bound);
  return make_rational(static_cast<long>(p), static_cast<long>(q));
}

std::uint64_t Rng::derive(std::uint64_t seed, std::uint64_t label) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (label + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace slicecalc
