#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "slicecalc/random.hpp"
#include "slicecalc/slicefn.hpp"

namespace slicecalc {

/// Nonzero element whose components are small rationals, each present with
/// probability one half.
AlgebraElement random_element(const Signature& sig, Rng& rng);

/// Sparse polynomial in x_0..x_n with 1..max_terms terms of total degree
/// at most max_degree; never zero.
CoordPoly random_coordinate_poly(const Signature& sig, Rng& rng, unsigned max_degree = 4,
                                 unsigned max_terms = 5);

/// Sum of z^a conj(z)^b c_ab with a <= max_z and b <= max_zbar.
StemFunction random_stem(const Signature& sig, Rng& rng, unsigned max_zbar = 3, unsigned max_z = 2,
                         unsigned max_terms = 4);

/// Sum of z^a c_a with a <= max_degree; never zero.
StemFunction random_holomorphic_stem(const Signature& sig, Rng& rng, unsigned max_degree = 4);

/// count distinct entries of pool chosen by a partial shuffle.
template <typename T>
std::vector<T> choose(const std::vector<T>& pool, std::size_t count, Rng& rng) {
  std::vector<std::size_t> index(pool.size());
  for (std::size_t k = 0; k < index.size(); ++k) index[k] = k;
  const std::size_t take = count < pool.size() ? count : pool.size();
  std::vector<T> out;
  out.reserve(take);
  for (std::size_t k = 0; k < take; ++k) {
    const auto j = static_cast<std::size_t>(
        rng.uniform(static_cast<std::int64_t>(k), static_cast<std::int64_t>(index.size() - 1)));
    std::swap(index[k], index[j]);
    out.push_back(pool[index[k]]);
  }
  return out;
}

}  // namespace slicecalc
