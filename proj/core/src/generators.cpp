#include "slicecalc/generators.hpp"

#include <utility>

namespace slicecalc {

AlgebraElement random_element(const Signature& sig, Rng& rng) {
  AlgebraElement out(sig);
  while (out.is_zero()) {
    for (std::size_t k = 0; k < sig.dimension(); ++k) {
      if (rng.coin()) out[k] = rng.small_rational(3, 3);
    }
  }
  return out;
}

CoordPoly random_coordinate_poly(const Signature& sig, Rng& rng, unsigned max_degree,
                                 unsigned max_terms) {
  const std::size_t vars = sig.coordinate_count();
  CoordPoly out(sig, vars);
  while (out.is_zero()) {
    const auto terms = rng.uniform(1, max_terms);
    for (std::int64_t t = 0; t < terms; ++t) {
      Exponents e{};
      const auto degree = rng.uniform(0, max_degree);
      for (std::int64_t d = 0; d < degree; ++d) {
        ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vars) - 1))];
      }
      out.add_term(e, random_element(sig, rng));
    }
  }
  return out;
}

StemFunction random_stem(const Signature& sig, Rng& rng, unsigned max_zbar, unsigned max_z,
                         unsigned max_terms) {
  std::vector<std::pair<std::pair<unsigned, unsigned>, AlgebraElement>> terms;
  const auto count = rng.uniform(1, max_terms);
  for (std::int64_t t = 0; t < count; ++t) {
    const auto a = static_cast<unsigned>(rng.uniform(0, max_z));
    const auto b = static_cast<unsigned>(rng.uniform(0, max_zbar));
    terms.push_back({{a, b}, random_element(sig, rng)});
  }
  StemFunction out = StemFunction::from_z_zbar(sig, terms);
  if (out.is_zero()) return random_stem(sig, rng, max_zbar, max_z, max_terms);
  return out;
}

StemFunction random_holomorphic_stem(const Signature& sig, Rng& rng, unsigned max_degree) {
  std::vector<std::pair<std::pair<unsigned, unsigned>, AlgebraElement>> terms;
  const auto degree = static_cast<unsigned>(rng.uniform(0, max_degree));
  for (unsigned a = 0; a <= degree; ++a) {
    if (a == degree || rng.coin()) terms.push_back({{a, 0}, random_element(sig, rng)});
  }
  return StemFunction::from_z_zbar(sig, terms);
}

}  // namespace slicecalc
