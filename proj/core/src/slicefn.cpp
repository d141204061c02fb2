#include "slicecalc/slicefn.hpp"

#include <set>

#include "slicecalc/errors.hpp"
#include "slicecalc/random.hpp"

namespace slicecalc {

CircularDomain CircularDomain::entire() { return CircularDomain(Shape::Entire, 0, 0, 0); }

CircularDomain CircularDomain::ball(Rational center, Rational radius) {
  if (sgn(radius) <= 0) throw InvalidDomain("ball radius must be positive");
  return CircularDomain(Shape::Ball, std::move(center), 0, std::move(radius));
}

CircularDomain CircularDomain::annulus(Rational center, Rational r_in, Rational r_out) {
  if (sgn(r_in) < 0 || r_in >= r_out) {
    throw InvalidDomain("annulus radii must satisfy 0 <= r_in < r_out");
  }
  return CircularDomain(Shape::Annulus, std::move(center), std::move(r_in), std::move(r_out));
}

bool CircularDomain::contains_squared(const Rational& alpha, const Rational& beta_sq) const {
  if (shape_ == Shape::Entire) return true;
  const Rational d = alpha - center_;
  const Rational dist_sq = d * d + beta_sq;
  if (dist_sq >= r_out_ * r_out_) return false;
  return shape_ == Shape::Ball || dist_sq > r_in_ * r_in_;
}

bool CircularDomain::contains(const PlanePoint& z) const {
  return contains_squared(z.alpha, z.beta * z.beta);
}

bool CircularDomain::contains(const AlgebraElement& x) const {
  return contains_squared(re(x), norm_sq(im(x)));
}

PlanePoint CircularDomain::canonical_point() const {
  switch (shape_) {
    case Shape::Entire:
      return {0, 1};
    case Shape::Ball:
      return {center_, r_out_ / 2};
    case Shape::Annulus:
      return {center_, (r_in_ + r_out_) / 2};
  }
  return {0, 1};
}

std::string CircularDomain::to_string() const {
  switch (shape_) {
    case Shape::Entire:
      return "entire";
    case Shape::Ball:
      return "ball(" + to_display_string(center_) + ", " + to_display_string(r_out_) + ")";
    case Shape::Annulus:
      return "annulus(" + to_display_string(center_) + ", " + to_display_string(r_in_) + ", " +
             to_display_string(r_out_) + ")";
  }
  return "entire";
}

std::vector<PlanePoint> sample_plane_points(const CircularDomain& domain, std::uint64_t seed,
                                            std::size_t count) {
  std::vector<PlanePoint> out;
  if (count == 0) return out;
  out.push_back(domain.canonical_point());
  Rng rng(seed);
  std::set<std::pair<Rational, Rational>> seen{{out[0].alpha, out[0].beta}};
  const bool bounded = domain.shape() != CircularDomain::Shape::Entire;
  std::size_t attempts = 0;
  while (out.size() < count) {
    const std::int64_t bound = 4 + static_cast<std::int64_t>(attempts++ / 64);
    PlanePoint z;
    if (bounded) {
      // Offsets in the unit square scaled by the outer radius.
      const Rational t1 = rng.small_rational(bound, bound) / (bound + 1);
      const Rational t2 = make_rational(rng.uniform(1, bound), bound + 1);
      z = {domain.center() + t1 * domain.outer_radius(), t2 * domain.outer_radius()};
    } else {
      z = {rng.small_rational(bound, bound), make_rational(rng.uniform(1, 2 * bound), rng.uniform(1, bound))};
    }
    if (!domain.contains(z)) continue;
    if (!seen.insert({z.alpha, z.beta}).second) continue;
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<Rational> slice_point(const ImaginaryUnit& unit, const PlanePoint& z) {
  const auto imag = unit.components();
  std::vector<Rational> coords;
  coords.reserve(imag.size() + 1);
  coords.push_back(z.alpha);
  for (const auto& c : imag) coords.push_back(c * z.beta);
  return coords;
}

AlgebraElement slice_eval_at(const SliceFunction& f, const ImaginaryUnit& unit,
                             const PlanePoint& z) {
  if (!(unit.signature() == f.signature())) throw SignatureMismatch("slice_eval: unit signature");
  if (!f.domain.contains(z)) throw PointOutsideDomain("point outside " + f.domain.to_string());
  const auto [v1, v2] = stem_eval(f.stem, z.alpha, z.beta);
  return v1 + mul(unit.value(), v2);
}

AlgebraElement slice_eval(const SliceFunction& f, const AlgebraElement& x) {
  if (!(x.signature() == f.signature())) throw SignatureMismatch("slice_eval: point signature");
  if (!f.domain.contains(x)) throw PointOutsideDomain("point outside " + f.domain.to_string());
  const Rational alpha = re(x);
  const AlgebraElement imag = im(x);
  const Rational beta_sq = norm_sq(imag);
  if (sgn(beta_sq) == 0) return stem_eval(f.stem, alpha, 0).first;
  const auto beta = exact_sqrt(beta_sq);
  if (!beta) {
    throw IrrationalSliceRadius("|Im(x)|^2 = " + to_display_string(beta_sq) +
                                " is not the square of a rational");
  }
  const ImaginaryUnit unit = ImaginaryUnit::make(imag * (1 / *beta));
  return slice_eval_at(f, unit, {alpha, *beta});
}

AlgebraElement point_eval(const PointFunction& g, std::span<const Rational> coords) {
  const Signature& sig = g.signature();
  if (coords.size() != sig.coordinate_count()) throw ArityMismatch("point_eval: wrong dimension");
  const AlgebraElement x = AlgebraElement::from_coordinates(sig, coords);
  if (!g.domain.contains(x)) throw PointOutsideDomain("point outside " + g.domain.to_string());
  try {
    return g.expr.eval(coords);
  } catch (const DenominatorVanishes&) {
    if (g.axis_value && x.is_real()) return *g.axis_value;
    throw;
  }
}

AlgebraElement point_eval(const PointFunction& g, const AlgebraElement& x) {
  return point_eval(g, x.coordinates());
}

AlgebraElement point_eval_at(const PointFunction& g, const ImaginaryUnit& unit,
                             const PlanePoint& z) {
  return point_eval(g, slice_point(unit, z));
}

PointFunction to_point_function(const SliceFunction& f) {
  const Signature& sig = f.signature();
  const std::size_t vars = sig.coordinate_count();
  CoordPoly s(sig, vars);
  for (std::size_t h = 1; h < vars; ++h) {
    s += CoordPoly::variable(sig, vars, h) * CoordPoly::variable(sig, vars, h);
  }
  CoordPoly imag(sig, vars);
  for (std::size_t h = 1; h < vars; ++h) {
    Exponents e{};
    e[h] = 1;
    imag.add_term(e, AlgebraElement::basis(sig, sig.coordinate_basis(h)));
  }
  std::vector<CoordPoly> s_powers{CoordPoly::scalar(sig, vars, 1)};
  auto s_power = [&](unsigned k) -> const CoordPoly& {
    while (s_powers.size() <= k) s_powers.push_back(s_powers.back() * s);
    return s_powers[k];
  };
  CoordPoly out(sig, vars);
  for (const auto& [e, c] : f.stem.f1().terms()) {
    Exponents x0{};
    x0[0] = e[kAlpha];
    out += s_power(e[kBeta] / 2) * CoordPoly::monomial(sig, vars, x0, c);
  }
  for (const auto& [e, c] : f.stem.f2().terms()) {
    Exponents x0{};
    x0[0] = e[kAlpha];
    out += s_power(e[kBeta] / 2) * (imag * CoordPoly::monomial(sig, vars, x0, c));
  }
  return {f.domain, RationalFn(std::move(out)), std::nullopt};
}

namespace {

std::vector<CoordPoly> slice_images(const ImaginaryUnit& unit, int beta_sign) {
  const Signature& sig = unit.signature();
  std::vector<CoordPoly> images{CoordPoly::variable(sig, 2, kAlpha)};
  const CoordPoly beta = CoordPoly::variable(sig, 2, kBeta) * Rational(beta_sign);
  for (const auto& c : unit.components()) images.push_back(beta * c);
  return images;
}

}  // namespace

std::optional<StemFunction> CandidateStem::to_stem() const {
  if (!f1.is_polynomial() || !f2.is_polynomial()) return std::nullopt;
  return StemFunction::make(f1.numerator(), f2.numerator());
}

CandidateStem extract_stem(const PointFunction& g, const ImaginaryUnit& unit) {
  if (!(unit.signature() == g.signature())) throw SignatureMismatch("extract_stem: unit signature");
  const RationalFn at_z = g.expr.substitute(slice_images(unit, +1));
  const RationalFn at_zbar = g.expr.substitute(slice_images(unit, -1));
  const Rational half(1, 2);
  RationalFn f1 = (at_z + at_zbar) * half;
  RationalFn f2 = (at_z - at_zbar).left_mul(unit.value() * Rational(-1, 2));
  return {std::move(f1), std::move(f2), unit};
}

SliceFunction slice_derivative(const SliceFunction& f, unsigned k) {
  StemFunction stem = f.stem;
  for (unsigned n = 0; n < k; ++n) stem = stem_dbar(stem);
  return {f.domain, std::move(stem)};
}

AlgebraElement representation_eval(const PointFunction& g, const ImaginaryUnit& h,
                                   const ImaginaryUnit& k, const PlanePoint& z) {
  const AlgebraElement a = point_eval_at(g, h, z);
  const AlgebraElement b = point_eval_at(g, h, {z.alpha, -z.beta});
  const Rational half(1, 2);
  return (a + b) * half - mul(k.value(), mul(h.value(), a - b)) * half;
}

SliceTest is_slice(const PointFunction& g, std::span<const ImaginaryUnit> units,
                   std::span<const PlanePoint> points) {
  SliceTest result;
  for (const auto& h : units) {
    for (const auto& k : units) {
      if (h == k) continue;
      for (const auto& z : points) {
        ++result.checks;
        AlgebraElement predicted = representation_eval(g, h, k, z);
        AlgebraElement actual = point_eval_at(g, k, z);
        if (!(predicted == actual)) {
          result.is_slice = false;
          result.witness = RepresentationWitness{h, k, z, std::move(predicted), std::move(actual)};
          return result;
        }
      }
    }
  }
  return result;
}

}  // namespace slicecalc
