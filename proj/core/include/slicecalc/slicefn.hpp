#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "slicecalc/stem.hpp"

namespace slicecalc {

/// A point alpha + i beta of the complex plane with rational coordinates.
struct PlanePoint {
  Rational alpha;
  Rational beta;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// A conjugation-invariant connected open set D of C meeting the real line.
/// The domain in the algebra is its circularization, the union over all units
/// I of the copies of D in the planes C_I.
class CircularDomain {
 public:
  enum class Shape { Entire, Ball, Annulus };

  static CircularDomain entire();
  /// |z - center| < radius; throws InvalidDomain unless radius > 0.
  static CircularDomain ball(Rational center, Rational radius);
  /// r_in < |z - center| < r_out; throws InvalidDomain unless 0 <= r_in < r_out.
  static CircularDomain annulus(Rational center, Rational r_in, Rational r_out);

  Shape shape() const { return shape_; }
  const Rational& center() const { return center_; }
  const Rational& inner_radius() const { return r_in_; }
  const Rational& outer_radius() const { return r_out_; }

  bool contains(const PlanePoint& z) const;
  /// Membership of a paravector through (Re x, |Im x|^2); no square root needed.
  bool contains(const AlgebraElement& x) const;

  /// A point of D with beta > 0 used as the first sample.
  PlanePoint canonical_point() const;

  std::string to_string() const;
  friend bool operator==(const CircularDomain&, const CircularDomain&) = default;

 private:
  CircularDomain(Shape shape, Rational center, Rational r_in, Rational r_out)
      : shape_(shape), center_(std::move(center)), r_in_(std::move(r_in)), r_out_(std::move(r_out)) {}
  bool contains_squared(const Rational& alpha, const Rational& beta_sq) const;

  Shape shape_;
  Rational center_;
  Rational r_in_;
  Rational r_out_;
};

/// Deterministic off-axis points (beta > 0) of D; the canonical point first.
std::vector<PlanePoint> sample_plane_points(const CircularDomain& domain, std::uint64_t seed,
                                            std::size_t count);

/// f = I(F): f(alpha + I beta) = F1(alpha + i beta) + I F2(alpha + i beta).
struct SliceFunction {
  CircularDomain domain;
  StemFunction stem;

  const Signature& signature() const { return stem.signature(); }
};

/// A general function on the circularization, given by a rational expression
/// in the coordinates x_0..x_n. The denominator may vanish on the real axis;
/// axis_value, when set, is the value taken there.
struct PointFunction {
  CircularDomain domain;
  RationalFn expr;
  std::optional<AlgebraElement> axis_value;

  const Signature& signature() const { return expr.signature(); }
};

/// The coordinates (alpha, i_1 beta, .., i_n beta) of alpha + I beta.
std::vector<Rational> slice_point(const ImaginaryUnit& unit, const PlanePoint& z);

/// Throws PointOutsideDomain or IrrationalSliceRadius.
AlgebraElement slice_eval(const SliceFunction& f, const AlgebraElement& x);
/// F1(z) + I F2(z); throws PointOutsideDomain.
AlgebraElement slice_eval_at(const SliceFunction& f, const ImaginaryUnit& unit,
                             const PlanePoint& z);

/// Throws PointOutsideDomain, or DenominatorVanishes off the axis.
AlgebraElement point_eval(const PointFunction& g, std::span<const Rational> coords);
AlgebraElement point_eval(const PointFunction& g, const AlgebraElement& x);
AlgebraElement point_eval_at(const PointFunction& g, const ImaginaryUnit& unit,
                             const PlanePoint& z);

/// The polynomial x_0^a s^k c for alpha^a beta^2k c in F1, and
/// x_0^a s^k Im(x) c for alpha^a beta^(2k+1) c in F2, with s = |Im x|^2.
PointFunction to_point_function(const SliceFunction& f);

/// Stem components recovered from the restriction of g to one slice.
struct CandidateStem {
  RationalFn f1;
  RationalFn f2;
  ImaginaryUnit unit;

  /// The stem, when both components are polynomials.
  std::optional<StemFunction> to_stem() const;
};

/// F1 = (g(phi_I z) + g(phi_I conj z)) / 2 and
/// F2 = -(I / 2) (g(phi_I z) - g(phi_I conj z)), as functions of (alpha, beta).
CandidateStem extract_stem(const PointFunction& g, const ImaginaryUnit& unit);

/// I applied k times to stem_dbar.
SliceFunction slice_derivative(const SliceFunction& f, unsigned k);

/// The value on slice K predicted from slice H:
/// (g(z_H) + g(conj z_H)) / 2 - K (H / 2) (g(z_H) - g(conj z_H)).
AlgebraElement representation_eval(const PointFunction& g, const ImaginaryUnit& h,
                                   const ImaginaryUnit& k, const PlanePoint& z);

struct RepresentationWitness {
  ImaginaryUnit h;
  ImaginaryUnit k;
  PlanePoint z;
  AlgebraElement predicted;
  AlgebraElement actual;
};

struct SliceTest {
  bool is_slice = true;
  std::size_t checks = 0;
  std::optional<RepresentationWitness> witness;
};

/// Sampled falsifier: every ordered pair (H, K) of distinct units, H outer,
/// at every point. Stops at the first mismatch.
SliceTest is_slice(const PointFunction& g, std::span<const ImaginaryUnit> units,
                   std::span<const PlanePoint> points);

}  // namespace slicecalc
