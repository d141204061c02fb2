#pragma once

#include <span>
#include <string>
#include <utility>

#include "slicecalc/multipoly.hpp"

namespace slicecalc {

/// Variable indices of slice-plane polynomials in (alpha, beta).
inline constexpr std::size_t kAlpha = 0;
inline constexpr std::size_t kBeta = 1;

/// Names for printing slice-plane polynomials.
std::span<const std::string> plane_variable_names();

/// Stem function F = F1 + i F2 with polynomial components in (alpha, beta).
///
/// The parity conditions F1(conj z) = F1(z) and F2(conj z) = -F2(z) become:
/// every monomial of F1 has even beta-degree and every monomial of F2 has odd
/// beta-degree. They are checked once, at construction; dbar and products
/// preserve them.
class StemFunction {
 public:
  /// Throws ParityViolation naming the first offending monomial.
  static StemFunction make(CoordPoly f1, CoordPoly f2);

  static StemFunction zero(const Signature& sig);
  /// The constant stem (c, 0).
  static StemFunction constant(const AlgebraElement& c);
  /// z = alpha + i beta.
  static StemFunction z(const Signature& sig);
  /// conj(z) = alpha - i beta.
  static StemFunction zbar(const Signature& sig);
  /// sum over (a, b) of z^a conj(z)^b c_ab, expanded into (F1, F2).
  static StemFunction from_z_zbar(const Signature& sig,
                                  std::span<const std::pair<std::pair<unsigned, unsigned>,
                                                            AlgebraElement>> terms);

  const CoordPoly& f1() const { return f1_; }
  const CoordPoly& f2() const { return f2_; }
  const Signature& signature() const { return f1_.signature(); }
  bool is_zero() const { return f1_.is_zero() && f2_.is_zero(); }

  StemFunction operator+(const StemFunction& other) const;
  StemFunction operator-(const StemFunction& other) const;
  StemFunction operator*(const Rational& r) const;
  /// (F1, F2) * c with c multiplied on the right of both components.
  StemFunction right_mul(const AlgebraElement& c) const;

  friend bool operator==(const StemFunction&, const StemFunction&) = default;

  std::string to_string() const;

 private:
  friend StemFunction stem_dbar(const StemFunction& f);
  friend StemFunction stem_mul(const StemFunction& f, const StemFunction& g);

  StemFunction(CoordPoly f1, CoordPoly f2) : f1_(std::move(f1)), f2_(std::move(f2)) {}
  CoordPoly f1_;
  CoordPoly f2_;
};

/// dF/d(conj z) = 1/2 ((dF1/da - dF2/db) + i (dF1/db + dF2/da)).
StemFunction stem_dbar(const StemFunction& f);

/// Pointwise product in (algebra) (x) C: (F1 G1 - F2 G2, F1 G2 + F2 G1).
StemFunction stem_mul(const StemFunction& f, const StemFunction& g);

/// conj(z)^h as a stem.
StemFunction stem_zbar_power(const Signature& sig, unsigned h);

/// (F1(z), F2(z)) at z = alpha + i beta.
std::pair<AlgebraElement, AlgebraElement> stem_eval(const StemFunction& f, const Rational& alpha,
                                                    const Rational& beta);

}  // namespace slicecalc
