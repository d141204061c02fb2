#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slicecalc/rational.hpp"

namespace slicecalc {

enum class AlgebraKind { Quaternion, Clifford };

/// Which algebra an element lives in: the quaternions or R_m = Cl(0, m).
///
/// Basis indices: for quaternions 0..3 stand for 1, i, j, k. For Clifford
/// algebras an index is the bitmask of the blade, bit (j - 1) standing for
/// e_j, so index 0 is the unit and index (1 << (j - 1)) is e_j.
class Signature {
 public:
  static Signature quaternion() { return Signature(AlgebraKind::Quaternion, 2); }
  /// Requires m >= 2.
  static Signature clifford(unsigned m);

  AlgebraKind kind() const { return kind_; }
  bool is_quaternion() const { return kind_ == AlgebraKind::Quaternion; }
  /// Generator count of the Clifford algebra (2 for quaternions, H = Cl(0,2)).
  unsigned generators() const { return m_; }

  std::size_t dimension() const { return std::size_t{1} << m_; }
  /// Number of real coordinates x_0..x_n of the paravector space.
  std::size_t coordinate_count() const { return imaginary_count() + 1; }
  /// Number of imaginary coordinates: 3 for quaternions, m for R_m.
  std::size_t imaginary_count() const { return is_quaternion() ? 3 : m_; }
  /// Basis index multiplying coordinate x_h (h = 0 is the unit).
  std::size_t coordinate_basis(std::size_t h) const;
  bool is_paravector_index(std::size_t index) const;

  std::string basis_name(std::size_t index) const;
  std::string name() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  Signature(AlgebraKind kind, unsigned m) : kind_(kind), m_(m) {}
  AlgebraKind kind_;
  unsigned m_;
};

/// Exact element of H or R_m with dense rational coefficients over the blade
/// basis. Zero coefficients carry no information, so equality is coefficient-
/// wise and every element has exactly one representation.
class AlgebraElement {
 public:
  explicit AlgebraElement(Signature sig);
  AlgebraElement(Signature sig, std::vector<Rational> coeffs);

  static AlgebraElement scalar(Signature sig, const Rational& r);
  static AlgebraElement basis(Signature sig, std::size_t index, const Rational& r = 1);
  /// Paravector x_0 + sum_h x_h u_h from its coordinates.
  static AlgebraElement from_coordinates(Signature sig, std::span<const Rational> coords);

  const Signature& signature() const { return sig_; }
  std::size_t dimension() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t index) const { return coeffs_[index]; }
  Rational& operator[](std::size_t index) { return coeffs_[index]; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_real() const;
  bool is_paravector() const;
  /// Coordinates (x_0..x_n); throws NonParavector.
  std::vector<Rational> coordinates() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& r);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(AlgebraElement a, const Rational& r) { return a *= r; }
  friend AlgebraElement operator*(const Rational& r, AlgebraElement a) { return a *= r; }
  AlgebraElement operator-() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// "1/2 - 3*i + k" style rendering, "0" for zero.
  std::string to_string() const;

 private:
  Signature sig_;
  std::vector<Rational> coeffs_;
};

/// Exact product; throws SignatureMismatch.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);
inline AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return mul(a, b); }

/// Accumulates a * b into out without allocating a temporary element.
void mul_add(const AlgebraElement& a, const AlgebraElement& b, AlgebraElement& out);

/// Hamilton product of quaternion components (1, i, j, k).
void quaternion_product(std::span<const Rational> a, std::span<const Rational> b,
                        std::span<Rational> out);
/// Cl(0, m) blade product over bitmask-indexed components.
void blade_product(unsigned m, std::span<const Rational> a, std::span<const Rational> b,
                   std::span<Rational> out);
/// Sign of e_a e_b = sign * e_(a xor b) in Cl(0, m).
int blade_sign(std::uint32_t a, std::uint32_t b);

/// Floating-point product used by numerical oracles.
std::vector<double> float_mul(const Signature& sig, std::span<const double> a,
                              std::span<const double> b);

/// Quaternion conjugate, or Clifford conjugation restricted to paravectors.
AlgebraElement conj(const AlgebraElement& a);
Rational re(const AlgebraElement& a);
AlgebraElement im(const AlgebraElement& a);
/// Squared Euclidean norm; paravectors only for Clifford signatures.
Rational norm_sq(const AlgebraElement& a);

/// An imaginary unit I of the paravector sphere: Re(I) = 0 and I^2 = -1 exactly.
class ImaginaryUnit {
 public:
  /// Validates; throws InvalidImaginaryUnit.
  static ImaginaryUnit make(const AlgebraElement& value);
  /// From imaginary coordinates (i_1..i_n).
  static ImaginaryUnit from_components(const Signature& sig, std::span<const Rational> imag);
  /// The h-th coordinate unit (i, j, k or e_h), 1-based.
  static ImaginaryUnit canonical(const Signature& sig, std::size_t h);

  const AlgebraElement& value() const { return value_; }
  const Signature& signature() const { return value_.signature(); }
  /// Imaginary coordinates i_1..i_n.
  std::vector<Rational> components() const;
  ImaginaryUnit negated() const { return ImaginaryUnit(-value_); }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return a.value_ == b.value_;
  }

 private:
  explicit ImaginaryUnit(AlgebraElement value) : value_(std::move(value)) {}
  AlgebraElement value_;
};

/// Inverse stereographic chart: parameters t in Q^(n-1) map to
/// ((1 - |t|^2) u_1 + 2 t_1 u_2 + ... + 2 t_(n-1) u_n) / (1 + |t|^2).
ImaginaryUnit unit_from_chart(const Signature& sig, std::span<const Rational> params);

/// Deterministic rational sample of the unit sphere. The coordinate units come
/// first, followed by chart images of seeded random small rationals.
std::vector<ImaginaryUnit> sample_units(const Signature& sig, std::uint64_t seed,
                                        std::size_t count);

}  // namespace slicecalc
