#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "slicecalc/algebra.hpp"

namespace slicecalc {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector; entries past the polynomial's variable count stay zero.
using Exponents = std::array<std::uint8_t, kMaxVariables>;

unsigned total_degree(const Exponents& e);

/// Polynomial in commuting real variables with algebra-valued coefficients.
///
/// A term is x^e * c: the variables are real, so they commute with everything,
/// and polynomial products multiply coefficients in operand order. Terms are
/// kept in a map ordered lexicographically on exponents (x_0 most significant);
/// zero coefficients are never stored.
class CoordPoly {
 public:
  using TermMap = std::map<Exponents, AlgebraElement>;

  CoordPoly(Signature sig, std::size_t var_count);

  static CoordPoly constant(Signature sig, std::size_t var_count, const AlgebraElement& c);
  static CoordPoly scalar(Signature sig, std::size_t var_count, const Rational& r);
  /// The real coordinate function x_h.
  static CoordPoly variable(Signature sig, std::size_t var_count, std::size_t h);
  static CoordPoly monomial(Signature sig, std::size_t var_count, const Exponents& e,
                            const AlgebraElement& c);

  const Signature& signature() const { return sig_; }
  std::size_t var_count() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient is a real multiple of 1.
  bool is_real() const;
  bool is_constant() const;
  unsigned degree() const;
  unsigned degree_in(std::size_t h) const;
  /// Coefficient of the largest exponent; requires a nonzero polynomial.
  const AlgebraElement& leading_coefficient() const;
  /// Coefficient of x^e, zero when absent.
  AlgebraElement coefficient(const Exponents& e) const;

  /// Adds x^e * c, pruning a resulting zero.
  void add_term(const Exponents& e, const AlgebraElement& c);

  CoordPoly& operator+=(const CoordPoly& other);
  CoordPoly& operator-=(const CoordPoly& other);
  CoordPoly& operator*=(const Rational& r);
  friend CoordPoly operator+(CoordPoly a, const CoordPoly& b) { return a += b; }
  friend CoordPoly operator-(CoordPoly a, const CoordPoly& b) { return a -= b; }
  friend CoordPoly operator*(CoordPoly a, const Rational& r) { return a *= r; }
  friend CoordPoly operator*(const Rational& r, CoordPoly a) { return a *= r; }
  CoordPoly operator-() const;
  friend CoordPoly operator*(const CoordPoly& a, const CoordPoly& b);
  friend bool operator==(const CoordPoly& a, const CoordPoly& b);

  /// c * p, coefficient multiplied on the left.
  CoordPoly left_mul(const AlgebraElement& c) const;
  /// p * c.
  CoordPoly right_mul(const AlgebraElement& c) const;
  CoordPoly pow(unsigned k) const;

  CoordPoly partial(std::size_t h) const;
  /// Exact value, coefficients applied on the left.
  AlgebraElement eval(std::span<const Rational> point) const;
  std::vector<double> eval_float(std::span<const double> point) const;

  /// Replaces x_h by images[h]; the images must be real polynomials sharing a
  /// variable count, which becomes the result's variable count.
  CoordPoly substitute(std::span<const CoordPoly> images) const;

  /// q with p = q * divisor when the real polynomial divisor divides p.
  std::optional<CoordPoly> divide_exact(const CoordPoly& divisor) const;

  /// Human-readable form; default variable names are x0, x1, ...
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void check_compatible(const CoordPoly& other) const;

  Signature sig_;
  std::size_t vars_;
  TermMap terms_;
};

/// One factor base^exponent of a denominator. The base is a real,
/// non-constant polynomial whose leading coefficient is 1.
struct DenominatorFactor {
  CoordPoly base;
  unsigned exponent;
};

/// numerator / denominator with a real (hence central) denominator.
///
/// The denominator is kept as a product of distinct monic real factors, so the
/// quotient rule only raises the exponent of the factors it touches. After
/// every operation, factors that divide the numerator exactly are cancelled;
/// no other gcd reduction is attempted. The expanded denominator has leading
/// coefficient 1 under the lexicographic term order.
class RationalFn {
 public:
  RationalFn(CoordPoly numerator);  // NOLINT(google-explicit-constructor)
  /// Throws PreconditionFailed if denominator is zero or not real.
  RationalFn(CoordPoly numerator, const CoordPoly& denominator);

  const Signature& signature() const { return num_.signature(); }
  std::size_t var_count() const { return num_.var_count(); }
  const CoordPoly& numerator() const { return num_; }
  const std::vector<DenominatorFactor>& factors() const { return den_; }
  CoordPoly denominator() const;
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const Rational& r);

  RationalFn left_mul(const AlgebraElement& c) const;
  RationalFn right_mul(const AlgebraElement& c) const;
  /// Multiplies by 1 / base^exponent for a real base.
  RationalFn divide_by(const CoordPoly& base, unsigned exponent = 1) const;

  /// Exact partial derivative by the quotient rule.
  RationalFn partial(std::size_t h) const;
  /// Throws DenominatorVanishes.
  AlgebraElement eval(std::span<const Rational> point) const;
  std::vector<double> eval_float(std::span<const double> point) const;
  /// Throws DenominatorIdenticallyZero if a factor collapses to zero.
  RationalFn substitute(std::span<const CoordPoly> images) const;

  /// Equality of the functions: cross-multiplied numerators agree.
  friend bool equivalent(const RationalFn& a, const RationalFn& b);

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  RationalFn(CoordPoly numerator, std::vector<DenominatorFactor> factors);
  void normalize();

  CoordPoly num_;
  std::vector<DenominatorFactor> den_;
};

/// Merged denominator of a and b: for each base the larger exponent.
std::vector<DenominatorFactor> common_denominator(const std::vector<DenominatorFactor>& a,
                                                  const std::vector<DenominatorFactor>& b);

/// Numerator of f rewritten over the given multiple of its denominator.
CoordPoly numerator_over(const RationalFn& f, const std::vector<DenominatorFactor>& common);

}  // namespace slicecalc
