#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace slicecalc {

/// Arbitrary-precision rational scalar. Always kept in lowest terms.
using Rational = mpq_class;

/// num / den in lowest terms; mpq_class(num, den) alone does not reduce.
Rational make_rational(long num, long den);

/// Serializes as "p/q" (q = 1 included), the exchange format for reports.
std::string to_fraction_string(const Rational& r);

/// Compact form used inside human-readable algebra strings: "p" or "p/q".
std::string to_display_string(const Rational& r);

/// Accepts "p", "p/q" and "-p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

/// Exact square root when r is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

Rational factorial(unsigned n);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace slicecalc
