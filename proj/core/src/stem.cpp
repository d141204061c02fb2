#include "slicecalc/stem.hpp"

#include <array>

#include "slicecalc/errors.hpp"

namespace slicecalc {

namespace {

// Real and imaginary parts of a C-valued polynomial in (alpha, beta).
struct ComplexPoly {
  CoordPoly re;
  CoordPoly im;
};

ComplexPoly times_linear(const ComplexPoly& p, int beta_sign) {
  const Signature sig = p.re.signature();
  const CoordPoly a = CoordPoly::variable(sig, 2, kAlpha);
  const CoordPoly b = CoordPoly::variable(sig, 2, kBeta) * Rational(beta_sign);
  return {p.re * a - p.im * b, p.re * b + p.im * a};
}

}  // namespace

std::span<const std::string> plane_variable_names() {
  static const std::array<std::string, 2> names{"a", "b"};
  return names;
}

StemFunction StemFunction::make(CoordPoly f1, CoordPoly f2) {
  if (!(f1.signature() == f2.signature())) {
    throw SignatureMismatch("stem components have different signatures");
  }
  if (f1.var_count() != 2 || f2.var_count() != 2) {
    throw ArityMismatch("stem components must be polynomials in (alpha, beta)");
  }
  auto check = [](const CoordPoly& p, unsigned parity, const char* which) {
    for (const auto& [e, c] : p.terms()) {
      if (e[kBeta] % 2 != parity) {
        throw ParityViolation(std::string("stem component ") + which + " has monomial " +
                              CoordPoly::monomial(p.signature(), 2, e, c)
                                  .to_string(plane_variable_names()) +
                              (parity == 0 ? " of odd" : " of even") + " degree in beta");
      }
    }
  };
  check(f1, 0, "F1");
  check(f2, 1, "F2");
  return StemFunction(std::move(f1), std::move(f2));
}

StemFunction StemFunction::zero(const Signature& sig) {
  return StemFunction(CoordPoly(sig, 2), CoordPoly(sig, 2));
}

StemFunction StemFunction::constant(const AlgebraElement& c) {
  return StemFunction(CoordPoly::constant(c.signature(), 2, c), CoordPoly(c.signature(), 2));
}

StemFunction StemFunction::z(const Signature& sig) {
  return StemFunction(CoordPoly::variable(sig, 2, kAlpha), CoordPoly::variable(sig, 2, kBeta));
}

StemFunction StemFunction::zbar(const Signature& sig) {
  return StemFunction(CoordPoly::variable(sig, 2, kAlpha), -CoordPoly::variable(sig, 2, kBeta));
}

StemFunction StemFunction::from_z_zbar(
    const Signature& sig,
    std::span<const std::pair<std::pair<unsigned, unsigned>, AlgebraElement>> terms) {
  CoordPoly f1(sig, 2);
  CoordPoly f2(sig, 2);
  for (const auto& [powers, c] : terms) {
    ComplexPoly p{CoordPoly::scalar(sig, 2, 1), CoordPoly(sig, 2)};
    for (unsigned k = 0; k < powers.first; ++k) p = times_linear(p, +1);
    for (unsigned k = 0; k < powers.second; ++k) p = times_linear(p, -1);
    f1 += p.re.right_mul(c);
    f2 += p.im.right_mul(c);
  }
  return make(std::move(f1), std::move(f2));
}

StemFunction StemFunction::operator+(const StemFunction& other) const {
  return StemFunction(f1_ + other.f1_, f2_ + other.f2_);
}

StemFunction StemFunction::operator-(const StemFunction& other) const {
  return StemFunction(f1_ - other.f1_, f2_ - other.f2_);
}

StemFunction StemFunction::operator*(const Rational& r) const {
  return StemFunction(f1_ * r, f2_ * r);
}

StemFunction StemFunction::right_mul(const AlgebraElement& c) const {
  return StemFunction(f1_.right_mul(c), f2_.right_mul(c));
}

std::string StemFunction::to_string() const {
  return "F1 = " + f1_.to_string(plane_variable_names()) +
         ", F2 = " + f2_.to_string(plane_variable_names());
}

StemFunction stem_dbar(const StemFunction& f) {
  const Rational half(1, 2);
  CoordPoly g1 = (f.f1().partial(kAlpha) - f.f2().partial(kBeta)) * half;
  CoordPoly g2 = (f.f1().partial(kBeta) + f.f2().partial(kAlpha)) * half;
  return StemFunction(std::move(g1), std::move(g2));
}

StemFunction stem_mul(const StemFunction& f, const StemFunction& g) {
  if (!(f.signature() == g.signature())) throw SignatureMismatch("stem_mul: signatures differ");
  return StemFunction(f.f1() * g.f1() - f.f2() * g.f2(), f.f1() * g.f2() + f.f2() * g.f1());
}

StemFunction stem_zbar_power(const Signature& sig, unsigned h) {
  StemFunction out = StemFunction::constant(AlgebraElement::scalar(sig, 1));
  const StemFunction zb = StemFunction::zbar(sig);
  for (unsigned k = 0; k < h; ++k) out = stem_mul(out, zb);
  return out;
}

std::pair<AlgebraElement, AlgebraElement> stem_eval(const StemFunction& f, const Rational& alpha,
                                                    const Rational& beta) {
  const std::array<Rational, 2> point{alpha, beta};
  return {f.f1().eval(point), f.f2().eval(point)};
}

}  // namespace slicecalc
