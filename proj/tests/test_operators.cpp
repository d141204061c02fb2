#include <doctest.h>

#include <cmath>
#include <vector>

#include "slicecalc/errors.hpp"
#include "slicecalc/generators.hpp"
#include "slicecalc/operators.hpp"
#include "slicecalc/polyanalytic.hpp"

using namespace slicecalc;

namespace {

const Signature kH = Signature::quaternion();

AlgebraElement q(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return AlgebraElement(kH, {a, b, c, d});
}

PointFunction poly(const CoordPoly& p) { return {CircularDomain::entire(), RationalFn(p), {}}; }

PointFunction identity() { return to_point_function(identity_function(kH)); }
PointFunction conjugate() { return to_point_function(conjugate_function(kH)); }

// thetabar built with Im(x) on the right of the Euler sum instead of the left.
PointFunction right_thetabar(const PointFunction& g) {
  const Signature& sig = g.signature();
  RationalFn euler(CoordPoly(sig, sig.coordinate_count()));
  for (std::size_t h = 1; h < sig.coordinate_count(); ++h) {
    euler = euler + g.expr.partial(h) * RationalFn(CoordPoly::variable(sig, sig.coordinate_count(), h));
  }
  const RationalFn rhs = (euler * RationalFn(imaginary_part(sig))).divide_by(imaginary_norm_sq(sig));
  return {g.domain, (g.expr.partial(0) + rhs) * make_rational(1, 2), {}};
}

}  // namespace

TEST_CASE("restriction to a slice") {
  const auto units = sample_units(kH, 13, 5);
  for (const auto& u : units) {
    const auto r = restrict_to_slice(identity(), u);
    const auto a = CoordPoly::variable(kH, 2, kAlpha);
    const auto b = CoordPoly::variable(kH, 2, kBeta);
    CHECK(equivalent(r.fn, RationalFn(a + b.right_mul(u.value()))));
  }
  const auto v = restrict_to_slice(conjugation_by_unit(kH), ImaginaryUnit::canonical(kH, 1));
  CHECK(equivalent(v.fn, restrict_to_slice(identity(), ImaginaryUnit::canonical(kH, 1)).fn));
}

TEST_CASE("restriction of the axis-discontinuous function") {
  const auto f = axis_discontinuous(kH);
  for (const auto& u : sample_units(kH, 17, 12)) {
    const auto c = u.components();
    const auto b = CoordPoly::variable(kH, 2, kBeta);
    const auto one = CoordPoly::scalar(kH, 2, 1);
    const RationalFn expected(b * (c[0] * c[0] * c[1]),
                              b * b * (c[0] * c[0] * c[0] * c[0]) + one * (c[1] * c[1] + c[2] * c[2]));
    CHECK(equivalent(restrict_to_slice(f, u).fn, expected));
  }
}

TEST_CASE("slice Cauchy-Riemann operator") {
  const auto i = ImaginaryUnit::canonical(kH, 1);
  const auto j = ImaginaryUnit::canonical(kH, 2);
  for (const auto& u : sample_units(kH, 19, 8)) {
    CHECK(dbar_slice(identity(), u, 1).fn.is_zero());
    const auto v = conjugation_by_unit(kH);
    const auto d = dbar_slice(v, u, 1);
    const auto I = u.value();
    const auto ii = AlgebraElement::basis(kH, 1);
    const auto expected = (AlgebraElement::scalar(kH, 1) - I * ii * I * ii) * make_rational(1, 2);
    CHECK(d.fn.is_polynomial());
    CHECK(d.fn.numerator() == CoordPoly::constant(kH, 2, expected));
    CHECK(dbar_slice(v, u, 2).fn.is_zero());
  }
  const auto v = conjugation_by_unit(kH);
  CHECK(dbar_slice(v, i, 1).fn.is_zero());
  CHECK(dbar_slice(v, j, 1).eval(PlanePoint{3, 4}) == q(1, 0, 0, 0));
}

TEST_CASE("global conjugate operator on basic functions") {
  const auto c = poly(CoordPoly::constant(kH, 4, q(1, 2, 3, 4)));
  CHECK(thetabar(c).expr.is_zero());
  CHECK(thetabar(identity()).expr.is_zero());
  CHECK(equivalent(thetabar(conjugate()).expr, RationalFn(CoordPoly::scalar(kH, 4, 1))));
  CHECK(thetabar(conjugate(), 2).expr.is_zero());
  const auto powers = thetabar_powers(poly(conjugate_variable(kH).pow(3)), 3);
  REQUIRE(powers.size() == 3);
  CHECK(equivalent(powers[2].expr, RationalFn(CoordPoly::scalar(kH, 4, 6))));
}

TEST_CASE("G operator on basic functions") {
  CHECK(g_operator(identity()).expr.is_zero());
  CHECK(equivalent(g_operator(conjugate()).expr, RationalFn(imaginary_norm_sq(kH) * Rational(2))));
  CHECK(g_operator(poly(CoordPoly::constant(kH, 4, q(0, 1, 0, 0)))).expr.is_zero());
}

TEST_CASE("global operator coincides with the slice operator") {
  for (const auto& sig : {Signature::quaternion(), Signature::clifford(3)}) {
    Rng rng(73);
    const auto units = sample_units(sig, 29, 6);
    const auto points = sample_plane_points(CircularDomain::entire(), 31, 4);
    for (int t = 0; t < 15; ++t) {
      const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)), {}};
      const auto powers = thetabar_powers(g, 3);
      for (unsigned n = 1; n <= 3; ++n) {
        for (const auto& u : units) {
          const auto d = dbar_slice(g, u, n);
          for (const auto& z : points) {
            REQUIRE(point_eval_at(powers[n - 1], u, z) == d.eval(z));
          }
        }
      }
    }
  }
}

TEST_CASE("Im(x) on the right breaks the slice coincidence") {
  // Negative control: the same harness must notice the wrong multiplication order.
  Rng rng(79);
  const auto units = sample_units(kH, 37, 6);
  const auto points = sample_plane_points(CircularDomain::entire(), 41, 4);
  std::size_t mismatches = 0;
  for (int t = 0; t < 10; ++t) {
    const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(kH, rng)), {}};
    const auto wrong = right_thetabar(g);
    for (const auto& u : units) {
      const auto d = dbar_slice(g, u, 1);
      for (const auto& z : points) {
        if (!(point_eval_at(wrong, u, z) == d.eval(z))) ++mismatches;
      }
    }
  }
  CHECK(mismatches > 0);
}

TEST_CASE("G equals 2 s thetabar") {
  for (const auto& sig : {Signature::quaternion(), Signature::clifford(3)}) {
    Rng rng(83);
    for (int t = 0; t < 50; ++t) {
      const PointFunction g{CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)), {}};
      const RationalFn lhs = g_operator(g).expr;
      const RationalFn rhs = thetabar(g).expr * RationalFn(imaginary_norm_sq(sig) * Rational(2));
      REQUIRE(equivalent(lhs, rhs));
    }
  }
}

TEST_CASE("finite-difference oracle on fixed points") {
  const OperatorDescriptor theta{OperatorKind::Thetabar, {}, 1e-5};
  auto near = [](const std::vector<double>& got, const std::vector<double>& want) {
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (std::abs(got[k] - want[k]) > 1e-6) return false;
    }
    return true;
  };
  const std::vector<double> p1{1, 1, 1, 1};
  CHECK(near(finite_diff_oracle(identity(), p1, theta), {0, 0, 0, 0}));
  const std::vector<double> p2{0, 2, 0, 0};
  CHECK(near(finite_diff_oracle(conjugate(), p2, theta), {1, 0, 0, 0}));
  const OperatorDescriptor dbar_j{OperatorKind::DbarSlice, {0, 1, 0}, 1e-5};
  const std::vector<double> p3{0, 0, 1, 0};
  CHECK(near(finite_diff_oracle(conjugation_by_unit(kH), p3, dbar_j), {1, 0, 0, 0}));
  const std::vector<double> axis{1, 0, 0, 0};
  CHECK_THROWS_AS(finite_diff_oracle(identity(), axis, theta), PointTooCloseToAxis);
}
