#include "slicecalc/operators.hpp"

#include <array>
#include <cmath>

#include "slicecalc/errors.hpp"

namespace slicecalc {

AlgebraElement SlicePlanePoly::eval(const PlanePoint& z) const {
  const std::array<Rational, 2> point{z.alpha, z.beta};
  return fn.eval(point);
}

SlicePlanePoly restrict_to_slice(const PointFunction& g, const ImaginaryUnit& unit) {
  if (!(unit.signature() == g.signature())) throw SignatureMismatch("restrict_to_slice: unit");
  const Signature& sig = unit.signature();
  std::vector<CoordPoly> images{CoordPoly::variable(sig, 2, kAlpha)};
  const CoordPoly beta = CoordPoly::variable(sig, 2, kBeta);
  for (const auto& c : unit.components()) images.push_back(beta * c);
  return {g.expr.substitute(images), unit};
}

SlicePlanePoly restrict_to_slice(const SliceFunction& f, const ImaginaryUnit& unit) {
  if (!(unit.signature() == f.signature())) throw SignatureMismatch("restrict_to_slice: unit");
  return {RationalFn(f.stem.f1() + f.stem.f2().left_mul(unit.value())), unit};
}

SlicePlanePoly dbar_slice(const SlicePlanePoly& p, unsigned n) {
  const Rational half(1, 2);
  RationalFn fn = p.fn;
  for (unsigned k = 0; k < n; ++k) {
    fn = (fn.partial(kAlpha) + fn.partial(kBeta).left_mul(p.unit.value())) * half;
  }
  return {std::move(fn), p.unit};
}

SlicePlanePoly dbar_slice(const PointFunction& g, const ImaginaryUnit& unit, unsigned n) {
  return dbar_slice(restrict_to_slice(g, unit), n);
}

SlicePlanePoly dbar_slice(const SliceFunction& f, const ImaginaryUnit& unit, unsigned n) {
  return dbar_slice(restrict_to_slice(f, unit), n);
}

CoordPoly imaginary_norm_sq(const Signature& sig) {
  const std::size_t vars = sig.coordinate_count();
  CoordPoly s(sig, vars);
  for (std::size_t h = 1; h < vars; ++h) {
    Exponents e{};
    e[h] = 2;
    s.add_term(e, AlgebraElement::scalar(sig, 1));
  }
  return s;
}

CoordPoly imaginary_part(const Signature& sig) {
  const std::size_t vars = sig.coordinate_count();
  CoordPoly out(sig, vars);
  for (std::size_t h = 1; h < vars; ++h) {
    Exponents e{};
    e[h] = 1;
    out.add_term(e, AlgebraElement::basis(sig, sig.coordinate_basis(h)));
  }
  return out;
}

CoordPoly conjugate_variable(const Signature& sig) {
  return CoordPoly::variable(sig, sig.coordinate_count(), 0) - imaginary_part(sig);
}

namespace {

// sum_h x_h dg/dx_h over the imaginary coordinates.
RationalFn euler_imaginary(const RationalFn& g) {
  const Signature& sig = g.signature();
  const std::size_t vars = sig.coordinate_count();
  RationalFn out(CoordPoly(sig, vars));
  for (std::size_t h = 1; h < vars; ++h) {
    out = out + RationalFn(CoordPoly::variable(sig, vars, h)) * g.partial(h);
  }
  return out;
}

void check_arity(const PointFunction& g) {
  if (g.expr.var_count() != g.signature().coordinate_count()) {
    throw ArityMismatch("point function must use the coordinates x_0..x_n");
  }
}

}  // namespace

PointFunction thetabar(const PointFunction& g, unsigned n) {
  if (n == 0) return g;
  return thetabar_powers(g, n).back();
}

std::vector<PointFunction> thetabar_powers(const PointFunction& g, unsigned n) {
  check_arity(g);
  const Signature& sig = g.signature();
  const CoordPoly s = imaginary_norm_sq(sig);
  const RationalFn imag(imaginary_part(sig));
  const Rational half(1, 2);
  std::vector<PointFunction> out;
  RationalFn current = g.expr;
  for (unsigned k = 0; k < n; ++k) {
    current = (current.partial(0) + (imag * euler_imaginary(current)).divide_by(s)) * half;
    out.push_back({g.domain, current, std::nullopt});
  }
  return out;
}

PointFunction g_operator(const PointFunction& g) {
  check_arity(g);
  const Signature& sig = g.signature();
  const RationalFn s(imaginary_norm_sq(sig));
  const RationalFn imag(imaginary_part(sig));
  RationalFn out = s * g.expr.partial(0) + imag * euler_imaginary(g.expr);
  return {g.domain, std::move(out), std::nullopt};
}

namespace {

std::vector<double> eval_at(const PointFunction& g, std::vector<double> x) {
  return g.expr.eval_float(x);
}

// Central difference of g at x along direction d.
std::vector<double> directional(const PointFunction& g, std::span<const double> x,
                                std::span<const double> d, double step) {
  std::vector<double> plus(x.begin(), x.end());
  std::vector<double> minus(x.begin(), x.end());
  for (std::size_t h = 0; h < x.size(); ++h) {
    plus[h] += step * d[h];
    minus[h] -= step * d[h];
  }
  auto a = eval_at(g, plus);
  const auto b = eval_at(g, minus);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = (a[k] - b[k]) / (2 * step);
  return a;
}

std::vector<double> axis_direction(std::size_t vars, std::size_t h) {
  std::vector<double> d(vars, 0.0);
  d[h] = 1.0;
  return d;
}

std::vector<double> paravector(const Signature& sig, std::span<const double> coords) {
  std::vector<double> out(sig.dimension(), 0.0);
  for (std::size_t h = 0; h < coords.size(); ++h) out[sig.coordinate_basis(h)] = coords[h];
  return out;
}

}  // namespace

std::vector<double> finite_diff_oracle(const PointFunction& g, std::span<const double> x,
                                       const OperatorDescriptor& op) {
  const Signature& sig = g.signature();
  const std::size_t vars = sig.coordinate_count();
  if (x.size() != vars) throw ArityMismatch("finite_diff_oracle: wrong point dimension");
  double s = 0.0;
  for (std::size_t h = 1; h < vars; ++h) s += x[h] * x[h];
  if (std::sqrt(s) <= 10 * op.step) {
    throw PointTooCloseToAxis("finite_diff_oracle: |Im x| must exceed 10 * step");
  }
  const auto d0 = directional(g, x, axis_direction(vars, 0), op.step);
  const std::size_t dim = sig.dimension();
  if (op.kind == OperatorKind::DbarSlice) {
    if (op.unit.size() != vars - 1) throw ArityMismatch("finite_diff_oracle: unit dimension");
    std::vector<double> dir(vars, 0.0);
    std::vector<double> unit_coords(vars, 0.0);
    for (std::size_t h = 1; h < vars; ++h) dir[h] = unit_coords[h] = op.unit[h - 1];
    const auto db = directional(g, x, dir, op.step);
    const auto idb = float_mul(sig, paravector(sig, unit_coords), db);
    std::vector<double> out(dim);
    for (std::size_t k = 0; k < dim; ++k) out[k] = 0.5 * (d0[k] + idb[k]);
    return out;
  }
  std::vector<double> euler(dim, 0.0);
  for (std::size_t h = 1; h < vars; ++h) {
    const auto dh = directional(g, x, axis_direction(vars, h), op.step);
    for (std::size_t k = 0; k < dim; ++k) euler[k] += x[h] * dh[k];
  }
  std::vector<double> imag_coords(x.begin(), x.end());
  imag_coords[0] = 0.0;
  const auto ie = float_mul(sig, paravector(sig, imag_coords), euler);
  std::vector<double> out(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    out[k] = op.kind == OperatorKind::Thetabar ? 0.5 * (d0[k] + ie[k] / s) : s * d0[k] + ie[k];
  }
  return out;
}

}  // namespace slicecalc
