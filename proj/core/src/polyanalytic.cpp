#include "slicecalc/polyanalytic.hpp"

#include <algorithm>

#include "slicecalc/random.hpp"

namespace slicecalc {

NotPolyanalyticOfOrder::NotPolyanalyticOfOrder(unsigned order, StemFunction residual)
    : Error("not polyanalytic of order " + std::to_string(order) + ": residual stem " +
            residual.to_string()),
      order_(order),
      residual_(std::move(residual)) {}

unsigned poly_order(const SliceFunction& f) {
  unsigned n = 1;
  StemFunction d = stem_dbar(f.stem);
  while (!d.is_zero()) {
    d = stem_dbar(d);
    ++n;
  }
  return n;
}

namespace {

std::vector<StemFunction> decompose_stem(const StemFunction& f, unsigned n) {
  if (n == 1) return {f};
  const Signature& sig = f.signature();
  const auto g = decompose_stem(stem_dbar(f), n - 1);
  StemFunction f0 = f;
  std::vector<StemFunction> out{StemFunction::zero(sig)};
  for (std::size_t h = 0; h < g.size(); ++h) {
    const Rational scale(1, static_cast<long>(h + 1));
    f0 = f0 - stem_mul(stem_zbar_power(sig, h + 1), g[h]) * scale;
    out.push_back(g[h] * scale);
  }
  out[0] = std::move(f0);
  return out;
}

}  // namespace

Decomposition decompose(const SliceFunction& f, unsigned n) {
  if (n == 0) throw PreconditionFailed("decompose: order must be at least 1");
  StemFunction residual = f.stem;
  for (unsigned k = 0; k < n; ++k) residual = stem_dbar(residual);
  if (!residual.is_zero()) throw NotPolyanalyticOfOrder(n, std::move(residual));
  auto stems = decompose_stem(f.stem, n);
  while (stems.size() > 1 && stems.back().is_zero()) stems.pop_back();
  Decomposition d;
  d.order = static_cast<unsigned>(stems.size());
  for (auto& s : stems) {
    if (!stem_dbar(s).is_zero()) {
      throw PreconditionFailed("decompose: component is not slice regular");
    }
    d.components.push_back({f.domain, std::move(s)});
  }
  if (!(recompose(d).stem == f.stem)) {
    throw PreconditionFailed("decompose: recomposition does not reproduce the input");
  }
  return d;
}

SliceFunction recompose(const Decomposition& d) {
  if (d.components.empty()) throw PreconditionFailed("recompose: no components");
  const Signature& sig = d.components.front().signature();
  StemFunction out = StemFunction::zero(sig);
  for (std::size_t h = 0; h < d.components.size(); ++h) {
    out = out + stem_mul(stem_zbar_power(sig, static_cast<unsigned>(h)), d.components[h].stem);
  }
  return {d.components.front().domain, std::move(out)};
}

ClassificationReport classify(const PointFunction& g, unsigned max_order,
                              std::span<const ImaginaryUnit> units,
                              std::span<const PlanePoint> points) {
  if (max_order == 0) throw PreconditionFailed("classify: max_order must be at least 1");
  if (units.empty() || points.empty()) throw PreconditionFailed("classify: empty sample");
  ClassificationReport report;
  unsigned sbs = 0;
  bool bounded = true;
  for (const auto& unit : units) {
    SlicePlanePoly p = restrict_to_slice(g, unit);
    std::optional<unsigned> order;
    for (unsigned n = 1; n <= max_order; ++n) {
      p = dbar_slice(p, 1);
      if (p.fn.is_zero()) {
        order = n;
        break;
      }
    }
    if (order) {
      sbs = std::max(sbs, *order);
    } else {
      bounded = false;
    }
    report.unit_orders.push_back({unit, order});
  }
  if (bounded) report.sbs_order = sbs;

  report.slice = is_slice(g, units, points);
  if (!report.slice.is_slice) {
    report.note = "representation formula fails";
    return report;
  }
  const auto stem = extract_stem(g, units.front()).to_stem();
  if (!stem) {
    report.note = "extracted stem is not polynomial";
    return report;
  }
  const SliceFunction f{g.domain, *stem};
  if (!equivalent(to_point_function(f).expr, g.expr)) {
    report.note = "extracted stem does not reproduce the function";
    return report;
  }
  const unsigned n = poly_order(f);
  if (n > max_order) {
    report.note = "global order exceeds the search limit";
    return report;
  }
  report.decomposition = decompose(f, n);
  report.global_order = report.decomposition->order;
  return report;
}

std::pair<SlicePlanePoly, SlicePlanePoly> per_slice_decomposition(const PointFunction& g,
                                                                  const ImaginaryUnit& unit) {
  const SlicePlanePoly p = restrict_to_slice(g, unit);
  const SlicePlanePoly f1 = dbar_slice(p, 1);
  const SlicePlanePoly d2 = dbar_slice(f1, 1);
  if (!d2.fn.is_zero()) {
    // Report the residual along the slice as a stem-shaped pair when polynomial.
    const Signature& sig = g.signature();
    StemFunction residual = StemFunction::zero(sig);
    if (d2.fn.is_polynomial()) {
      CoordPoly even(sig, 2);
      CoordPoly odd(sig, 2);
      for (const auto& [e, c] : d2.fn.numerator().terms()) {
        (e[kBeta] % 2 == 0 ? even : odd).add_term(e, c);
      }
      residual = StemFunction::make(std::move(even),
                                    odd.left_mul(-unit.value()));
    }
    throw NotPolyanalyticOfOrder(2, std::move(residual));
  }
  const Signature& sig = g.signature();
  const CoordPoly xbar = CoordPoly::variable(sig, 2, kAlpha) -
                         CoordPoly::variable(sig, 2, kBeta).left_mul(unit.value());
  SlicePlanePoly f0{p.fn - RationalFn(xbar) * f1.fn, unit};
  return {std::move(f0), f1};
}

namespace {

AlgebraElement first_unit(const Signature& sig) {
  return AlgebraElement::basis(sig, sig.coordinate_basis(1));
}

AlgebraElement second_unit(const Signature& sig) {
  return AlgebraElement::basis(sig, sig.coordinate_basis(2));
}

CoordPoly coordinate_identity(const Signature& sig) {
  const std::size_t vars = sig.coordinate_count();
  CoordPoly x(sig, vars);
  for (std::size_t h = 0; h < vars; ++h) {
    Exponents e{};
    e[h] = 1;
    x.add_term(e, AlgebraElement::basis(sig, sig.coordinate_basis(h)));
  }
  return x;
}

}  // namespace

SliceFunction identity_function(const Signature& sig, const CircularDomain& domain) {
  return {domain, StemFunction::z(sig)};
}

SliceFunction conjugate_function(const Signature& sig, const CircularDomain& domain) {
  return {domain, StemFunction::zbar(sig)};
}

PointFunction conjugation_by_unit(const Signature& sig, const CircularDomain& domain) {
  const AlgebraElement u = first_unit(sig);
  return {domain, RationalFn(coordinate_identity(sig).left_mul(-u).right_mul(u)), std::nullopt};
}

PointFunction left_unit_multiple(const Signature& sig, const CircularDomain& domain) {
  return {domain, RationalFn(coordinate_identity(sig).left_mul(first_unit(sig))), std::nullopt};
}

PointFunction axis_discontinuous(const Signature& sig, const CircularDomain& domain) {
  const std::size_t vars = sig.coordinate_count();
  const AlgebraElement one = AlgebraElement::scalar(sig, 1);
  Exponents e{};
  e[1] = 2;
  e[2] = 1;
  CoordPoly num = CoordPoly::monomial(sig, vars, e, one);
  Exponents e4{};
  e4[1] = 4;
  CoordPoly den = CoordPoly::monomial(sig, vars, e4, one);
  for (std::size_t h = 2; h < vars; ++h) {
    Exponents eh{};
    eh[h] = 2;
    den.add_term(eh, one);
  }
  return {domain, RationalFn(std::move(num), den), AlgebraElement(sig)};
}

namespace {

// I u I u for the first coordinate unit u.
AlgebraElement iuiu(const ImaginaryUnit& unit) {
  const AlgebraElement u = first_unit(unit.signature());
  return mul(mul(unit.value(), u), mul(unit.value(), u));
}

bool equals_constant(const RationalFn& fn, const AlgebraElement& c) {
  return equivalent(fn, RationalFn(CoordPoly::constant(c.signature(), fn.var_count(), c)));
}

CoordPoly plane_identity(const ImaginaryUnit& unit) {
  const Signature& sig = unit.signature();
  return CoordPoly::variable(sig, 2, kAlpha) +
         CoordPoly::variable(sig, 2, kBeta).left_mul(unit.value());
}

std::string plane_string(const RationalFn& fn) { return fn.to_string(plane_variable_names()); }

}  // namespace

std::vector<SuiteCheck> counterexample_suite(const Signature& sig, std::uint64_t seed,
                                             std::size_t unit_count) {
  const std::string v_name = sig.is_quaternion() ? "v" : "v_m";
  const auto units = sample_units(sig, Rng::derive(seed, 1), std::max<std::size_t>(unit_count, 2));
  const auto points = sample_plane_points(CircularDomain::entire(), Rng::derive(seed, 2), 4);
  const PointFunction v = conjugation_by_unit(sig);
  const ImaginaryUnit u1 = ImaginaryUnit::canonical(sig, 1);
  const ImaginaryUnit u2 = ImaginaryUnit::canonical(sig, 2);
  const AlgebraElement one = AlgebraElement::scalar(sig, 1);
  const AlgebraElement zero(sig);
  const Rational half(1, 2);
  std::vector<SuiteCheck> out;

  {
    SuiteCheck c{v_name + "-dbar", true, 0, {}};
    for (const auto& unit : units) {
      ++c.cases;
      const AlgebraElement expected = (one - iuiu(unit)) * half;
      const SlicePlanePoly d = dbar_slice(v, unit, 1);
      if (!equals_constant(d.fn, expected)) {
        c.pass = false;
        c.evidence["unit"] = unit.to_string();
        c.evidence["dbar"] = plane_string(d.fn);
        c.evidence["expected"] = expected.to_string();
        break;
      }
    }
    const bool at_u1 = equals_constant(dbar_slice(v, u1, 1).fn, zero);
    const bool at_u2 = equals_constant(dbar_slice(v, u2, 1).fn, one);
    c.evidence["at_" + u1.to_string()] = plane_string(dbar_slice(v, u1, 1).fn);
    c.evidence["at_" + u2.to_string()] = plane_string(dbar_slice(v, u2, 1).fn);
    c.pass = c.pass && at_u1 && at_u2;
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{v_name + "-order-two", true, 0, {}};
    for (const auto& unit : units) {
      ++c.cases;
      const SlicePlanePoly d = dbar_slice(v, unit, 2);
      if (!d.fn.is_zero()) {
        c.pass = false;
        c.evidence["unit"] = unit.to_string();
        c.evidence["dbar2"] = plane_string(d.fn);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{v_name + "-not-slice", false, 0, {}};
    const SliceTest t = is_slice(v, units, points);
    c.cases = t.checks;
    if (t.witness) {
      const auto& w = *t.witness;
      c.evidence["H"] = w.h.to_string();
      c.evidence["K"] = w.k.to_string();
      c.evidence["z"] = "(" + to_display_string(w.z.alpha) + ", " + to_display_string(w.z.beta) + ")";
      c.evidence["predicted"] = w.predicted.to_string();
      c.evidence["actual"] = w.actual.to_string();
      c.pass = !t.is_slice && w.h == u1 && w.k == u2;
    }
    const auto along_u1 = extract_stem(v, u1).to_stem();
    const auto along_u2 = extract_stem(v, u2).to_stem();
    const bool stems_ok = along_u1 && along_u2 && *along_u1 == StemFunction::z(sig) &&
                          *along_u2 == StemFunction::zbar(sig);
    c.evidence["stem_" + u1.to_string()] = along_u1 ? along_u1->to_string() : "not polynomial";
    c.evidence["stem_" + u2.to_string()] = along_u2 ? along_u2->to_string() : "not polynomial";
    c.pass = c.pass && stems_ok;
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{v_name + "-no-global", true, 0, {}};
    for (const auto& unit : {u1, u2}) {
      ++c.cases;
      const auto stem = extract_stem(v, unit).to_stem();
      if (!stem) continue;
      const SliceFunction f{v.domain, *stem};
      const Decomposition d = decompose(f, poly_order(f));
      const bool reproduces = equivalent(to_point_function(recompose(d)).expr, v.expr);
      c.evidence["order_" + unit.to_string()] = std::to_string(d.order);
      if (reproduces) {
        c.pass = false;
        c.evidence["reproduced_by"] = unit.to_string();
      }
    }
    const ClassificationReport r = classify(v, 4, std::span(units).first(2), points);
    c.evidence["global_order"] = r.global_order ? std::to_string(*r.global_order) : "absent";
    c.pass = c.pass && !r.global_order && r.sbs_order == 2u;
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{v_name + "-per-slice", true, 0, {}};
    for (const auto& unit : units) {
      ++c.cases;
      const auto [f0, f1] = per_slice_decomposition(v, unit);
      const AlgebraElement a = (one + iuiu(unit)) * half;
      const AlgebraElement b = (one - iuiu(unit)) * half;
      const bool ok = equivalent(f0.fn, RationalFn(plane_identity(unit).right_mul(a))) &&
                      equals_constant(f1.fn, b);
      if (!ok) {
        c.pass = false;
        c.evidence["unit"] = unit.to_string();
        c.evidence["f0"] = plane_string(f0.fn);
        c.evidence["f1"] = plane_string(f1.fn);
        break;
      }
    }
    const auto [a0, a1] = per_slice_decomposition(v, u1);
    const auto [b0, b1] = per_slice_decomposition(v, u2);
    c.evidence["f0_" + u1.to_string()] = plane_string(a0.fn);
    c.evidence["f1_" + u1.to_string()] = plane_string(a1.fn);
    c.evidence["f0_" + u2.to_string()] = plane_string(b0.fn);
    c.evidence["f1_" + u2.to_string()] = plane_string(b1.fn);
    const bool distinct = equivalent(a0.fn, RationalFn(plane_identity(u1))) &&
                          a1.fn.is_zero() && b0.fn.is_zero() && equals_constant(b1.fn, one);
    c.pass = c.pass && distinct;
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{v_name + "-product", true, 1, {}};
    const AlgebraElement u = first_unit(sig);
    const AlgebraElement w = second_unit(sig);
    const AlgebraElement p = mul(mul(-u, w), u);
    c.evidence["product"] = p.to_string();
    c.pass = p == -w;
    out.push_back(std::move(c));
  }
  {
    SuiteCheck c{"discontinuous", true, 0, {}};
    const PointFunction f = axis_discontinuous(sig);
    const std::size_t vars = sig.coordinate_count();
    auto q_point = [&](long h) {
      std::vector<Rational> q(vars, Rational(0));
      q[1] = Rational(1, h);
      q[2] = Rational(1, h * h);
      return q;
    };
    for (long h = 2; h <= 50; ++h) {
      ++c.cases;
      const auto q = q_point(h);
      if (point_eval(f, q) != AlgebraElement::scalar(sig, half)) {
        c.pass = false;
        c.evidence["h"] = std::to_string(h);
        c.evidence["value"] = point_eval(f, q).to_string();
      }
    }
    const std::vector<Rational> origin(vars, Rational(0));
    const AlgebraElement at_origin = point_eval(f, origin);
    c.evidence["f(0)"] = at_origin.to_string();
    c.evidence["f(q_3)"] = point_eval(f, q_point(3)).to_string();
    if (!at_origin.is_zero()) c.pass = false;
    const std::size_t slices = std::min<std::size_t>(32, units.size());
    for (std::size_t k = 0; k < slices; ++k) {
      ++c.cases;
      const auto& unit = units[k];
      const auto comp = unit.components();
      const SlicePlanePoly r = restrict_to_slice(f, unit);
      // beta i1^2 i2 / (beta^2 i1^4 + i2^2 + .. + in^2)
      Exponents eb{};
      eb[kBeta] = 1;
      Exponents eb2{};
      eb2[kBeta] = 2;
      const CoordPoly num =
          CoordPoly::monomial(sig, 2, eb, AlgebraElement::scalar(sig, comp[0] * comp[0] * comp[1]));
      Rational rest = 0;
      for (std::size_t h = 1; h < comp.size(); ++h) rest += comp[h] * comp[h];
      CoordPoly den = CoordPoly::monomial(
          sig, 2, eb2, AlgebraElement::scalar(sig, comp[0] * comp[0] * comp[0] * comp[0]));
      den += CoordPoly::scalar(sig, 2, rest);
      const bool matches = equivalent(r.fn, RationalFn(num, den));
      const bool bounded = sgn(comp[1]) == 0 || sgn(rest) > 0;
      if (!matches || !bounded) {
        c.pass = false;
        c.evidence["unit"] = unit.to_string();
        c.evidence["restriction"] = plane_string(r.fn);
        break;
      }
    }
    out.push_back(std::move(c));
  }
  {
    const std::string name = sig.is_quaternion() ? "v_r" : "v_r_m";
    SuiteCheck c{name, true, 0, {}};
    const PointFunction vr = left_unit_multiple(sig);
    for (const auto& unit : units) {
      ++c.cases;
      if (!dbar_slice(vr, unit, 2).fn.is_zero()) {
        c.pass = false;
        c.evidence["unit"] = unit.to_string();
        break;
      }
    }
    const SliceTest t = is_slice(vr, units, points);
    c.evidence["is_slice"] = t.is_slice ? "true" : "false";
    if (t.witness) {
      c.evidence["H"] = t.witness->h.to_string();
      c.evidence["K"] = t.witness->k.to_string();
    }
    c.pass = c.pass && !t.is_slice;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace slicecalc
