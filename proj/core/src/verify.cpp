#include "slicecalc/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

#include "slicecalc/generators.hpp"
#include "slicecalc/operators.hpp"
#include "slicecalc/polyanalytic.hpp"

namespace slicecalc {

bool CampaignReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Digest::add(std::string_view text) {
  for (unsigned char ch : text) {
    state_ ^= ch;
    state_ *= 1099511628211ULL;
  }
  state_ ^= 0xff;
  state_ *= 1099511628211ULL;
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

namespace {

constexpr std::array<std::string_view, 10> kGroups{
    "thetabar-slice", "slice-derivative", "g-relation", "leibniz",  "representation",
    "regularity",     "decomposition",    "taylor",     "counterexamples", "oracle"};

constexpr std::size_t kCases = 100;
constexpr std::size_t kTaylorCases = 50;
constexpr std::size_t kOracleCases = 20;
constexpr std::size_t kCaseUnits = 16;
constexpr std::size_t kCasePoints = 8;

std::uint64_t label(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string point_string(const PlanePoint& z) {
  return "(" + to_fraction_string(z.alpha) + ", " + to_fraction_string(z.beta) + ")";
}

std::string coords_string(std::span<const Rational> x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? ", " : "") + to_fraction_string(x[k]);
  return out + ")";
}

// Shared state of one check: the seeded pools and the result under construction.
class Check {
 public:
  Check(std::string id, std::string_view group, const Signature& sig, const CampaignConfig& config)
      : sig_(sig), config_(config) {
    result_.id = std::move(id);
    result_.group = group;
    result_.signature = sig.name();
    result_.pass = true;
    base_ = Rng::derive(Rng::derive(config.seed, label(result_.id)), label(sig.name()));
    digest_.add(result_.id);
    digest_.add(sig.name());
    digest_.add(std::to_string(config.seed));
  }

  const Signature& sig() const { return sig_; }
  Rng case_rng(std::size_t k) const { return Rng(Rng::derive(base_, k)); }

  const std::vector<ImaginaryUnit>& unit_pool() {
    if (units_.empty()) units_ = sample_units(sig_, Rng::derive(base_, label("units")),
                                              config_.unit_samples);
    return units_;
  }
  const std::vector<PlanePoint>& point_pool(const CircularDomain& domain) {
    if (points_.empty()) {
      points_ = sample_plane_points(domain, Rng::derive(base_, label("points")),
                                    config_.point_samples);
    }
    return points_;
  }
  std::vector<ImaginaryUnit> units(Rng& rng, std::size_t count = kCaseUnits) {
    return choose(unit_pool(), count, rng);
  }
  std::vector<PlanePoint> points(Rng& rng, std::size_t count = kCasePoints,
                                 const CircularDomain& domain = CircularDomain::entire()) {
    return choose(point_pool(domain), count, rng);
  }

  void input(std::string_view text) { digest_.add(text); }
  void count(std::size_t n = 1) { result_.cases += n; }
  bool failed() const { return !result_.pass; }
  void fail(std::map<std::string, std::string> witness) {
    if (!result_.pass) return;
    result_.pass = false;
    result_.witness = std::move(witness);
  }
  void evidence(const std::string& key, std::string value) {
    result_.evidence[key] = std::move(value);
  }

  CheckResult finish() {
    result_.digest = digest_.hex();
    return std::move(result_);
  }

 private:
  Signature sig_;
  const CampaignConfig& config_;
  CheckResult result_;
  Digest digest_;
  std::uint64_t base_ = 0;
  std::vector<ImaginaryUnit> units_;
  std::vector<PlanePoint> points_;
};

PointFunction random_point_function(const Signature& sig, Rng& rng) {
  return {CircularDomain::entire(), RationalFn(random_coordinate_poly(sig, rng)), std::nullopt};
}

std::string fn_string(const RationalFn& f) { return f.to_string(); }
std::string plane_string(const RationalFn& f) { return f.to_string(plane_variable_names()); }

// conj(x_I) = alpha - I beta in the slice-plane variables.
CoordPoly plane_conjugate(const ImaginaryUnit& unit) {
  const Signature& sig = unit.signature();
  return CoordPoly::variable(sig, 2, kAlpha) - CoordPoly::variable(sig, 2, kBeta).left_mul(unit.value());
}

std::vector<CheckResult> thetabar_slice(std::string_view group, const Signature& sig,
                                        const CampaignConfig& config) {
  Check check("thetabar-slice", group, sig, config);
  for (std::size_t c = 0; c < kCases && !check.failed(); ++c) {
    Rng rng = check.case_rng(c);
    const PointFunction g = random_point_function(sig, rng);
    check.input(fn_string(g.expr));
    const auto powers = thetabar_powers(g, 3);
    for (const auto& unit : check.units(rng)) {
      check.input(unit.to_string());
      const auto points = check.points(rng);
      SlicePlanePoly d = restrict_to_slice(g, unit);
      for (unsigned n = 1; n <= 3; ++n) {
        d = dbar_slice(d, 1);
        for (const auto& z : points) {
          check.count();
          const auto x = slice_point(unit, z);
          const AlgebraElement lhs = powers[n - 1].expr.eval(x);
          const AlgebraElement rhs = d.eval(z);
          if (!(lhs == rhs)) {
            check.fail({{"g", fn_string(g.expr)},
                        {"unit", unit.to_string()},
                        {"n", std::to_string(n)},
                        {"z", point_string(z)},
                        {"thetabar", lhs.to_string()},
                        {"dbar_slice", rhs.to_string()}});
          }
        }
      }
    }
  }
  return {check.finish()};
}

std::vector<CheckResult> slice_derivative_check(std::string_view group, const Signature& sig,
                                                const CampaignConfig& config) {
  Check check("slice-derivative", group, sig, config);
  for (std::size_t c = 0; c < kCases && !check.failed(); ++c) {
    Rng rng = check.case_rng(c);
    const SliceFunction f{CircularDomain::entire(), random_stem(sig, rng)};
    check.input(f.stem.to_string());
    const PointFunction p = to_point_function(f);
    for (const auto& unit : check.units(rng)) {
      check.input(unit.to_string());
      const SlicePlanePoly r = restrict_to_slice(p, unit);
      for (unsigned n = 1; n <= 2; ++n) {
        check.count();
        const SlicePlanePoly lhs = dbar_slice(r, n);
        const SlicePlanePoly rhs = restrict_to_slice(slice_derivative(f, n), unit);
        if (!equivalent(lhs.fn, rhs.fn)) {
          check.fail({{"stem", f.stem.to_string()},
                      {"unit", unit.to_string()},
                      {"n", std::to_string(n)},
                      {"dbar_slice", plane_string(lhs.fn)},
                      {"slice_derivative", plane_string(rhs.fn)}});
        }
      }
    }
  }
  return {check.finish()};
}

std::vector<CheckResult> g_relation(std::string_view group, const Signature& sig,
                                    const CampaignConfig& config) {
  Check check("g-relation", group, sig, config);
  const RationalFn two_s = RationalFn(imaginary_norm_sq(sig)) * Rational(2);
  for (std::size_t c = 0; c < kCases && !check.failed(); ++c) {
    Rng rng = check.case_rng(c);
    const PointFunction g = random_point_function(sig, rng);
    check.input(fn_string(g.expr));
    check.count();
    const RationalFn lhs = g_operator(g).expr;
    const RationalFn rhs = two_s * thetabar(g).expr;
    if (!equivalent(lhs, rhs)) {
      check.fail({{"g", fn_string(g.expr)}, {"G", fn_string(lhs)}, {"2s_thetabar", fn_string(rhs)}});
    }
  }
  return {check.finish()};
}

std::vector<CheckResult> leibniz(std::string_view group, const Signature& sig,
                                 const CampaignConfig& config) {
  Check slice("leibniz-slice", group, sig, config);
  Check global("leibniz-global", group, sig, config);
  const CoordPoly xbar = conjugate_variable(sig);
  for (std::size_t c = 0; c < kCases && !(slice.failed() && global.failed()); ++c) {
    Rng rng = slice.case_rng(c);
    const PointFunction g = random_point_function(sig, rng);
    slice.input(fn_string(g.expr));
    global.input(fn_string(g.expr));
    const RationalFn tg = thetabar(g).expr;
    const auto units = slice.units(rng);
    for (unsigned h = 1; h <= 3; ++h) {
      const PointFunction xg{g.domain, RationalFn(xbar.pow(h)) * g.expr, std::nullopt};
      global.count();
      const RationalFn lhs = thetabar(xg).expr;
      const RationalFn rhs = RationalFn(xbar.pow(h - 1) * Rational(h)) * g.expr +
                             RationalFn(xbar.pow(h)) * tg;
      if (!equivalent(lhs, rhs)) {
        global.fail({{"g", fn_string(g.expr)},
                     {"h", std::to_string(h)},
                     {"lhs", fn_string(lhs)},
                     {"rhs", fn_string(rhs)}});
      }
      for (const auto& unit : units) {
        slice.input(unit.to_string());
        slice.count();
        const CoordPoly xb = plane_conjugate(unit);
        const RationalFn gi = restrict_to_slice(g, unit).fn;
        const RationalFn slhs = dbar_slice(xg, unit, 1).fn;
        const RationalFn srhs = RationalFn(xb.pow(h - 1) * Rational(h)) * gi +
                                RationalFn(xb.pow(h)) * dbar_slice(g, unit, 1).fn;
        if (!equivalent(slhs, srhs)) {
          slice.fail({{"g", fn_string(g.expr)},
                      {"h", std::to_string(h)},
                      {"unit", unit.to_string()},
                      {"lhs", plane_string(slhs)},
                      {"rhs", plane_string(srhs)}});
        }
      }
    }
  }
  return {slice.finish(), global.finish()};
}

std::vector<CheckResult> representation(std::string_view group, const Signature& sig,
                                        const CampaignConfig& config) {
  Check formula("representation-formula", group, sig, config);
  Check unique("stem-uniqueness", group, sig, config);
  Check defined("well-defined", group, sig, config);
  for (std::size_t c = 0; c < kCases; ++c) {
    Rng rng = formula.case_rng(c);
    const SliceFunction f{CircularDomain::entire(), random_stem(sig, rng)};
    const PointFunction p = to_point_function(f);
    for (Check* k : {&formula, &unique, &defined}) k->input(f.stem.to_string());
    const auto units = formula.units(rng);
    const auto points = formula.points(rng);
    for (std::size_t t = 0; t < kCasePoints; ++t) {
      const auto& h = units[t % units.size()];
      const auto& k = units[(t + 1 + static_cast<std::size_t>(rng.uniform(0, 14))) % units.size()];
      const auto& z = points[t % points.size()];
      formula.count();
      const AlgebraElement predicted = representation_eval(p, h, k, z);
      const AlgebraElement actual = slice_eval_at(f, k, z);
      if (!(predicted == actual)) {
        formula.fail({{"stem", f.stem.to_string()},
                      {"H", h.to_string()},
                      {"K", k.to_string()},
                      {"z", point_string(z)},
                      {"predicted", predicted.to_string()},
                      {"actual", actual.to_string()}});
      }
    }
    for (const auto& unit : units) {
      unique.count();
      const auto stem = extract_stem(p, unit).to_stem();
      if (!stem || !(*stem == f.stem)) {
        unique.fail({{"stem", f.stem.to_string()},
                     {"unit", unit.to_string()},
                     {"extracted", stem ? stem->to_string() : "not polynomial"}});
      }
      for (const auto& z : std::span(points).first(2)) {
        defined.count();
        const AlgebraElement a = slice_eval_at(f, unit, z);
        const AlgebraElement b = slice_eval_at(f, unit.negated(), {z.alpha, -z.beta});
        const AlgebraElement x = AlgebraElement::from_coordinates(sig, slice_point(unit, z));
        const AlgebraElement via_sqrt = slice_eval(f, x);
        const AlgebraElement via_point = point_eval(p, x);
        if (!(a == b) || !(a == via_sqrt) || !(a == via_point)) {
          defined.fail({{"stem", f.stem.to_string()},
                        {"unit", unit.to_string()},
                        {"z", point_string(z)},
                        {"f(a+Ib)", a.to_string()},
                        {"f(a+(-I)(-b))", b.to_string()},
                        {"slice_eval", via_sqrt.to_string()},
                        {"point_eval", via_point.to_string()}});
        }
      }
    }
  }
  return {formula.finish(), unique.finish(), defined.finish()};
}

std::vector<CheckResult> regularity(std::string_view group, const Signature& sig,
                                    const CampaignConfig& config) {
  Check check("regularity-equivalence", group, sig, config);
  std::size_t regular = 0;
  for (std::size_t c = 0; c < kCases; ++c) {
    Rng rng = check.case_rng(c);
    const StemFunction stem = c % 2 == 0 ? random_holomorphic_stem(sig, rng) : random_stem(sig, rng);
    const SliceFunction f{CircularDomain::entire(), stem};
    check.input(stem.to_string());
    check.count();
    const PointFunction p = to_point_function(f);
    const bool by_stem = stem_dbar(stem).is_zero();
    bool by_slices = true;
    for (const auto& unit : check.units(rng)) {
      by_slices = by_slices && dbar_slice(p, unit, 1).fn.is_zero();
    }
    const bool by_thetabar = thetabar(p).expr.is_zero();
    const bool by_g = g_operator(p).expr.is_zero();
    if (by_stem) ++regular;
    if (by_stem != by_slices || by_stem != by_thetabar || by_stem != by_g) {
      auto b = [](bool v) { return std::string(v ? "true" : "false"); };
      check.fail({{"stem", stem.to_string()},
                  {"stem_dbar_zero", b(by_stem)},
                  {"dbar_slice_zero", b(by_slices)},
                  {"thetabar_zero", b(by_thetabar)},
                  {"G_zero", b(by_g)}});
    }
  }
  check.evidence("regular_cases", std::to_string(regular));
  if (regular == 0 || regular == kCases) check.fail({{"reason", "only one class sampled"}});
  return {check.finish()};
}

bool same_stems(const Decomposition& d, const std::vector<StemFunction>& stems) {
  if (d.components.size() != stems.size()) return false;
  for (std::size_t h = 0; h < stems.size(); ++h) {
    if (!(d.components[h].stem == stems[h])) return false;
  }
  return true;
}

std::vector<CheckResult> decomposition(std::string_view group, const Signature& sig,
                                       const CampaignConfig& config) {
  Check round("decomposition-round-trip", group, sig, config);
  Check kernel("decomposition-kernel", group, sig, config);
  Check iterated("decomposition-iterated-dbar", group, sig, config);
  Check converse("decomposition-converse", group, sig, config);
  const auto domain = CircularDomain::entire();
  for (std::size_t c = 0; c < kCases; ++c) {
    Rng rng = round.case_rng(c);
    const auto n = static_cast<unsigned>(rng.uniform(1, config.max_order));
    std::vector<StemFunction> stems;
    Decomposition built;
    built.order = n;
    for (unsigned h = 0; h < n; ++h) {
      stems.push_back(random_holomorphic_stem(sig, rng, 3));
      built.components.push_back({domain, stems.back()});
    }
    for (const auto& s : stems) {
      for (Check* k : {&round, &kernel, &iterated}) k->input(s.to_string());
    }
    const SliceFunction f = recompose(built);
    round.count();
    try {
      const Decomposition d = decompose(f, n);
      if (d.order != n || !same_stems(d, stems) || poly_order(f) != n) {
        round.fail({{"stem", f.stem.to_string()},
                    {"order", std::to_string(n)},
                    {"recovered_order", std::to_string(d.order)}});
      }
    } catch (const Error& e) {
      round.fail({{"stem", f.stem.to_string()}, {"error", e.what()}});
    }
    const PointFunction p = to_point_function(f);
    for (const auto& unit : round.units(rng)) {
      kernel.count();
      const SlicePlanePoly r = restrict_to_slice(p, unit);
      if (!dbar_slice(r, n).fn.is_zero()) {
        kernel.fail({{"stem", f.stem.to_string()}, {"unit", unit.to_string()}, {"n", std::to_string(n)}});
      }
      const CoordPoly xb = plane_conjugate(unit);
      SlicePlanePoly d = r;
      for (unsigned l = 1; l < n; ++l) {
        iterated.count();
        d = dbar_slice(d, 1);
        RationalFn expected(CoordPoly(sig, 2));
        for (unsigned h = l; h < n; ++h) {
          const Rational falling = factorial(h) / factorial(h - l);
          expected = expected + RationalFn(xb.pow(h - l) * falling) *
                                    restrict_to_slice(built.components[h], unit).fn;
        }
        if (!equivalent(d.fn, expected)) {
          iterated.fail({{"stem", f.stem.to_string()},
                         {"unit", unit.to_string()},
                         {"l", std::to_string(l)},
                         {"dbar_slice", plane_string(d.fn)},
                         {"expected", plane_string(expected)}});
        }
      }
    }
    const SliceFunction g{domain, random_stem(sig, rng)};
    converse.input(g.stem.to_string());
    converse.count();
    try {
      const Decomposition d = decompose(g, poly_order(g));
      if (!(recompose(d).stem == g.stem)) converse.fail({{"stem", g.stem.to_string()}});
    } catch (const Error& e) {
      converse.fail({{"stem", g.stem.to_string()}, {"error", e.what()}});
    }
  }
  return {round.finish(), kernel.finish(), iterated.finish(), converse.finish()};
}

std::vector<CheckResult> taylor(std::string_view group, const Signature& sig,
                                const CampaignConfig& config) {
  Check check("taylor-independence", group, sig, config);
  const auto domain = CircularDomain::ball(0, 2);
  for (std::size_t c = 0; c < kTaylorCases; ++c) {
    Rng rng = check.case_rng(c);
    const auto degree = static_cast<unsigned>(rng.uniform(1, 4));
    std::vector<std::pair<std::pair<unsigned, unsigned>, AlgebraElement>> terms;
    std::vector<AlgebraElement> coeffs;
    for (unsigned a = 0; a <= degree; ++a) {
      coeffs.push_back(random_element(sig, rng));
      terms.push_back({{a, 0}, coeffs.back()});
    }
    const SliceFunction f{domain, StemFunction::from_z_zbar(sig, terms)};
    check.input(f.stem.to_string());
    for (const auto& unit : check.units(rng)) {
      check.input(unit.to_string());
      RationalFn d = restrict_to_slice(f, unit).fn;
      for (unsigned h = 0; h <= degree; ++h) {
        check.count();
        const AlgebraElement a = d.eval(std::array<Rational, 2>{0, 0}) * (1 / factorial(h));
        if (!(a == coeffs[h])) {
          check.fail({{"stem", f.stem.to_string()},
                      {"unit", unit.to_string()},
                      {"h", std::to_string(h)},
                      {"coefficient", a.to_string()},
                      {"expected", coeffs[h].to_string()}});
        }
        d = d.partial(kAlpha);
      }
    }
  }
  return {check.finish()};
}

std::vector<CheckResult> counterexamples(std::string_view group, const Signature& sig,
                                         const CampaignConfig& config) {
  std::vector<CheckResult> out;
  const std::size_t units = std::max<std::size_t>(100, config.unit_samples);
  for (auto& s : counterexample_suite(sig, Rng::derive(config.seed, label(group)), units)) {
    CheckResult r;
    r.id = s.id;
    r.group = group;
    r.signature = sig.name();
    r.cases = s.cases;
    Digest digest;
    digest.add(s.id);
    digest.add(sig.name());
    digest.add(std::to_string(config.seed));
    digest.add(std::to_string(units));
    r.digest = digest.hex();
    r.pass = s.pass;
    if (s.pass) {
      r.evidence = std::move(s.evidence);
    } else {
      r.witness = std::move(s.evidence);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<double> to_doubles(const AlgebraElement& a) {
  std::vector<double> out;
  for (const auto& c : a.coefficients()) out.push_back(c.get_d());
  return out;
}

double relative_error(std::span<const double> approx, std::span<const double> exact) {
  double diff = 0.0;
  double scale = 1.0;
  for (std::size_t k = 0; k < exact.size(); ++k) {
    diff = std::max(diff, std::abs(approx[k] - exact[k]));
    scale = std::max(scale, std::abs(exact[k]));
  }
  return diff / scale;
}

std::vector<CheckResult> oracle(std::string_view group, const Signature& sig,
                                const CampaignConfig& config) {
  std::vector<CheckResult> out;
  const std::array<std::pair<const char*, OperatorKind>, 3> kinds{
      {{"oracle-thetabar", OperatorKind::Thetabar},
       {"oracle-g", OperatorKind::G},
       {"oracle-dbar-slice", OperatorKind::DbarSlice}}};
  for (const auto& [id, kind] : kinds) {
    Check check(id, group, sig, config);
    double worst = 0.0;
    for (std::size_t c = 0; c < kOracleCases; ++c) {
      Rng rng = check.case_rng(c);
      const PointFunction g = random_point_function(sig, rng);
      check.input(fn_string(g.expr));
      check.count();
      OperatorDescriptor op;
      op.kind = kind;
      std::vector<Rational> x;
      AlgebraElement exact(sig);
      if (kind == OperatorKind::DbarSlice) {
        const auto unit = check.units(rng, 1).front();
        const auto z = check.points(rng, 1).front();
        x = slice_point(unit, z);
        for (const auto& u : unit.components()) op.unit.push_back(u.get_d());
        exact = dbar_slice(g, unit, 1).eval(z);
      } else {
        x.push_back(rng.small_rational(3, 3));
        for (std::size_t h = 1; h < sig.coordinate_count(); ++h) x.push_back(rng.small_rational(3, 3));
        if (std::all_of(x.begin() + 1, x.end(), [](const Rational& r) { return sgn(r) == 0; })) {
          x[1] = 1;
        }
        const PointFunction t = kind == OperatorKind::Thetabar ? thetabar(g) : g_operator(g);
        exact = t.expr.eval(x);
      }
      check.input(coords_string(x));
      std::vector<double> xf;
      for (const auto& r : x) xf.push_back(r.get_d());
      const auto approx = finite_diff_oracle(g, xf, op);
      const auto e = to_doubles(exact);
      const double err = relative_error(approx, e);
      worst = std::max(worst, err);
      if (!(err <= 1e-6)) {
        check.fail({{"g", fn_string(g.expr)},
                    {"x", coords_string(x)},
                    {"exact", exact.to_string()},
                    {"relative_error", std::to_string(err)}});
      }
    }
    check.evidence("tolerance", "1e-6");
    check.evidence("within_tolerance", worst <= 1e-6 ? "true" : "false");
    out.push_back(check.finish());
  }
  return out;
}

}  // namespace

std::span<const std::string_view> check_groups() { return kGroups; }

std::vector<CheckResult> run_group(std::string_view group, const Signature& sig,
                                   const CampaignConfig& config) {
  if (group == "thetabar-slice") return thetabar_slice(group, sig, config);
  if (group == "slice-derivative") return slice_derivative_check(group, sig, config);
  if (group == "g-relation") return g_relation(group, sig, config);
  if (group == "leibniz") return leibniz(group, sig, config);
  if (group == "representation") return representation(group, sig, config);
  if (group == "regularity") return regularity(group, sig, config);
  if (group == "decomposition") return decomposition(group, sig, config);
  if (group == "taylor") return taylor(group, sig, config);
  if (group == "counterexamples") return counterexamples(group, sig, config);
  if (group == "oracle") return oracle(group, sig, config);
  throw std::invalid_argument("unknown check group '" + std::string(group) + "'");
}

CampaignReport run_campaign(const CampaignConfig& config) {
  if (config.unit_samples == 0 || config.point_samples == 0 || config.max_order == 0) {
    throw std::invalid_argument("sample counts and max_order must be at least 1");
  }
  std::vector<std::string_view> groups;
  if (config.select.empty()) {
    groups.assign(kGroups.begin(), kGroups.end());
  } else {
    for (const auto& s : config.select) {
      if (std::find(kGroups.begin(), kGroups.end(), s) == kGroups.end()) {
        throw std::invalid_argument("unknown check group '" + s + "'");
      }
      if (std::find(groups.begin(), groups.end(), s) == groups.end()) groups.push_back(s);
    }
  }
  CampaignReport report{config, {}};
  for (const auto& sig : {Signature::quaternion(), Signature::clifford(3)}) {
    for (const auto group : groups) {
      for (auto& r : run_group(group, sig, config)) report.checks.push_back(std::move(r));
    }
  }
  std::sort(report.checks.begin(), report.checks.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.id, a.signature) < std::tie(b.id, b.signature);
  });
  return report;
}

}  // namespace slicecalc
