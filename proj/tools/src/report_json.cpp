#include "slicecalc_cli/report_json.hpp"

namespace slicecalc::cli {

using nlohmann::json;

json to_json(const Rational& r) { return to_fraction_string(r); }

json to_json(const AlgebraElement& a) {
  json components = json::array();
  for (const auto& c : a.coefficients()) components.push_back(to_json(c));
  return {{"text", a.to_string()}, {"components", components}};
}

json terms_to_json(const CoordPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = json::array();
    for (std::size_t h = 0; h < p.var_count(); ++h) exp.push_back(unsigned{e[h]});
    json coeff = json::array();
    for (const auto& x : c.coefficients()) coeff.push_back(to_json(x));
    out.push_back({{"exp", exp}, {"coeff", coeff}});
  }
  return out;
}

json to_json(const StemFunction& f) {
  return {{"F1", terms_to_json(f.f1())}, {"F2", terms_to_json(f.f2())}, {"text", f.to_string()}};
}

json to_json(const RepresentationWitness& w) {
  return {{"H", w.h.to_string()},
          {"K", w.k.to_string()},
          {"z", json::array({to_json(w.z.alpha), to_json(w.z.beta)})},
          {"predicted", to_json(w.predicted)},
          {"actual", to_json(w.actual)}};
}

json to_json(const Decomposition& d) {
  json components = json::array();
  for (std::size_t h = 0; h < d.components.size(); ++h) {
    json c = to_json(d.components[h].stem);
    c["h"] = h;
    components.push_back(std::move(c));
  }
  return {{"order", d.order}, {"components", components}};
}

json to_json(const ClassificationReport& r) {
  json out;
  out["sbs_order"] = r.sbs_order ? json(*r.sbs_order) : json(nullptr);
  json orders = json::array();
  for (const auto& u : r.unit_orders) {
    orders.push_back({{"unit", u.unit.to_string()},
                      {"order", u.order ? json(*u.order) : json(nullptr)}});
  }
  out["unit_orders"] = orders;
  out["is_slice"] = r.slice.is_slice;
  out["slice_checks"] = r.slice.checks;
  out["witness"] = r.slice.witness ? to_json(*r.slice.witness) : json(nullptr);
  out["global_order"] = r.global_order ? json(*r.global_order) : json(nullptr);
  out["decomposition"] = r.decomposition ? to_json(*r.decomposition) : json(nullptr);
  out["note"] = r.note;
  return out;
}

json to_json(const CheckResult& c) {
  json out{{"id", c.id},
           {"group", c.group},
           {"signature", c.signature},
           {"cases", c.cases},
           {"inputs_digest", c.digest},
           {"pass", c.pass}};
  if (!c.witness.empty()) out["witness"] = c.witness;
  if (!c.evidence.empty()) out["evidence"] = c.evidence;
  return out;
}

json to_json(const CampaignReport& r) {
  json checks = json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    if (!c.pass) ++failed;
  }
  return {{"seed", r.config.seed},
          {"config",
           {{"unit_samples", r.config.unit_samples},
            {"point_samples", r.config.point_samples},
            {"max_order", r.config.max_order},
            {"select", r.config.select}}},
          {"checks", checks},
          {"summary", {{"total", r.checks.size()}, {"failed", failed}}},
          {"pass", failed == 0}};
}

}  // namespace slicecalc::cli
