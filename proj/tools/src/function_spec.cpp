#include "slicecalc_cli/function_spec.hpp"

#include <fstream>
#include <sstream>

namespace slicecalc::cli {

using nlohmann::json;

const Signature& FunctionSpec::signature() const {
  return std::visit([](const auto& f) -> const Signature& { return f.signature(); }, function);
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
      return make_rational(j[0].get<long>(), j[1].get<long>());
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(std::string("bad rational: ") + e.what());
  }
  throw SpecError("expected a rational (\"p/q\", integer or [p, q]), got " + j.dump());
}

Signature signature_from_json(const json& j) {
  std::string kind;
  long m = 0;
  if (j.is_string()) {
    kind = j.get<std::string>();
    const auto open = kind.find('(');
    if (open != std::string::npos && kind.back() == ')') {
      try {
        m = std::stol(kind.substr(open + 1, kind.size() - open - 2));
      } catch (const std::exception&) {
        throw SpecError("bad signature '" + kind + "'");
      }
      kind = kind.substr(0, open);
    }
  } else if (j.is_object() && j.contains("kind") && j["kind"].is_string()) {
    kind = j["kind"].get<std::string>();
    if (j.contains("m")) {
      if (!j["m"].is_number_integer()) throw SpecError("signature m must be an integer");
      m = j["m"].get<long>();
    }
  } else {
    throw SpecError("signature must be \"quaternion\", \"clifford(m)\" or an object with kind");
  }
  if (kind == "quaternion") return Signature::quaternion();
  if (kind == "clifford") {
    if (m < 2 || m > 16) throw SpecError("clifford signature needs 2 <= m <= 16");
    return Signature::clifford(static_cast<unsigned>(m));
  }
  throw SpecError("unknown signature kind '" + kind + "'");
}

CircularDomain domain_from_json(const json& j) {
  if (!j.is_object() || !j.contains("shape") || !j["shape"].is_string()) {
    throw SpecError("domain must be an object with a shape");
  }
  const std::string shape = j["shape"].get<std::string>();
  auto field = [&](const char* key) {
    if (!j.contains(key)) throw SpecError(std::string("domain is missing ") + key);
    return rational_from_json(j[key]);
  };
  try {
    if (shape == "entire") return CircularDomain::entire();
    if (shape == "ball") return CircularDomain::ball(field("center"), field("radius"));
    if (shape == "annulus") {
      return CircularDomain::annulus(field("center"), field("r_in"), field("r_out"));
    }
  } catch (const InvalidDomain& e) {
    throw SpecError(e.what());
  }
  throw SpecError("unknown domain shape '" + shape + "'");
}

namespace {

AlgebraElement coefficient_from_json(const json& j, const Signature& sig) {
  AlgebraElement c(sig);
  if (j.is_array()) {
    if (j.size() > sig.dimension()) {
      throw SpecError("coefficient has more components than " + sig.name() + " has basis blades");
    }
    for (std::size_t k = 0; k < j.size(); ++k) c[k] = rational_from_json(j[k]);
    return c;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      bool found = false;
      for (std::size_t k = 0; k < sig.dimension(); ++k) {
        if (sig.basis_name(k) == key) {
          c[k] = rational_from_json(value);
          found = true;
          break;
        }
      }
      if (!found) throw SpecError("unknown basis blade '" + key + "' for " + sig.name());
    }
    return c;
  }
  c[0] = rational_from_json(j);
  return c;
}

}  // namespace

CoordPoly terms_from_json(const json& j, const Signature& sig, std::size_t var_count) {
  if (!j.is_array()) throw SpecError("terms must be a list");
  CoordPoly out(sig, var_count);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff")) {
      throw SpecError("each term needs exp and coeff: " + term.dump());
    }
    const auto& exp = term["exp"];
    if (!exp.is_array() || exp.size() != var_count) {
      throw SpecError("exponent vector must have " + std::to_string(var_count) + " entries: " +
                      exp.dump());
    }
    Exponents e{};
    for (std::size_t h = 0; h < var_count; ++h) {
      if (!exp[h].is_number_unsigned() || exp[h].get<unsigned long>() > 64) {
        throw SpecError("exponents must be integers in 0..64: " + exp.dump());
      }
      e[h] = static_cast<std::uint8_t>(exp[h].get<unsigned long>());
    }
    out.add_term(e, coefficient_from_json(term["coeff"], sig));
  }
  return out;
}

FunctionSpec parse_function_spec(const json& j) {
  if (!j.is_object()) throw SpecError("function spec must be a JSON object");
  if (!j.contains("signature")) throw SpecError("function spec is missing signature");
  const Signature sig = signature_from_json(j["signature"]);
  const CircularDomain domain =
      j.contains("domain") ? domain_from_json(j["domain"]) : CircularDomain::entire();
  const std::string name = j.value("name", std::string("input"));
  if (!j.contains("representation") || !j["representation"].is_string()) {
    throw SpecError("representation must be \"stem\" or \"rational\"");
  }
  const std::string rep = j["representation"].get<std::string>();
  auto list = [&](const char* key, bool required) {
    if (!j.contains(key)) {
      if (required) throw SpecError(std::string("function spec is missing ") + key);
      return json::array();
    }
    return j[key];
  };
  if (rep == "stem") {
    CoordPoly f1 = terms_from_json(list("F1", true), sig, 2);
    CoordPoly f2 = terms_from_json(list("F2", false), sig, 2);
    try {
      return {name, SliceFunction{domain, StemFunction::make(std::move(f1), std::move(f2))}};
    } catch (const ParityViolation& e) {
      throw SpecError(e.what());
    }
  }
  if (rep == "rational") {
    const std::size_t vars = sig.coordinate_count();
    CoordPoly num = terms_from_json(list("numerator", true), sig, vars);
    CoordPoly den = j.contains("denominator") ? terms_from_json(j["denominator"], sig, vars)
                                              : CoordPoly::scalar(sig, vars, 1);
    if (den.is_zero()) throw SpecError("denominator is the zero polynomial");
    if (!den.is_real()) throw SpecError("denominator coefficients must be real");
    std::optional<AlgebraElement> axis;
    if (j.contains("axis_value")) axis = coefficient_from_json(j["axis_value"], sig);
    return {name, PointFunction{domain, RationalFn(std::move(num), den), axis}};
  }
  throw SpecError("unknown representation '" + rep + "'");
}

FunctionSpec load_function_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw SpecError("'" + path + "' is not valid JSON: " + e.what());
  }
  return parse_function_spec(j);
}

Signature builtin_default_signature(const std::string& name) {
  return name == "v_m" ? Signature::clifford(3) : Signature::quaternion();
}

FunctionSpec builtin_function(const std::string& name, const Signature& sig) {
  if (name == "x") return {name, identity_function(sig)};
  if (name == "xbar") return {name, conjugate_function(sig)};
  if (name == "v" || name == "v_m") return {name, conjugation_by_unit(sig)};
  if (name == "v_r") return {name, left_unit_multiple(sig)};
  if (name == "discontinuous") return {name, axis_discontinuous(sig)};
  throw SpecError("unknown builtin '" + name + "' (expected v, v_r, v_m, discontinuous, x, xbar)");
}

PointFunction as_point_function(const FunctionSpec& spec) {
  if (const auto* f = std::get_if<SliceFunction>(&spec.function)) return to_point_function(*f);
  return std::get<PointFunction>(spec.function);
}

}  // namespace slicecalc::cli
