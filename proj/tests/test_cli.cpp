#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "slicecalc_cli/commands.hpp"
#include "slicecalc_cli/function_spec.hpp"

using namespace slicecalc;
using namespace slicecalc::cli;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "slicecalc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SLICECALC_TEST_DATA) + "/" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class SeedVariable {
 public:
  explicit SeedVariable(const char* value) {
    if (value) {
      setenv("SLICECALC_SEED", value, 1);
    } else {
      unsetenv("SLICECALC_SEED");
    }
  }
  ~SeedVariable() { unsetenv("SLICECALC_SEED"); }
};

}  // namespace

TEST_CASE("rational and signature parsing") {
  CHECK(rational_from_json(json("3/6")) == make_rational(1, 2));
  CHECK(rational_from_json(json(-4)) == -4);
  CHECK(rational_from_json(json::array({2, 8})) == make_rational(1, 4));
  CHECK_THROWS_AS(rational_from_json(json(0.5)), SpecError);
  CHECK_THROWS_AS(rational_from_json(json("1/0")), SpecError);
  CHECK(signature_from_json(json("quaternion")) == Signature::quaternion());
  CHECK(signature_from_json(json("clifford(4)")) == Signature::clifford(4));
  CHECK(signature_from_json(json{{"kind", "clifford"}, {"m", 3}}) == Signature::clifford(3));
  CHECK_THROWS_AS(signature_from_json(json("clifford(1)")), SpecError);
  CHECK_THROWS_AS(signature_from_json(json("octonion")), SpecError);
}

TEST_CASE("domain parsing") {
  CHECK(domain_from_json(json{{"shape", "entire"}}) == CircularDomain::entire());
  CHECK(domain_from_json(json{{"shape", "ball"}, {"center", "1/2"}, {"radius", 3}}) ==
        CircularDomain::ball(make_rational(1, 2), 3));
  CHECK_THROWS_AS(domain_from_json(json{{"shape", "ball"}, {"center", 0}, {"radius", 0}}),
                  SpecError);
  CHECK_THROWS_AS(domain_from_json(json{{"shape", "square"}}), SpecError);
}

TEST_CASE("function spec files") {
  const auto xb = load_function_spec(data("xbar_squared.json"));
  REQUIRE(std::holds_alternative<SliceFunction>(xb.function));
  CHECK(std::get<SliceFunction>(xb.function).stem == stem_zbar_power(Signature::quaternion(), 2));

  const auto zj = load_function_spec(data("z_times_j.json"));
  const auto& f = std::get<SliceFunction>(zj.function);
  CHECK(f.stem == StemFunction::z(Signature::quaternion())
                      .right_mul(AlgebraElement::basis(Signature::quaternion(), 2)));
  CHECK(f.domain == CircularDomain::ball(0, 2));

  const auto v = as_point_function(load_function_spec(data("v.json")));
  const auto builtin = as_point_function(builtin_function("v", Signature::quaternion()));
  CHECK(equivalent(v.expr, builtin.expr));

  const auto d = load_function_spec(data("clifford_discontinuous.json"));
  CHECK(d.signature() == Signature::clifford(3));
  CHECK(as_point_function(d).axis_value.has_value());

  CHECK_THROWS_AS(load_function_spec(data("corrupted.json")), SpecError);
  CHECK_THROWS_AS(load_function_spec(data("parity_violation.json")), SpecError);
  CHECK_THROWS_AS(load_function_spec(data("missing.json")), SpecError);
  CHECK_THROWS_AS(builtin_function("nope", Signature::quaternion()), SpecError);
}

TEST_CASE("decompose command") {
  auto r = invoke({"decompose", "--builtin", "xbar", "--order", "2"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["verified"] == true);
  REQUIRE(j["decomposition"]["components"].size() == 2);
  CHECK(j["decomposition"]["components"][0]["F1"].empty());
  CHECK(j["decomposition"]["components"][1]["F1"][0]["coeff"][0] == "1/1");

  r = invoke({"decompose", "--builtin", "x", "--order", "1"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["decomposition"]["components"].size() == 1);
  CHECK(j["decomposition"]["components"][0]["text"] == "F1 = a, F2 = b");

  r = invoke({"decompose", "--input", data("xbar_squared.json"), "--order", "2"});
  CHECK(r.code == 1);
  j = json::parse(r.out);
  CHECK(j["verified"] == false);
  CHECK(j["residual"]["F1"][0]["coeff"][0] == "2/1");

  r = invoke({"decompose", "--input", data("xbar_squared.json"), "--order", "3"});
  CHECK(r.code == 0);
}

TEST_CASE("classify command") {
  auto r = invoke({"classify", "--builtin", "v"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["sbs_order"] == 2);
  CHECK(j["is_slice"] == false);
  CHECK(j["witness"]["H"] == "i");
  CHECK(j["witness"]["K"] == "j");
  CHECK(j["global_order"].is_null());

  r = invoke({"classify", "--builtin", "x"});
  j = json::parse(r.out);
  CHECK(j["sbs_order"] == 1);
  CHECK(j["is_slice"] == true);
  CHECK(j["global_order"] == 1);

  r = invoke({"classify", "--input", data("xbar_squared.json")});
  j = json::parse(r.out);
  CHECK(j["sbs_order"] == 3);
  CHECK(j["is_slice"] == true);
  CHECK(j["global_order"] == 3);

  r = invoke({"classify", "--builtin", "v_m"});
  j = json::parse(r.out);
  CHECK(j["signature"] == "clifford(3)");
  CHECK(j["is_slice"] == false);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"decompose", "--builtin", "xbar"}).code == 2);
  CHECK(invoke({"decompose", "--builtin", "xbar", "--input", data("xbar.json"), "--order", "2"}).code == 2);
  const auto corrupted = invoke({"classify", "--input", data("corrupted.json")});
  CHECK(corrupted.code == 2);
  CHECK_FALSE(corrupted.err.empty());
  CHECK(invoke({"classify", "--input", data("parity_violation.json")}).code == 2);
  CHECK(invoke({"decompose", "--builtin", "v", "--order", "2"}).code == 2);
  CHECK(invoke({"verify", "--select", "bogus"}).code == 2);
  CHECK(invoke({"verify", "--units", "0"}).code == 2);
  CHECK(invoke({"classify", "--builtin", "x", "--signature", "clifford(0)"}).code == 2);
}

TEST_CASE("verify output is deterministic") {
  const std::vector<std::string> args{"verify", "--seed", "5", "--select", "g-relation,counterexamples",
                                      "--json", "-"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  CHECK(j["seed"] == 5);
  CHECK(j["pass"] == true);
  std::set<std::string> ids;
  for (const auto& c : j["checks"]) ids.insert(c["id"].get<std::string>());
  for (const char* id : {"v-dbar", "v_m-dbar", "v_r", "v_r_m", "discontinuous", "g-relation"}) {
    CAPTURE(id);
    CHECK(ids.count(id) == 1);
  }

  const auto dir = std::filesystem::temp_directory_path();
  const auto path = (dir / "slicecalc_test_verify.json").string();
  const auto file_run = invoke({"verify", "--seed", "5", "--select", "g-relation,counterexamples",
                                "--json", path});
  CHECK(file_run.code == 0);
  CHECK(slurp(path) == a.out);
  CHECK(file_run.out.find("checks passed") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("the seed variable supplies the default seed") {
  const std::vector<std::string> args{"verify", "--select", "g-relation", "--json", "-"};
  {
    SeedVariable env("9");
    CHECK(default_seed() == 9);
    const auto r = invoke(args);
    CHECK(json::parse(r.out)["seed"] == 9);
    const auto explicit_seed = invoke({"verify", "--seed", "4", "--select", "g-relation", "--json", "-"});
    CHECK(json::parse(explicit_seed.out)["seed"] == 4);
  }
  {
    SeedVariable env(nullptr);
    CHECK(default_seed() == 0);
  }
  {
    SeedVariable env("seven");
    CHECK_THROWS_AS(default_seed(), SpecError);
    CHECK(invoke(args).code == 2);
  }
}
