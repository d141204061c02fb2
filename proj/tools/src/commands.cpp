#include "slicecalc_cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>

#include "slicecalc/random.hpp"
#include "slicecalc_cli/report_json.hpp"

namespace slicecalc::cli {

using nlohmann::json;

std::uint64_t default_seed() {
  const char* env = std::getenv("SLICECALC_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string text(env);
  if (text.find_first_not_of("0123456789") != std::string::npos || text.size() > 20) {
    throw SpecError("SLICECALC_SEED must be a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw SpecError("SLICECALC_SEED is out of range: '" + text + "'");
  }
}

int cmd_verify(const CampaignConfig& config, const std::optional<std::string>& json_path,
               std::ostream& out) {
  const CampaignReport report = run_campaign(config);
  const std::string text = to_json(report).dump(2) + "\n";
  if (json_path && *json_path == "-") {
    out << text;
  } else {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.id << " [" << c.signature << "] cases=" << c.cases
          << "\n";
      if (!c.pass) {
        ++failed;
        for (const auto& [k, v] : c.witness) out << "    " << k << ": " << v << "\n";
      }
    }
    if (failed == 0) {
      out << "all " << report.checks.size() << " checks passed\n";
    } else {
      out << failed << " of " << report.checks.size() << " checks failed\n";
    }
    if (json_path) {
      std::ofstream file(*json_path, std::ios::binary);
      if (!file) throw SpecError("cannot write '" + *json_path + "'");
      file << text;
    }
  }
  return report.all_pass() ? kExitPass : kExitFailure;
}

int cmd_decompose(const FunctionSpec& spec, unsigned order, std::ostream& out, std::ostream& err) {
  const auto* f = std::get_if<SliceFunction>(&spec.function);
  if (f == nullptr) throw SpecError("decompose needs a stem representation");
  if (order == 0) throw SpecError("--order must be at least 1");
  json report{{"command", "decompose"},
              {"function", spec.name},
              {"signature", f->signature().name()},
              {"requested_order", order}};
  try {
    const Decomposition d = decompose(*f, order);
    report["decomposition"] = to_json(d);
    const bool verified = recompose(d).stem == f->stem;
    report["verified"] = verified;
    out << report.dump(2) << "\n";
    return verified ? kExitPass : kExitFailure;
  } catch (const NotPolyanalyticOfOrder& e) {
    report["error"] = "not polyanalytic of order " + std::to_string(e.order());
    report["residual"] = to_json(e.residual());
    report["verified"] = false;
    out << report.dump(2) << "\n";
    err << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_classify(const FunctionSpec& spec, const ClassifyOptions& options, std::ostream& out) {
  if (options.units == 0 || options.points == 0 || options.max_order == 0) {
    throw SpecError("classify sample counts and --max-order must be at least 1");
  }
  const PointFunction g = as_point_function(spec);
  const auto units = sample_units(g.signature(), Rng::derive(options.seed, 1), options.units);
  const auto points = sample_plane_points(g.domain, Rng::derive(options.seed, 2), options.points);
  const ClassificationReport r = classify(g, options.max_order, units, points);
  json report = to_json(r);
  report["command"] = "classify";
  report["function"] = spec.name;
  report["signature"] = g.signature().name();
  report["seed"] = options.seed;
  out << report.dump(2) << "\n";
  return kExitPass;
}

namespace {

FunctionSpec resolve_input(const std::string& input, const std::string& builtin,
                           const std::string& signature) {
  if (input.empty() == builtin.empty()) {
    throw SpecError("give exactly one of --input FILE or --builtin NAME");
  }
  if (!input.empty()) {
    if (!signature.empty()) throw SpecError("--signature applies to --builtin only");
    return load_function_spec(input);
  }
  const Signature sig =
      signature.empty() ? builtin_default_signature(builtin) : signature_from_json(json(signature));
  return builtin_function(builtin, sig);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slice-function algebra over the quaternions and Clifford algebras",
               "slicecalc"};
  app.require_subcommand(1);

  CampaignConfig config;
  std::optional<std::uint64_t> verify_seed;
  std::optional<std::string> json_path;
  auto* verify = app.add_subcommand("verify", "Run the identity and counterexample checks");
  verify->add_option("--seed", verify_seed, "Campaign seed (default: SLICECALC_SEED or 0)");
  verify->add_option("--units", config.unit_samples, "Size of the imaginary-unit pool")
      ->check(CLI::PositiveNumber);
  verify->add_option("--points", config.point_samples, "Size of the point pool")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-order", config.max_order, "Largest decomposition order")
      ->check(CLI::PositiveNumber);
  verify->add_option("--select", config.select, "Comma-separated check groups")->delimiter(',');
  verify->add_option("--json", json_path, "Write the JSON report here ('-' for stdout)");

  std::string input, builtin, signature;
  unsigned order = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split a stem into slice regular parts");
  decompose_cmd->add_option("--input", input, "FunctionSpec JSON file");
  decompose_cmd->add_option("--builtin", builtin, "Named function");
  decompose_cmd->add_option("--signature", signature, "Signature for --builtin");
  decompose_cmd->add_option("--order", order, "Order n of the decomposition")->required();

  ClassifyOptions classify_options;
  std::optional<std::uint64_t> classify_seed;
  auto* classify_cmd = app.add_subcommand("classify", "Report orders and slice-ness");
  classify_cmd->add_option("--input", input, "FunctionSpec JSON file");
  classify_cmd->add_option("--builtin", builtin, "Named function");
  classify_cmd->add_option("--signature", signature, "Signature for --builtin");
  classify_cmd->add_option("--seed", classify_seed, "Sampling seed");
  classify_cmd->add_option("--units", classify_options.units, "Sampled units")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--points", classify_options.points, "Sampled points per slice pair")
      ->check(CLI::PositiveNumber);
  classify_cmd->add_option("--max-order", classify_options.max_order, "Order search limit")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      config.seed = verify_seed ? *verify_seed : default_seed();
      return cmd_verify(config, json_path, out);
    }
    if (decompose_cmd->parsed()) {
      return cmd_decompose(resolve_input(input, builtin, signature), order, out, err);
    }
    classify_options.seed = classify_seed ? *classify_seed : default_seed();
    return cmd_classify(resolve_input(input, builtin, signature), classify_options, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace slicecalc::cli
