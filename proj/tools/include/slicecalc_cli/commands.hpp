#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "slicecalc/verify.hpp"
#include "slicecalc_cli/function_spec.hpp"

namespace slicecalc::cli {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Seed from SLICECALC_SEED, or 0 when unset; throws SpecError when malformed.
std::uint64_t default_seed();

/// Runs the campaign; writes a summary to out and the JSON report to
/// json_path when given ("-" means out).
int cmd_verify(const CampaignConfig& config, const std::optional<std::string>& json_path,
               std::ostream& out);

int cmd_decompose(const FunctionSpec& spec, unsigned order, std::ostream& out, std::ostream& err);

struct ClassifyOptions {
  std::uint64_t seed = 0;
  std::size_t units = 16;
  std::size_t points = 8;
  unsigned max_order = 4;
};

int cmd_classify(const FunctionSpec& spec, const ClassifyOptions& options, std::ostream& out);

/// Full command line: verify, decompose, classify.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slicecalc::cli
