#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slicecalc/algebra.hpp"

namespace slicecalc {

struct CampaignConfig {
  std::uint64_t seed = 0;
  /// Size of the unit pool each case draws from.
  std::size_t unit_samples = 64;
  /// Size of the off-axis point pool each case draws from.
  std::size_t point_samples = 128;
  unsigned max_order = 4;
  /// Group names to run; empty runs every group.
  std::vector<std::string> select;
};

struct CheckResult {
  std::string id;
  std::string group;
  std::string signature;
  std::size_t cases = 0;
  /// FNV-1a digest of the generated inputs, 16 hex digits.
  std::string digest;
  bool pass = false;
  /// Inputs and values of the first failing case.
  std::map<std::string, std::string> witness;
  /// Values the check reports whether or not it passes.
  std::map<std::string, std::string> evidence;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// FNV-1a 64 over everything fed to it, each add() terminated by a 0xff byte.
class Digest {
 public:
  void add(std::string_view text);
  std::string hex() const;

 private:
  std::uint64_t state_ = 14695981039346656037ULL;
};

/// Group names in run order.
std::span<const std::string_view> check_groups();

/// Checks of one group under one signature. Throws std::invalid_argument for
/// an unknown group.
std::vector<CheckResult> run_group(std::string_view group, const Signature& sig,
                                   const CampaignConfig& config);

/// Every selected group under the quaternions and Clifford(3), ordered by
/// (group, id, signature). Throws std::invalid_argument for unknown groups
/// or zero counts.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace slicecalc
