#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "slicecalc/verify.hpp"

using namespace slicecalc;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

CampaignConfig base_config() {
  CampaignConfig c;
  c.seed = 7;
  return c;
}

Outcome summarize(const std::vector<CheckResult>& results,
                  const std::function<bool(const CheckResult&)>& keep = nullptr) {
  std::size_t checks = 0;
  std::size_t cases = 0;
  std::string failed;
  for (const auto& r : results) {
    if (keep && !keep(r)) continue;
    ++checks;
    cases += r.cases;
    if (!r.pass) failed += (failed.empty() ? "" : ",") + r.id;
  }
  if (checks == 0) return {false, "no checks ran"};
  std::ostringstream s;
  s << checks << " checks, " << cases << " cases";
  if (!failed.empty()) s << ", failed: " << failed;
  return {failed.empty(), s.str()};
}

Outcome group(std::string_view name, const Signature& sig) {
  return summarize(run_group(name, sig, base_config()));
}

Outcome criteria_one_to_six(const Signature& sig) {
  std::vector<CheckResult> all;
  for (std::string_view g : {"thetabar-slice", "slice-derivative", "g-relation", "leibniz",
                             "decomposition", "counterexamples"}) {
    auto r = run_group(g, sig, base_config());
    all.insert(all.end(), r.begin(), r.end());
  }
  return summarize(all, [](const CheckResult& r) { return r.id != "discontinuous"; });
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_determinism() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto first = dir / "slicecalc_acceptance_1.json";
  const auto second = dir / "slicecalc_acceptance_2.json";
  auto run = [](const std::filesystem::path& out) {
    const std::string cmd = std::string("\"") + SLICECALC_EXE + "\" verify --seed 7 --json \"" +
                            out.string() + "\" > /dev/null";
    const int status = std::system(cmd.c_str());
    return status == 0;
  };
  const bool ok1 = run(first);
  const bool ok2 = run(second);
  const std::string a = slurp(first);
  const std::string b = slurp(second);
  std::filesystem::remove(first);
  std::filesystem::remove(second);
  if (!ok1 || !ok2) return {false, "nonzero exit code"};
  if (a.empty()) return {false, "empty report"};
  if (a != b) return {false, "reports differ"};
  return {true, std::to_string(a.size()) + " identical bytes, exit 0"};
}

}  // namespace

int main() {
  const Signature h = Signature::quaternion();
  const Signature c3 = Signature::clifford(3);
  int failures = 0;
  auto report = [&](int n, const Outcome& o) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail
              << ")" << std::endl;
    if (!o.pass) ++failures;
  };

  {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = group("thetabar-slice", h);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.2f s", seconds);
    o.detail += buf;
    if (seconds >= 60.0) {
      o.pass = false;
      o.detail += " over the 60 s budget";
    }
    report(1, o);
  }
  report(2, group("slice-derivative", h));
  report(3, group("g-relation", h));
  report(4, group("leibniz", h));
  report(5, group("decomposition", h));

  const auto counterexamples = run_group("counterexamples", h, base_config());
  report(6, summarize(counterexamples, [](const CheckResult& r) { return r.id != "discontinuous"; }));
  report(7, summarize(counterexamples, [](const CheckResult& r) { return r.id == "discontinuous"; }));
  report(8, group("taylor", h));
  report(9, criteria_one_to_six(c3));
  {
    auto all = run_group("oracle", h, base_config());
    const auto more = run_group("oracle", c3, base_config());
    all.insert(all.end(), more.begin(), more.end());
    report(10, summarize(all));
  }
  report(11, cli_determinism());

  return failures == 0 ? 0 : 1;
}
