#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coprime {

// One named sub-check inside a claim verification.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;  // measured value(s); for failures, the numeric excess
};

// Outcome of verifying one claim (theorem, lemma, or derived property).
struct VerificationReport {
  std::string claim;             // "T1".."T8", "L1".."L9", "WPR", "SYNC"
  std::string tested_range;
  std::string convention_notes;  // empirically pinned conventions, if any
  bool pass = false;
  std::vector<std::string> counterexamples;  // capped; empty when pass
  std::vector<CheckLine> checks;
  double elapsed_seconds = 0.0;

  static constexpr std::size_t kCounterexampleCap = 10;

  void add_check(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok, detail});
  }
  void add_counterexample(const std::string& ce) {
    if (counterexamples.size() < kCounterexampleCap)
      counterexamples.push_back(ce);
  }
  void finalize() {
    pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
  }
};

}  // namespace coprime
