// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Each underlying claim verifier runs once; criteria select their check
// lines by name. Tolerances and ranges are the VerifyOptions defaults.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "coprime/verify.hpp"

using namespace coprime;

namespace {

struct Pick {
  std::string claim;
  std::string check_substr;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<Pick> picks;
};

const CheckLine* find_check(const VerificationReport& rep,
                            const std::string& substr) {
  for (const auto& c : rep.checks)
    if (c.name.find(substr) != std::string::npos) return &c;
  return nullptr;
}

}  // namespace

int main() {
  VerifyOptions v;  // defaults carry every acceptance range and tolerance

  const std::vector<std::string> claim_ids = {"T1", "T2", "T3", "T4",
                                              "T5", "T6", "T7", "T8",
                                              "L1", "L5", "L6", "L7",
                                              "L8", "L9", "WPR", "SYNC"};
  const auto sieve = build_sieve(required_sieve_limit(claim_ids, v));

  std::map<std::string, VerificationReport> reports;
  for (const auto& id : claim_ids) {
    std::fprintf(stderr, "running %s...\n", id.c_str());
    std::fflush(stderr);
    reports[id] = verify_claim(id, v, sieve);
    std::fprintf(stderr, "  %s done in %.1fs (%s)\n", id.c_str(),
                 reports[id].elapsed_seconds,
                 reports[id].pass ? "pass" : "FAIL");
    std::fflush(stderr);
  }

  const std::vector<Criterion> criteria = {
      {1,
       "exact-formula suite on 4..1500 (node count, edge telescoping, "
       "degree and sampled codegree formulas)",
       {{"T2", "node count equals"},
        {"T3", "telescoped"},
        {"T4", "degree formula"},
        {"T4", "codegree formula"}}},
      {2,
       "no isolated node on 49..5000; node 30 isolated at n=30",
       {{"T1", "no isolated node"}, {"T1", "node 30"}}},
      {3,
       "diameter <= 3 on 49..288 and <= 2 on 289..2000 by exhaustive BFS",
       {{"T6", "diameter <= 3"}, {"T6", "diameter <= 2"}}},
      {4,
       "avg_degree/n and link density within 0.6079 +/- 0.02 at n=10^4; "
       "log-log slope within 1 +/- 0.02 on 10^2..10^4",
       {{"T4", "avg_degree/n"},
        {"T5", "link density within"},
        {"T4", "log-log slope"}}},
      {5,
       "max degree at p_r^2 with value n - floor(n/p_r) - pi(n), exact on "
       "49..2000",
       {{"T4", "max degree attained"}, {"T4", "max degree within"}}},
      {6,
       "average local clustering 0.61 +/- 0.03 at n=10^4; per-node "
       "c(k)/asymptote within 1 +/- 0.05 for omega(k) <= 2",
       {{"T8", "average local clustering"}, {"T8", "c(k)/asymptotic"}}},
      {7,
       "trace identities Tr(A^2)=2E, Tr(A^3)=6T, Tr(A^4)=sum codeg^2 exact "
       "for n <= 300; labeled 3-cycles = 6 * triangles",
       {{"T7", "Tr(A^2)"},
        {"T7", "Tr(A^3)"},
        {"T7", "Tr(A^4) = sum codeg^2"},
        {"T7", "labeled 3-cycles"}}},
      {8,
       "normalized codegree deviation strictly decreasing over "
       "{500,1000,2000,4000}; lambda1/(N p) within 1 +/- 0.05 at n=5000",
       {{"WPR", "strictly decreasing"}, {"WPR", "lambda1/(N p)"}}},
      {9,
       "sync ratio above ER and BA in every trial at n=2000; lambda2 "
       "strictly increasing over {500,1000,2000,4000}",
       {{"SYNC", "larger than both"}, {"SYNC", "strictly increasing"}}},
      {10,
       "iterative eigenvalues match the dense eigensolve to relative 1e-6 "
       "for N <= 400 (path, complete, coprime)",
       {{"SYNC", "iterative matches dense"}}},
      {11,
       "appendix lemmas: L5 identity to 10^4, L6-L8 on stated ranges with "
       "the t=6 boundary tight, L9 grid",
       {{"L5", "identity"},
        {"L6", "implication"},
        {"L7", "p1*p(t-1)"},
        {"L8", "primorial"},
        {"L8", "boundary"},
        {"L9", "(1-1/x)"}}},
      {12,
       "asymptotic residual sanity: edge-count and totient-sum residuals "
       "grow at most 2x from 10^3 to 10^4",
       {{"T3", "grows at most 2x"}, {"L1", "grows at most 2x"}}},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    bool pass = true;
    std::string details;
    for (const auto& pick : crit.picks) {
      const auto& rep = reports.at(pick.claim);
      const CheckLine* c = find_check(rep, pick.check_substr);
      if (!c) {
        pass = false;
        details += " [missing check: " + pick.check_substr + "]";
        continue;
      }
      pass = pass && c->pass;
      if (!c->detail.empty())
        details += " [" + pick.claim + " " + c->name + ": " + c->detail + "]";
      else if (!c->pass)
        details += " [" + pick.claim + " " + c->name + ": FAIL]";
    }
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s%s\n", pass ? "PASS" : "FAIL", crit.id,
                crit.title.c_str(), details.c_str());
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
