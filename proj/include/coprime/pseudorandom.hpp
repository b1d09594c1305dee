#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coprime/common.hpp"
#include "coprime/metrics.hpp"
#include "coprime/network.hpp"
#include "coprime/sieve.hpp"
#include "coprime/spectral.hpp"

namespace coprime {

// Pair convention for every codegree sum in this module: ordered pairs
// (x, y) in V x V including x = y, with codeg(x, x) = deg(x) (the diagonal
// of A^2). This is the convention under which both displayed identities
//   sum codeg(x,y)   = sum deg(i)^2
//   sum codeg(x,y)^2 = Tr(A^4)
// hold exactly; the small-n oracle in the test suite pins it against the
// unordered-distinct alternative, which satisfies neither.
inline constexpr const char* kPairConvention =
    "ordered pairs including x=y; codeg(x,x)=deg(x)";

struct WprReport {
  std::int64_t n = 0;
  std::int64_t num_nodes = 0;
  double p = kCoprimeDensity;
  double codeg_deviation_sum = 0.0;  // sum |codeg(x,y) - p^2 N|
  double normalized = 0.0;           // deviation / N^3
  double lambda1_ratio = 0.0;        // lambda1 / (N p); 0 if not computed
  std::int64_t max_cycle_len_estimate = 0;
  double r_over_log_n = 0.0;
};

// Default ceiling for the O(N^3/64) pair loop.
inline constexpr std::int64_t kDefaultMaxPairLoopNodes = 20000;

// Codegree histogram over ordered pairs (diagonal included). Codegrees are
// exact integers <= N, so the deviation sum reduces to at most N+1 terms of
// count * |c - p^2 N|, accumulated in ascending codegree order with
// compensated summation.
template <BitAdjacencyGraph G>
std::vector<std::int64_t> codegree_histogram(
    const G& g, std::int64_t max_nodes = kDefaultMaxPairLoopNodes) {
  const std::int64_t N = g.num_nodes();
  if (N > max_nodes)
    throw resource_cap_error("codegree_histogram: N=" + std::to_string(N) +
                             " above configured pair-loop cap");
  std::vector<std::int64_t> hist(static_cast<std::size_t>(N) + 1, 0);
  for (std::int64_t u = 0; u < N; ++u) {
    const auto row_u = g.row(u);
    for (std::int64_t v = u + 1; v < N; ++v)
      hist[BitMatrix::and_popcount(row_u, g.row(v))] += 2;
    hist[g.degree(u)] += 1;  // diagonal: codeg(u,u) = deg(u)
  }
  return hist;
}

template <BitAdjacencyGraph G>
WprReport codegree_deviation(const G& g,
                             std::int64_t max_nodes = kDefaultMaxPairLoopNodes) {
  WprReport rep;
  rep.num_nodes = g.num_nodes();
  const double N = static_cast<double>(rep.num_nodes);
  const double target = rep.p * rep.p * N;
  const auto hist = codegree_histogram(g, max_nodes);
  double sum = 0.0, comp = 0.0;  // Kahan
  for (std::size_t c = 0; c < hist.size(); ++c) {
    if (hist[c] == 0) continue;
    const double term = static_cast<double>(hist[c]) *
                        std::abs(static_cast<double>(c) - target);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  rep.codeg_deviation_sum = sum;
  rep.normalized = (rep.num_nodes > 0) ? sum / (N * N * N) : 0.0;
  return rep;
}

// Linear codegree sum under the same convention; equals sum deg(i)^2.
template <BitAdjacencyGraph G>
std::int64_t sum_codegree(const G& g,
                          std::int64_t max_nodes = kDefaultMaxPairLoopNodes) {
  const auto hist = codegree_histogram(g, max_nodes);
  std::int64_t s = 0;
  for (std::size_t c = 0; c < hist.size(); ++c)
    s += static_cast<std::int64_t>(c) * hist[c];
  return s;
}

// lambda1 / (N * 6/pi^2); the weak pseudo-randomness prediction is that
// this approaches 1.
template <BitAdjacencyGraph G>
double wpr_lambda1_check(const G& g, const SpectralOptions& opts = {}) {
  const auto res = adjacency_lambda1(g, opts);
  return res.value / (static_cast<double>(g.num_nodes()) * kCoprimeDensity);
}

struct CycleThreshold {
  std::int64_t r = 3;
  double r_over_log_n = 0.0;
};

// Largest r with N(n) * p * (1-p)^((r-3)/2) >= 1, i.e. the algebraic
// inversion r = 3 + 2 ln(Np) / ln(1/(1-p)), floored; r = 3 is the floor
// guard when even the base case fails (Np < 1).
inline CycleThreshold cycle_length_threshold(std::int64_t n,
                                             const SieveTable& sieve) {
  CycleThreshold t;
  const double N = static_cast<double>(node_count_formula(n, sieve));
  const double p = kCoprimeDensity;
  const double np = N * p;
  if (np >= 1.0) {
    const double x = 2.0 * std::log(np) / std::log(1.0 / (1.0 - p));
    std::int64_t r = 3 + static_cast<std::int64_t>(std::floor(x));
    // guard against floating roundoff at the boundary
    auto holds = [&](std::int64_t rr) {
      return np * std::pow(1.0 - p, static_cast<double>(rr - 3) / 2.0) >= 1.0;
    };
    while (r > 3 && !holds(r)) --r;
    while (holds(r + 1)) ++r;
    t.r = r;
  }
  t.r_over_log_n = static_cast<double>(t.r) / std::log(static_cast<double>(n));
  return t;
}

// Full report for one network bound.
inline WprReport wpr_report(const CoprimeNetwork& net, const SieveTable& sieve,
                            const SpectralOptions& opts = {},
                            std::int64_t max_nodes = kDefaultMaxPairLoopNodes) {
  WprReport rep = codegree_deviation(net, max_nodes);
  rep.n = net.n;
  rep.lambda1_ratio = wpr_lambda1_check(net, opts);
  const auto thr = cycle_length_threshold(net.n, sieve);
  rep.max_cycle_len_estimate = thr.r;
  rep.r_over_log_n = thr.r_over_log_n;
  return rep;
}

}  // namespace coprime
