#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "coprime/bitset.hpp"
#include "coprime/network.hpp"
#include "coprime/prng.hpp"

namespace coprime {

enum class GraphFamily { kCoprime, kEr, kBa };

inline const char* family_name(GraphFamily f) {
  switch (f) {
    case GraphFamily::kCoprime: return "coprime";
    case GraphFamily::kEr: return "er";
    case GraphFamily::kBa: return "ba";
  }
  return "?";
}

// Seeded comparison graph with the same bitset-row layout as the coprime
// network, so every analytic routine applies unchanged.
struct RandomGraph {
  std::int64_t N = 0;
  std::int64_t target_edges = 0;
  std::int64_t achieved_edges = 0;
  BitMatrix adj;
  std::vector<std::int64_t> degrees;
  GraphFamily family = GraphFamily::kEr;
  std::uint64_t seed = 0;

  std::int64_t num_nodes() const { return N; }
  std::int64_t degree(std::int64_t u) const { return degrees[u]; }
  std::span<const std::uint64_t> row(std::int64_t u) const {
    return adj.row(u);
  }
};

namespace detail {

// Unordered pair u > v encoded as u(u-1)/2 + v; decode.
inline void decode_pair(std::int64_t idx, std::int64_t& u, std::int64_t& v) {
  u = static_cast<std::int64_t>(
      (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (u * (u - 1) / 2 > idx) --u;
  while ((u + 1) * u / 2 <= idx) ++u;
  v = idx - u * (u - 1) / 2;
}

}  // namespace detail

// Uniform G(N, M): exactly M distinct unordered pairs, sampled without
// replacement by Floyd's algorithm over pair indices.
inline RandomGraph gen_er(std::int64_t N, std::int64_t M, std::uint64_t seed) {
  if (N < 1) throw std::domain_error("gen_er: N must be >= 1");
  const std::int64_t total = N * (N - 1) / 2;
  if (M < 0 || M > total)
    throw std::domain_error("gen_er: M outside [0, C(N,2)]");
  RandomGraph g;
  g.N = N;
  g.target_edges = M;
  g.family = GraphFamily::kEr;
  g.seed = seed;
  g.adj = BitMatrix(N, N);
  g.degrees.assign(N, 0);

  Xoshiro256StarStar rng(seed);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(M) * 2);
  for (std::int64_t j = total - M; j < total; ++j) {
    std::int64_t t = static_cast<std::int64_t>(
        rng.next_below(static_cast<std::uint64_t>(j + 1)));
    if (!chosen.insert(t).second) {
      t = j;
      chosen.insert(t);
    }
    std::int64_t u, v;
    detail::decode_pair(t, u, v);
    g.adj.set(u, v);
    g.adj.set(v, u);
    ++g.degrees[u];
    ++g.degrees[v];
    ++g.achieved_edges;
  }
  return g;
}

namespace detail {

// Fenwick tree over node weights; supports prefix search for weighted
// sampling without replacement.
class FenwickSampler {
 public:
  explicit FenwickSampler(std::int64_t n) : n_(n), tree_(n + 1, 0) {}

  void add(std::int64_t i, std::int64_t delta) {
    for (++i; i <= n_; i += i & -i) tree_[i] += delta;
  }

  // Smallest 0-based index i with prefix_sum(i) > target, target in
  // [0, total weight).
  std::int64_t find(std::int64_t target) const {
    std::int64_t pos = 0;
    std::int64_t bit = 1;
    while (bit * 2 <= n_) bit *= 2;
    for (; bit > 0; bit /= 2) {
      if (pos + bit <= n_ && tree_[pos + bit] <= target) {
        pos += bit;
        target -= tree_[pos];
      }
    }
    return pos;
  }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> tree_;
};

}  // namespace detail

// Barabasi-Albert preferential attachment: seed clique on m+1 nodes, then
// each arriving node attaches to m distinct existing nodes drawn in
// succession with probability proportional to current degree (weights of
// already-chosen targets removed for the remaining draws of that arrival).
inline RandomGraph gen_ba(std::int64_t N, std::int64_t m, std::uint64_t seed) {
  if (m < 1 || m >= N)
    throw std::domain_error("gen_ba: requires 1 <= m < N");
  const std::int64_t m0 = m + 1;  // seed clique size
  RandomGraph g;
  g.N = N;
  g.family = GraphFamily::kBa;
  g.seed = seed;
  g.adj = BitMatrix(N, N);
  g.degrees.assign(N, 0);

  for (std::int64_t u = 0; u < m0; ++u)
    for (std::int64_t v = u + 1; v < m0; ++v) {
      g.adj.set(u, v);
      g.adj.set(v, u);
      ++g.degrees[u];
      ++g.degrees[v];
      ++g.achieved_edges;
    }

  Xoshiro256StarStar rng(seed);
  detail::FenwickSampler weights(N);
  std::int64_t weight_total = 0;
  for (std::int64_t u = 0; u < m0; ++u) {
    weights.add(u, g.degrees[u]);
    weight_total += g.degrees[u];
  }

  std::vector<std::int64_t> targets;
  targets.reserve(m);
  for (std::int64_t t = m0; t < N; ++t) {
    targets.clear();
    std::int64_t removed = 0;
    for (std::int64_t j = 0; j < m; ++j) {
      const std::int64_t pick = weights.find(static_cast<std::int64_t>(
          rng.next_below(static_cast<std::uint64_t>(weight_total - removed))));
      targets.push_back(pick);
      removed += g.degrees[pick];
      weights.add(pick, -g.degrees[pick]);  // without replacement
    }
    for (std::int64_t pick : targets) {
      weights.add(pick, g.degrees[pick]);  // restore, then bump
      g.adj.set(t, pick);
      g.adj.set(pick, t);
      ++g.degrees[pick];
      ++g.degrees[t];
      ++g.achieved_edges;
      weights.add(pick, 1);
      ++weight_total;
    }
    weights.add(t, g.degrees[t]);
    weight_total += g.degrees[t];
  }
  g.target_edges = g.achieved_edges;
  return g;
}

// Number of edges a BA run with parameters (N, m) always produces.
inline std::int64_t ba_edge_count(std::int64_t N, std::int64_t m) {
  const std::int64_t m0 = m + 1;
  return m0 * (m0 - 1) / 2 + m * (N - m0);
}

struct ErParams {
  std::int64_t N = 0;
  std::int64_t M = 0;
};
struct BaParams {
  std::int64_t N = 0;
  std::int64_t m = 0;
  std::int64_t achieved_edges = 0;  // edges the BA construction will produce
  std::int64_t target_edges = 0;
};
struct MatchedParams {
  ErParams er;
  BaParams ba;
};

// Comparator parameters matched to a coprime network: ER gets (N, E)
// exactly; BA gets m = round(E/N) and the achieved count is reported next
// to the target since pure BA cannot match E exactly.
inline MatchedParams match_parameters(const CoprimeNetwork& net) {
  const std::int64_t N = net.num_nodes();
  const std::int64_t E = net.edge_count;
  if (N < 2)
    throw std::domain_error("match_parameters: need at least 2 nodes");
  MatchedParams p;
  p.er = {N, E};
  std::int64_t m = (2 * E + N) / (2 * N);  // round(E/N)
  if (m < 1) m = 1;
  if (m >= N) m = N - 1;
  p.ba = {N, m, ba_edge_count(N, m), E};
  return p;
}

}  // namespace coprime
