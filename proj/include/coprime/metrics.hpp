#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coprime/bitset.hpp"
#include "coprime/common.hpp"
#include "coprime/network.hpp"
#include "coprime/sieve.hpp"

namespace coprime {

// Most analytics below are generic over any graph exposing bitset adjacency
// rows: num_nodes(), row(u), degree(u). Both CoprimeNetwork and the random
// comparison graphs satisfy this.
template <typename G>
concept BitAdjacencyGraph = requires(const G& g, std::int64_t u) {
  { g.num_nodes() } -> std::convertible_to<std::int64_t>;
  { g.row(u) } -> std::convertible_to<std::span<const std::uint64_t>>;
  { g.degree(u) } -> std::convertible_to<std::int64_t>;
};

struct LinkDensity {
  double value = 0.0;
  double deviation = 0.0;  // |value - 6/pi^2|
};

template <BitAdjacencyGraph G>
std::int64_t total_edges(const G& g) {
  std::int64_t s = 0;
  for (std::int64_t u = 0; u < g.num_nodes(); ++u) s += g.degree(u);
  return s / 2;
}

template <BitAdjacencyGraph G>
LinkDensity link_density(const G& g) {
  const std::int64_t N = g.num_nodes();
  if (N < 2)
    throw std::domain_error("link_density: undefined for fewer than 2 nodes");
  const double value = 2.0 * static_cast<double>(total_edges(g)) /
                       (static_cast<double>(N) * static_cast<double>(N - 1));
  return {value, std::abs(value - kCoprimeDensity)};
}

template <BitAdjacencyGraph G>
double average_degree(const G& g) {
  const std::int64_t N = g.num_nodes();
  if (N < 1) throw std::domain_error("average_degree: empty graph");
  return 2.0 * static_cast<double>(total_edges(g)) / static_cast<double>(N);
}

// ---- shortest paths ----

namespace detail {

// One BFS level: pulls every frontier node's row into visited, recording
// newly reached nodes. Returns number of new nodes.
inline std::int64_t expand_level(std::span<const std::uint64_t> row,
                                 std::vector<std::uint64_t>& visited,
                                 std::vector<std::int32_t>& next) {
  std::int64_t found = 0;
  // rows may carry spare capacity words past the logical node count; those
  // bits are always zero, so clamping to the visited length is exact
  const std::size_t nwords = std::min(row.size(), visited.size());
  for (std::size_t w = 0; w < nwords; ++w) {
    std::uint64_t fresh = row[w] & ~visited[w];
    if (!fresh) continue;
    visited[w] |= fresh;
    while (fresh) {
      next.push_back(static_cast<std::int32_t>(w * 64 + std::countr_zero(fresh)));
      fresh &= fresh - 1;
      ++found;
    }
  }
  return found;
}

}  // namespace detail

// Unweighted distances from one source; -1 marks unreachable nodes.
template <BitAdjacencyGraph G>
std::vector<std::int64_t> bfs_distances(const G& g, std::int64_t source) {
  const std::int64_t N = g.num_nodes();
  const std::size_t words = static_cast<std::size_t>((N + 63) / 64);
  std::vector<std::int64_t> dist(N, -1);
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::int32_t> frontier{static_cast<std::int32_t>(source)},
      next;
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  dist[source] = 0;
  std::int64_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (std::int32_t u : frontier) detail::expand_level(g.row(u), visited, next);
    for (std::int32_t v : next) dist[v] = level;
    frontier.swap(next);
  }
  return dist;
}

// Exact eccentricity with early exit: once every node is visited the level
// at hand is the eccentricity. reached reports the visited count so callers
// can detect disconnected graphs.
template <BitAdjacencyGraph G>
std::int64_t bfs_eccentricity(const G& g, std::int64_t source,
                              std::int64_t* reached = nullptr) {
  const std::int64_t N = g.num_nodes();
  const std::size_t words = static_cast<std::size_t>((N + 63) / 64);
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::int32_t> frontier{static_cast<std::int32_t>(source)}, next;
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  std::int64_t seen = 1, level = 0;
  while (!frontier.empty() && seen < N) {
    ++level;
    next.clear();
    for (std::int32_t u : frontier) {
      seen += detail::expand_level(g.row(u), visited, next);
      if (seen == N) break;  // everything reached at this level
    }
    if (next.empty()) {  // exhausted component
      --level;
      break;
    }
    frontier.swap(next);
  }
  if (reached) *reached = seen;
  return level;
}

// True iff every node lies within `bound` hops of `source`.
template <BitAdjacencyGraph G>
bool eccentricity_at_most(const G& g, std::int64_t source, std::int64_t bound) {
  const std::int64_t N = g.num_nodes();
  const std::size_t words = static_cast<std::size_t>((N + 63) / 64);
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::int32_t> frontier{static_cast<std::int32_t>(source)}, next;
  visited[source >> 6] |= std::uint64_t{1} << (source & 63);
  std::int64_t seen = 1;
  for (std::int64_t level = 1; level <= bound && !frontier.empty(); ++level) {
    next.clear();
    for (std::int32_t u : frontier) {
      seen += detail::expand_level(g.row(u), visited, next);
      if (seen == N) return true;
    }
    frontier.swap(next);
  }
  return seen == N;
}

struct DiameterResult {
  bool connected = false;
  std::int64_t diameter = 0;    // valid when connected
  std::int64_t components = 1;

  std::string to_string() const {
    return connected ? std::to_string(diameter) : "disconnected";
  }
};

template <BitAdjacencyGraph G>
DiameterResult diameter(const G& g) {
  const std::int64_t N = g.num_nodes();
  DiameterResult res;
  if (N == 0) return res;
  std::int64_t reached = 0;
  res.diameter = bfs_eccentricity(g, 0, &reached);
  if (reached < N) {
    // count components
    std::vector<bool> seen(N, false);
    res.components = 0;
    for (std::int64_t s = 0; s < N; ++s) {
      if (seen[s]) continue;
      ++res.components;
      const auto dist = bfs_distances(g, s);
      for (std::int64_t v = 0; v < N; ++v)
        if (dist[v] >= 0) seen[v] = true;
    }
    res.connected = false;
    return res;
  }
  res.connected = true;
  for (std::int64_t u = 1; u < N; ++u) {
    const std::int64_t e = bfs_eccentricity(g, u);
    if (e > res.diameter) res.diameter = e;
  }
  return res;
}

template <BitAdjacencyGraph G>
bool is_connected(const G& g) {
  if (g.num_nodes() == 0) return true;
  std::int64_t reached = 0;
  bfs_eccentricity(g, 0, &reached);
  return reached == g.num_nodes();
}

// All-sources distance bound: true iff max pairwise distance <= bound.
// Exhaustive truncated BFS from every node.
template <BitAdjacencyGraph G>
bool all_eccentricities_at_most(const G& g, std::int64_t bound,
                                std::int64_t* witness = nullptr) {
  for (std::int64_t u = 0; u < g.num_nodes(); ++u) {
    if (!eccentricity_at_most(g, u, bound)) {
      if (witness) *witness = u;
      return false;
    }
  }
  return true;
}

// ---- triangles and clustering ----

// T_n(k) for every node: half the sum of codegrees over incident edges.
// Each unordered edge's AND-popcount is charged to both endpoints.
template <BitAdjacencyGraph G>
std::vector<std::int64_t> triangles_per_node(const G& g) {
  const std::int64_t N = g.num_nodes();
  std::vector<std::int64_t> twice(N, 0);
  for (std::int64_t u = 0; u < N; ++u) {
    const auto row_u = g.row(u);
    // neighbors v > u only; the symmetric half was charged when v was u.
    const std::size_t w0 = static_cast<std::size_t>(u >> 6);
    for (std::size_t w = w0; w < row_u.size(); ++w) {
      std::uint64_t x = row_u[w];
      if (w == w0) x &= ~((std::uint64_t{2} << (u & 63)) - 1);
      while (x) {
        const std::int64_t v =
            static_cast<std::int64_t>(w * 64 + std::countr_zero(x));
        x &= x - 1;
        const std::int64_t c = BitMatrix::and_popcount(row_u, g.row(v));
        twice[u] += c;
        twice[v] += c;
      }
    }
  }
  for (auto& t : twice) t /= 2;
  return twice;
}

template <BitAdjacencyGraph G>
std::int64_t triangle_count(const G& g) {
  std::int64_t s = 0;
  for (std::int64_t t : triangles_per_node(g)) s += t;
  return s / 3;
}

struct ClusteringRecord {
  std::int64_t label = 0;
  std::int64_t degree = 0;
  std::int64_t triangles = 0;
  double local_cc = 0.0;
  double asymptotic_cc = 0.0;
  bool degenerate = false;  // degree < 2: local_cc fixed to 0 by convention
};

// (6/pi^2) * prod over p | k of p^2/(p^2 - 1).
inline double asymptotic_clustering(const FactorSignature& sig) {
  double prod = kCoprimeDensity;
  for (std::int64_t p : sig.distinct_primes) {
    const double pd = static_cast<double>(p);
    prod *= pd * pd / (pd * pd - 1.0);
  }
  return prod;
}

inline ClusteringRecord local_clustering(const CoprimeNetwork& net,
                                         std::int64_t label,
                                         const SieveTable& sieve) {
  ClusteringRecord rec;
  rec.label = label;
  const std::int64_t u = net.index(label);
  rec.degree = net.degrees[u];
  const auto row_u = net.row(u);
  std::int64_t twice = 0;
  BitMatrix::for_each_bit(row_u, [&](std::int64_t v) {
    twice += BitMatrix::and_popcount(row_u, net.row(v));
  });
  rec.triangles = twice / 2;
  if (rec.degree >= 2) {
    rec.local_cc = 2.0 * static_cast<double>(rec.triangles) /
                   (static_cast<double>(rec.degree) *
                    static_cast<double>(rec.degree - 1));
  } else {
    rec.degenerate = true;
  }
  rec.asymptotic_cc = asymptotic_clustering(factor_signature(label, sieve));
  return rec;
}

// Mean of c(k) over all nodes in ascending label order; degenerate nodes
// contribute 0.
template <BitAdjacencyGraph G>
double average_local_clustering(const G& g) {
  const std::int64_t N = g.num_nodes();
  if (N == 0) throw std::domain_error("average_local_clustering: empty graph");
  const auto tri = triangles_per_node(g);
  double sum = 0.0;
  for (std::int64_t u = 0; u < N; ++u) {
    const std::int64_t d = g.degree(u);
    if (d >= 2)
      sum += 2.0 * static_cast<double>(tri[u]) /
             (static_cast<double>(d) * static_cast<double>(d - 1));
  }
  return sum / static_cast<double>(N);
}

// ---- cycles and closed walks ----

struct CycleGuard {
  std::int64_t max_nodes = 60;  // exhaustive enumeration allowed up to here
  std::int64_t max_r = 5;       // ... or for short cycles on any instance
};

// Exact count of labeled r-cycles: ordered tuples of r distinct nodes with
// consecutive and wrap-around adjacency. Each undirected cycle contributes
// 2r tuples; enumeration anchors the minimum node first and multiplies by r.
template <BitAdjacencyGraph G>
std::int64_t labeled_cycles_exact(const G& g, std::int64_t r,
                                  const CycleGuard& guard = {}) {
  const std::int64_t N = g.num_nodes();
  if (r < 3) throw std::domain_error("labeled_cycles_exact: r must be >= 3");
  if (N > guard.max_nodes && r > guard.max_r)
    throw resource_cap_error(
        "labeled_cycles_exact: instance above enumeration guard (N=" +
        std::to_string(N) + ", r=" + std::to_string(r) + ")");

  std::vector<bool> used(N, false);
  std::vector<std::int64_t> stack;
  std::int64_t anchored = 0;

  auto adjacent = [&](std::int64_t a, std::int64_t b) {
    return (g.row(a)[b >> 6] >> (b & 63)) & 1;
  };

  // depth-first walk over increasing-index-free tuples with fixed anchor
  auto dfs = [&](auto&& self, std::int64_t anchor, std::int64_t u,
                 std::int64_t depth) -> void {
    if (depth == r) {
      if (adjacent(u, anchor)) ++anchored;
      return;
    }
    BitMatrix::for_each_bit(g.row(u), [&](std::int64_t v) {
      if (v <= anchor || used[v]) return;
      used[v] = true;
      self(self, anchor, v, depth + 1);
      used[v] = false;
    });
  };

  for (std::int64_t s = 0; s < N; ++s) {
    used[s] = true;
    dfs(dfs, s, s, 1);
    used[s] = false;
  }
  return checked_mul(anchored, r);
}

namespace detail {

// out = A * in over the bitset rows, exact integer arithmetic.
template <BitAdjacencyGraph G>
void adjacency_matvec(const G& g, const std::vector<std::int64_t>& in,
                      std::vector<std::int64_t>& out) {
  const std::int64_t N = g.num_nodes();
  for (std::int64_t v = 0; v < N; ++v) {
    __int128 acc = 0;
    BitMatrix::for_each_bit(g.row(v), [&](std::int64_t w) { acc += in[w]; });
    if (acc > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("closed_walks: matrix power exceeds 64 bits");
    out[v] = static_cast<std::int64_t>(acc);
  }
}

}  // namespace detail

// Tr(A^r), the number of closed walks of length r, via r/2-step matrix-vector
// passes per basis direction. Exact; throws on 64-bit overflow.
template <BitAdjacencyGraph G>
std::int64_t closed_walks(const G& g, std::int64_t r) {
  if (r < 2) throw std::domain_error("closed_walks: r must be >= 2");
  const std::int64_t N = g.num_nodes();
  const std::int64_t h1 = r / 2, h2 = r - h1;
  std::vector<std::int64_t> x(N), y(N), half(N);
  __int128 trace = 0;
  for (std::int64_t u = 0; u < N; ++u) {
    std::fill(x.begin(), x.end(), 0);
    x[u] = 1;
    for (std::int64_t step = 0; step < h1; ++step) {
      detail::adjacency_matvec(g, x, y);
      x.swap(y);
    }
    half = x;
    for (std::int64_t step = h1; step < h2; ++step) {
      detail::adjacency_matvec(g, x, y);
      x.swap(y);
    }
    for (std::int64_t v = 0; v < N; ++v)
      trace += static_cast<__int128>(half[v]) * x[v];
  }
  if (trace > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("closed_walks: trace exceeds 64 bits");
  return static_cast<std::int64_t>(trace);
}

// Sum over ordered node pairs (diagonal included) of codeg(x,y)^2, via
// AND-popcounts. Equals Tr(A^4); kept as an independent route for the
// identity check. codeg(x,x) is deg(x).
template <BitAdjacencyGraph G>
std::int64_t sum_codegree_squares(const G& g) {
  const std::int64_t N = g.num_nodes();
  __int128 total = 0;
  for (std::int64_t u = 0; u < N; ++u) {
    const auto row_u = g.row(u);
    for (std::int64_t v = u + 1; v < N; ++v) {
      const std::int64_t c = BitMatrix::and_popcount(row_u, g.row(v));
      total += 2 * static_cast<__int128>(c) * c;
    }
    const std::int64_t d = g.degree(u);
    total += static_cast<__int128>(d) * d;
  }
  if (total > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("sum_codegree_squares: exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

struct CycleCountRecord {
  std::int64_t r = 0;
  std::optional<std::int64_t> exact_labeled;  // absent above the guard
  std::int64_t closed_walks = 0;              // Tr(A^r)
  double upper_bound = 0.0;                   // (6n/pi^2)^r
  double wpr_estimate = 0.0;                  // N^r p^r (1-p)^(r(r-3)/2)
};

inline CycleCountRecord cycle_count_record(const CoprimeNetwork& net,
                                           std::int64_t r,
                                           const CycleGuard& guard = {}) {
  CycleCountRecord rec;
  rec.r = r;
  const double N = static_cast<double>(net.num_nodes());
  const double p = kCoprimeDensity;
  rec.upper_bound = std::pow(kCoprimeDensity * static_cast<double>(net.n),
                             static_cast<double>(r));
  rec.wpr_estimate = std::pow(N * p, static_cast<double>(r)) *
                     std::pow(1.0 - p, static_cast<double>(r) *
                                           static_cast<double>(r - 3) / 2.0);
  rec.closed_walks = closed_walks(net, r);
  if (net.num_nodes() <= guard.max_nodes || r <= guard.max_r) {
    try {
      rec.exact_labeled = labeled_cycles_exact(net, r, guard);
    } catch (const resource_cap_error&) {
      rec.exact_labeled = std::nullopt;
    }
  }
  return rec;
}

// ---- aggregate stats ----

template <BitAdjacencyGraph G>
std::map<std::int64_t, std::int64_t> degree_histogram(const G& g) {
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t u = 0; u < g.num_nodes(); ++u) ++hist[g.degree(u)];
  return hist;
}

struct NetworkStats {
  std::int64_t n = 0;
  std::int64_t num_nodes = 0;
  std::int64_t num_edges = 0;
  double link_density = 0.0;
  double avg_degree = 0.0;
  std::int64_t max_degree = 0;
  DiameterResult diam;
  std::optional<double> avg_clustering;
};

struct StatsOptions {
  bool with_diameter = true;
  bool with_clustering = false;
};

inline NetworkStats compute_stats(const CoprimeNetwork& net,
                                  const StatsOptions& opts = {}) {
  NetworkStats s;
  s.n = net.n;
  s.num_nodes = net.num_nodes();
  s.num_edges = net.edge_count;
  if (s.num_nodes >= 2) s.link_density = link_density(net).value;
  s.avg_degree = average_degree(net);
  s.max_degree = max_degree(net).degree;
  if (opts.with_diameter) s.diam = diameter(net);
  if (opts.with_clustering) s.avg_clustering = average_local_clustering(net);
  return s;
}

}  // namespace coprime
