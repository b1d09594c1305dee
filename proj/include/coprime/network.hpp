#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coprime/bitset.hpp"
#include "coprime/common.hpp"
#include "coprime/sieve.hpp"

namespace coprime {

// Default ceiling on the network bound n. Bitset rows cost about N^2/8
// bytes (~1 GB at n = 1e5); anything larger must be requested explicitly.
inline constexpr std::int64_t kDefaultMaxN = 100000;

// The coprime network of composite numbers in [4, n]: node u ~ node v iff
// gcd(label(u), label(v)) = 1. Immutable once built; adjacency rows are
// bitsets over node indices in ascending label order.
struct CoprimeNetwork {
  std::int64_t n = 0;                    // largest possible node index
  std::vector<std::int64_t> labels;      // ascending composites in [4, n]
  std::vector<std::int32_t> index_of;    // label -> node index, -1 otherwise
  std::vector<std::int64_t> radicals;    // radical of each label
  BitMatrix adj;
  std::vector<std::int64_t> degrees;
  std::int64_t edge_count = 0;

  std::int64_t num_nodes() const {
    return static_cast<std::int64_t>(labels.size());
  }
  std::int64_t degree(std::int64_t u) const { return degrees[u]; }
  std::span<const std::uint64_t> row(std::int64_t u) const {
    return adj.row(u);
  }
  bool has_label(std::int64_t k) const {
    return k >= 0 && k < static_cast<std::int64_t>(index_of.size()) &&
           index_of[k] >= 0;
  }
  std::int64_t index(std::int64_t k) const {
    if (!has_label(k))
      throw std::domain_error("label " + std::to_string(k) +
                              " is not a node of this network");
    return index_of[k];
  }
};

inline std::int64_t node_count_formula(std::int64_t n, const SieveTable& sieve) {
  return n - sieve.pi(n) - 1;
}

// Edges contributed when composite k joins the growing network:
// phi(k) - pi(k) + w(k) - 1.
inline std::int64_t edge_recurrence_term(std::int64_t k, const SieveTable& sieve) {
  if (!sieve.is_composite(k))
    throw std::domain_error("edge_recurrence_term: k must be composite");
  const FactorSignature sig = factor_signature(k, sieve);
  return euler_phi(k, sieve) - sieve.pi(k) + sig.omega - 1;
}

// Telescoped edge count: sum of the recurrence over composites <= n.
inline std::int64_t edge_count_formula(std::int64_t n, const SieveTable& sieve) {
  std::int64_t e = 0;
  for (std::int64_t k = 4; k <= n; ++k)
    if (sieve.is_composite(k)) e += edge_recurrence_term(k, sieve);
  return e;
}

// Main-term value 3n^2/pi^2 + n log log n - n pi(n) + pi(n)(pi(n)+1)/2.
// Natural logarithms; the O(n log n) remainder is not evaluated.
inline double edge_count_asymptotic(std::int64_t n, const SieveTable& sieve) {
  if (n < 4)
    throw std::domain_error("edge_count_asymptotic: requires n >= 4");
  const double nd = static_cast<double>(n);
  const double m = static_cast<double>(sieve.pi(n));
  return 0.5 * kCoprimeDensity * nd * nd + nd * std::log(std::log(nd)) -
         nd * m + m * (m + 1.0) / 2.0;
}

// Incremental builder realizing the growing construction: nodes are added
// in ascending label order and wired to earlier nodes by radical gcd.
// Capacity for the final bound is reserved up front so intermediate
// networks share one allocation.
class NetworkBuilder {
 public:
  NetworkBuilder(const SieveTable& sieve, std::int64_t max_n,
                 std::int64_t cap = kDefaultMaxN)
      : sieve_(sieve), max_n_(max_n) {
    if (max_n < 4) throw std::domain_error("NetworkBuilder: max_n must be >= 4");
    if (max_n > sieve.limit)
      throw std::domain_error("NetworkBuilder: sieve limit below max_n");
    if (max_n > cap)
      throw resource_cap_error("NetworkBuilder: max_n " + std::to_string(max_n) +
                               " exceeds configured cap " + std::to_string(cap));
    const std::int64_t capacity = node_count_formula(max_n, sieve);
    net_.n = 3;  // no nodes yet
    net_.index_of.assign(static_cast<std::size_t>(max_n) + 1, -1);
    net_.adj = BitMatrix(capacity, capacity);
    net_.labels.reserve(capacity);
    net_.radicals.reserve(capacity);
    net_.degrees.reserve(capacity);
  }

  // Grows the bound to n, wiring every composite in between. Returns the
  // number of edges added.
  std::int64_t advance_to(std::int64_t n) {
    if (n < net_.n || n > max_n_)
      throw std::domain_error("advance_to: bound outside [current, max_n]");
    std::int64_t added = 0;
    for (std::int64_t k = net_.n + 1; k <= n; ++k) {
      if (sieve_.is_composite(k)) added += add_composite(k);
      net_.n = k;
    }
    return added;
  }

  const CoprimeNetwork& network() const { return net_; }
  CoprimeNetwork take() && { return std::move(net_); }

 private:
  std::int64_t add_composite(std::int64_t k) {
    const std::int64_t u = net_.num_nodes();
    const std::int64_t rad = factor_signature(k, sieve_).radical;
    net_.labels.push_back(k);
    net_.radicals.push_back(rad);
    net_.degrees.push_back(0);
    net_.index_of[k] = static_cast<std::int32_t>(u);
    std::int64_t added = 0;
    for (std::int64_t v = 0; v < u; ++v) {
      if (std::gcd(rad, net_.radicals[v]) == 1) {
        net_.adj.set(u, v);
        net_.adj.set(v, u);
        ++net_.degrees[v];
        ++net_.degrees[u];
        ++added;
      }
    }
    net_.edge_count += added;
    return added;
  }

  const SieveTable& sieve_;
  std::int64_t max_n_;
  CoprimeNetwork net_;
};

// Batch construction via the direct pairwise gcd loop. Kept independent of
// the incremental path so the two can cross-check each other.
inline CoprimeNetwork build_network(std::int64_t n, const SieveTable& sieve,
                                    std::int64_t cap = kDefaultMaxN) {
  if (n < 4)
    throw std::domain_error("build_network: n must be >= 4 (no composite nodes)");
  if (n > sieve.limit)
    throw std::domain_error("build_network: sieve limit below n");
  if (n > cap)
    throw resource_cap_error("build_network: n " + std::to_string(n) +
                             " exceeds configured cap " + std::to_string(cap));
  CoprimeNetwork net;
  net.n = n;
  net.index_of.assign(static_cast<std::size_t>(n) + 1, -1);
  for (std::int64_t k = 4; k <= n; ++k) {
    if (!sieve.is_composite(k)) continue;
    net.index_of[k] = static_cast<std::int32_t>(net.labels.size());
    net.labels.push_back(k);
    net.radicals.push_back(factor_signature(k, sieve).radical);
  }
  const std::int64_t N = net.num_nodes();
  net.adj = BitMatrix(N, N);
  net.degrees.assign(N, 0);
  for (std::int64_t u = 0; u < N; ++u) {
    const std::int64_t ru = net.radicals[u];
    for (std::int64_t v = u + 1; v < N; ++v) {
      if (std::gcd(ru, net.radicals[v]) == 1) {
        net.adj.set(u, v);
        net.adj.set(v, u);
        ++net.degrees[u];
        ++net.degrees[v];
        ++net.edge_count;
      }
    }
  }
  return net;
}

// Recounts edges from adjacency popcounts and checks the telescoped formula;
// throws on internal inconsistency.
inline std::int64_t edge_count_exact(const CoprimeNetwork& net,
                                     const SieveTable& sieve) {
  std::int64_t pop = 0;
  for (std::int64_t u = 0; u < net.num_nodes(); ++u)
    pop += net.adj.row_popcount(u);
  if (pop % 2 != 0 || pop / 2 != net.edge_count)
    throw std::runtime_error("edge_count_exact: popcount disagrees with builder");
  const std::int64_t formula = edge_count_formula(net.n, sieve);
  if (formula != net.edge_count)
    throw std::runtime_error(
        "edge_count_exact: telescoped formula disagrees with built count (n=" +
        std::to_string(net.n) + ")");
  return net.edge_count;
}

// Closed-form degree phi(n,k) - pi(n) + w(k) - 1.
inline std::int64_t degree_formula(std::int64_t n, std::int64_t k,
                                   const SieveTable& sieve) {
  const FactorSignature sig = factor_signature(k, sieve);
  return partial_totient(n, sig) - sieve.pi(n) + sig.omega - 1;
}

inline std::int64_t degree_of(const CoprimeNetwork& net, std::int64_t label) {
  return net.degrees[net.index(label)];
}

struct MaxDegreeResult {
  std::int64_t label = 0;
  std::int64_t degree = 0;
};

// Argmax of the degree array; smallest label on ties.
inline MaxDegreeResult max_degree(const CoprimeNetwork& net) {
  MaxDegreeResult r;
  r.label = net.labels.at(0);
  r.degree = net.degrees.at(0);
  for (std::int64_t u = 1; u < net.num_nodes(); ++u) {
    if (net.degrees[u] > r.degree) {
      r.degree = net.degrees[u];
      r.label = net.labels[u];
    }
  }
  return r;
}

// Closed form: the maximizer is p_r^2 for the largest prime p_r with
// p_r^2 <= n, with degree n - floor(n/p_r) - pi(n).
inline MaxDegreeResult max_degree_formula(std::int64_t n,
                                          const SieveTable& sieve) {
  if (n < 4) throw std::domain_error("max_degree_formula: n must be >= 4");
  std::int64_t pr = 2;
  for (std::int64_t p : sieve.primes) {
    if (p * p > n) break;
    pr = p;
  }
  return {pr * pr, n - n / pr - sieve.pi(n)};
}

// Upper bound n - floor(sqrt(n)) - pi(n) on the maximum degree.
inline std::int64_t max_degree_bound(std::int64_t n, const SieveTable& sieve) {
  std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (root * root > n) --root;
  while ((root + 1) * (root + 1) <= n) ++root;
  return n - root - sieve.pi(n);
}

inline std::int64_t codegree(const CoprimeNetwork& net, std::int64_t k,
                             std::int64_t l) {
  if (k == l) throw std::domain_error("codegree: labels must differ");
  return BitMatrix::and_popcount(net.row(net.index(k)), net.row(net.index(l)));
}

// phi(n, kl) - pi(n) + w(kl) - 1, evaluated on the merged prime signature so
// that k*l never has to fit under the sieve limit.
inline std::int64_t codegree_formula(std::int64_t n, std::int64_t k,
                                     std::int64_t l, const SieveTable& sieve) {
  const FactorSignature merged =
      merge_signatures(factor_signature(k, sieve), factor_signature(l, sieve));
  return partial_totient(n, merged) - sieve.pi(n) + merged.omega - 1;
}

inline std::vector<std::int64_t> isolated_nodes(const CoprimeNetwork& net) {
  std::vector<std::int64_t> out;
  for (std::int64_t u = 0; u < net.num_nodes(); ++u)
    if (net.degrees[u] == 0) out.push_back(net.labels[u]);
  return out;
}

}  // namespace coprime
