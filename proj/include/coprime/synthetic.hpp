#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coprime/bitset.hpp"

namespace coprime {

// Deterministic reference graphs with known spectra; debug inputs for the
// spectral solvers.
struct SyntheticGraph {
  BitMatrix adj;
  std::vector<std::int64_t> degs;

  std::int64_t num_nodes() const { return adj.rows(); }
  std::int64_t degree(std::int64_t u) const { return degs[u]; }
  std::span<const std::uint64_t> row(std::int64_t u) const {
    return adj.row(u);
  }

  void add_edge(std::int64_t u, std::int64_t v) {
    adj.set(u, v);
    adj.set(v, u);
    ++degs[u];
    ++degs[v];
  }

  static SyntheticGraph empty(std::int64_t n) {
    SyntheticGraph g;
    g.adj = BitMatrix(n, n);
    g.degs.assign(n, 0);
    return g;
  }
  static SyntheticGraph path(std::int64_t n) {
    auto g = empty(n);
    for (std::int64_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
  }
  static SyntheticGraph complete(std::int64_t n) {
    auto g = empty(n);
    for (std::int64_t i = 0; i < n; ++i)
      for (std::int64_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
  }
  static SyntheticGraph cycle(std::int64_t n) {
    auto g = empty(n);
    for (std::int64_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
  }
};

}  // namespace coprime
