#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "coprime/common.hpp"
#include "coprime/generators.hpp"
#include "coprime/metrics.hpp"
#include "coprime/network.hpp"
#include "coprime/prng.hpp"
#include "coprime/sieve.hpp"

namespace coprime {

struct SpectralOptions {
  double tol = 1e-9;             // relative Rayleigh-quotient lock
  std::int64_t max_iter = 100000;
  double residual_tol = 1e-6;    // final certificate ||Av - lv|| <= tol ||v||
  std::uint64_t seed = 0;        // start-vector seed
  std::int64_t dense_threshold = 400;  // full eigensolve at or below this N
};

struct IterativeResult {
  double value = 0.0;
  std::int64_t iterations = 0;
  double residual_norm = 0.0;   // ||Av - value*v|| with ||v|| = 1
  std::vector<double> vector;   // final unit eigenvector estimate
};

namespace detail {

template <BitAdjacencyGraph G>
void adjacency_apply(const G& g, const std::vector<double>& x,
                     std::vector<double>& y) {
  const std::int64_t N = g.num_nodes();
  for (std::int64_t v = 0; v < N; ++v) {
    double acc = 0.0;
    BitMatrix::for_each_bit(g.row(v), [&](std::int64_t w) { acc += x[w]; });
    y[v] = acc;
  }
}

template <BitAdjacencyGraph G>
void laplacian_apply(const G& g, const std::vector<double>& x,
                     std::vector<double>& y) {
  adjacency_apply(g, x, y);
  for (std::int64_t v = 0; v < g.num_nodes(); ++v)
    y[v] = static_cast<double>(g.degree(v)) * x[v] - y[v];
}

inline double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline void normalize(std::vector<double>& x) {
  const double n = norm2(x);
  if (n == 0.0) throw std::runtime_error("power iteration: zero vector");
  for (double& v : x) v /= n;
}

inline std::vector<double> seeded_unit_vector(std::int64_t n,
                                              std::uint64_t seed) {
  Xoshiro256StarStar rng(seed);
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_unit() - 0.5;
  normalize(x);
  return x;
}

inline void deflate_ones(std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

// Generic power iteration. Stops only when the Rayleigh quotient has locked
// to relative tol AND the residual certificate ||Ax - rq x|| <= residual_tol
// * max(1, |rq|) holds; for unit x the residual is sqrt(||Ax||^2 - rq^2),
// free at every step. apply must be self-adjoint with a dominant top
// eigenvalue on the projected subspace.
template <typename ApplyFn, typename ProjectFn>
IterativeResult power_iteration(std::int64_t n, ApplyFn&& apply,
                                ProjectFn&& project,
                                const SpectralOptions& opts) {
  std::vector<double> x = seeded_unit_vector(n, opts.seed);
  project(x);
  normalize(x);
  std::vector<double> y(n);
  double prev = std::numeric_limits<double>::infinity();
  double rq = 0.0, res = 0.0;
  for (std::int64_t it = 0; it < opts.max_iter; ++it) {
    apply(x, y);
    project(y);
    rq = dot(x, y);
    const double ny2 = dot(y, y);
    res = std::sqrt(std::max(0.0, ny2 - rq * rq));
    const double scale = std::max(1.0, std::abs(rq));
    const bool locked = std::abs(rq - prev) <= opts.tol * scale;
    const bool certified = res <= opts.residual_tol * scale;
    if (locked && certified)
      return {rq, it + 1, res, std::move(x)};
    prev = rq;
    const double ny = std::sqrt(ny2);
    if (ny == 0.0)  // operator annihilates x: eigenvalue 0 on this subspace
      return {0.0, it + 1, 0.0, std::move(x)};
    for (std::int64_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  throw convergence_error("power iteration: no certified lock within budget",
                          rq, res, opts.max_iter);
}

}  // namespace detail

// Largest adjacency eigenvalue. The iteration runs on A + I: the unit shift
// breaks the +/-lambda1 tie of bipartite components (a star graph never
// converges unshifted) and cancels out of the reported value and residual.
template <BitAdjacencyGraph G>
IterativeResult adjacency_lambda1(const G& g, const SpectralOptions& opts = {}) {
  if (g.num_nodes() < 1)
    throw std::domain_error("adjacency_lambda1: empty graph");
  auto res = detail::power_iteration(
      g.num_nodes(),
      [&](const std::vector<double>& x, std::vector<double>& y) {
        detail::adjacency_apply(g, x, y);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i];
      },
      [](std::vector<double>&) {}, opts);
  res.value -= 1.0;
  return res;
}

struct LaplacianExtremes {
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  std::int64_t iterations = 0;         // total over both phases
  double residual_norm = 0.0;          // worse of the two certificates
  std::vector<double> lambda2_vector;  // deflated estimate, unit norm
};

// lambda_N by power iteration on L, then lambda_2 by power iteration on
// (s*I - L) with s just above lambda_N and the all-ones kernel deflated
// each step. Requires a connected graph.
template <BitAdjacencyGraph G>
LaplacianExtremes laplacian_extremes_iterative(const G& g,
                                               const SpectralOptions& opts = {}) {
  const std::int64_t N = g.num_nodes();
  if (N < 2) throw std::domain_error("laplacian_extremes: need N >= 2");
  if (!is_connected(g))
    throw std::domain_error("laplacian_extremes: graph is disconnected");

  auto top = detail::power_iteration(
      N,
      [&](const std::vector<double>& x, std::vector<double>& y) {
        detail::laplacian_apply(g, x, y);
      },
      [](std::vector<double>&) {}, opts);

  const double shift = top.value * (1.0 + 1e-12) + 1e-9;
  auto low = detail::power_iteration(
      N,
      [&](const std::vector<double>& x, std::vector<double>& y) {
        detail::laplacian_apply(g, x, y);
        for (std::int64_t i = 0; i < N; ++i) y[i] = shift * x[i] - y[i];
      },
      [](std::vector<double>& x) { detail::deflate_ones(x); }, opts);

  LaplacianExtremes out;
  out.lambdaN = top.value;
  out.lambda2 = shift - low.value;
  out.iterations = top.iterations + low.iterations;
  out.residual_norm = std::max(top.residual_norm, low.residual_norm);
  out.lambda2_vector = std::move(low.vector);
  const double scale = std::max(1.0, out.lambdaN);
  if (out.residual_norm > opts.residual_tol * scale)
    throw convergence_error("laplacian_extremes: residual certificate failed",
                            out.lambda2, out.residual_norm, out.iterations);
  return out;
}

// ---- dense symmetric eigensolver (small-N oracle) ----

// Householder reduction of a symmetric matrix (row-major, destroyed) to
// tridiagonal form, then implicit-shift QL on the tridiagonal pair. This is
// the classic EISPACK tred1/tql1 pair, eigenvalues only.
inline std::vector<double> dense_symmetric_eigenvalues(std::vector<double>& a,
                                                       std::int64_t n) {
  if (n == 0) return {};
  std::vector<double> d(n, 0.0), e(n, 0.0);
  auto at = [&](std::int64_t i, std::int64_t j) -> double& {
    return a[i * n + j];
  };

  for (std::int64_t i = n - 1; i >= 1; --i) {
    const std::int64_t l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (std::int64_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (std::int64_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::int64_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::int64_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::int64_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::int64_t j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (std::int64_t k = 0; k <= j; ++k)
            at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  for (std::int64_t i = 0; i < n; ++i) d[i] = at(i, i);

  // implicit-shift QL on (d, e)
  for (std::int64_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  // off-diagonals cannot round below eps * ||T||, so deflation needs an
  // absolute floor next to the local test (a zero Laplacian eigenvalue
  // never converges under a purely local threshold)
  double anorm = 0.0;
  for (std::int64_t i = 0; i < n; ++i)
    anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]) +
                                (i > 0 ? std::abs(e[i - 1]) : 0.0));
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::int64_t l = 0; l < n; ++l) {
    std::int64_t iter = 0;
    std::int64_t m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= eps * anorm)
          break;
      }
      if (m != l) {
        if (++iter == 50)
          throw std::runtime_error("dense eigensolver: QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::int64_t i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // rotation annihilated early: recover and restart
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
  return d;
}

template <BitAdjacencyGraph G>
std::vector<double> dense_adjacency_matrix(const G& g) {
  const std::int64_t N = g.num_nodes();
  std::vector<double> a(static_cast<std::size_t>(N) * N, 0.0);
  for (std::int64_t u = 0; u < N; ++u)
    BitMatrix::for_each_bit(g.row(u),
                            [&](std::int64_t v) { a[u * N + v] = 1.0; });
  return a;
}

template <BitAdjacencyGraph G>
std::vector<double> dense_laplacian_matrix(const G& g) {
  const std::int64_t N = g.num_nodes();
  std::vector<double> a(static_cast<std::size_t>(N) * N, 0.0);
  for (std::int64_t u = 0; u < N; ++u) {
    BitMatrix::for_each_bit(g.row(u),
                            [&](std::int64_t v) { a[u * N + v] = -1.0; });
    a[u * N + u] = static_cast<double>(g.degree(u));
  }
  return a;
}

enum class SolverKind { kFull, kIterative };

inline const char* solver_name(SolverKind s) {
  return s == SolverKind::kFull ? "full" : "iterative";
}

// Full spectral summary for one graph. The dense path is used automatically
// for N <= opts.dense_threshold so every iterative figure has an
// independently computed twin at small sizes.
struct SpectralSummary {
  std::int64_t n = 0;  // network bound, 0 for synthetic graphs
  std::int64_t num_nodes = 0;
  std::int64_t num_edges = 0;
  double lambda1_adj = 0.0;
  double lambda2_lap = 0.0;
  double lambdaN_lap = 0.0;
  double sync_ratio = 0.0;  // lambdaN / lambda2
  SolverKind solver = SolverKind::kIterative;
  std::int64_t iterations = 0;
  double residual_norm = 0.0;
  std::uint64_t seed = 0;
};

// ER/BA instances for spectral comparison must be connected; disconnected
// draws are resampled with a derived seed up to a bounded retry count.
inline RandomGraph connected_er(std::int64_t N, std::int64_t M,
                                std::uint64_t seed, int max_retries = 5) {
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    RandomGraph g = gen_er(N, M, seed + 0x9e3779b9u * attempt);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("connected_er: still disconnected after retries");
}

inline RandomGraph connected_ba(std::int64_t N, std::int64_t m,
                                std::uint64_t seed, int max_retries = 5) {
  // BA with a seed clique is connected by construction; the retry loop
  // guards the contract anyway.
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    RandomGraph g = gen_ba(N, m, seed + 0x9e3779b9u * attempt);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("connected_ba: still disconnected after retries");
}

template <BitAdjacencyGraph G>
SpectralSummary spectral_summary(const G& g, const SpectralOptions& opts = {},
                                 std::int64_t bound_n = 0) {
  SpectralSummary s;
  s.n = bound_n;
  s.num_nodes = g.num_nodes();
  s.num_edges = total_edges(g);
  s.seed = opts.seed;
  if (!is_connected(g))
    throw std::domain_error("spectral_summary: graph is disconnected");
  if (g.num_nodes() <= opts.dense_threshold) {
    s.solver = SolverKind::kFull;
    auto lap = dense_laplacian_matrix(g);
    auto lw = dense_symmetric_eigenvalues(lap, g.num_nodes());
    s.lambda2_lap = lw[1];
    s.lambdaN_lap = lw.back();
    auto adj = dense_adjacency_matrix(g);
    auto aw = dense_symmetric_eigenvalues(adj, g.num_nodes());
    s.lambda1_adj = aw.back();
  } else {
    s.solver = SolverKind::kIterative;
    const auto a1 = adjacency_lambda1(g, opts);
    const auto ext = laplacian_extremes_iterative(g, opts);
    s.lambda1_adj = a1.value;
    s.lambda2_lap = ext.lambda2;
    s.lambdaN_lap = ext.lambdaN;
    s.iterations = a1.iterations + ext.iterations;
    s.residual_norm = std::max(a1.residual_norm, ext.residual_norm);
  }
  s.sync_ratio = s.lambdaN_lap / s.lambda2_lap;
  return s;
}

// One row of the synchronizability comparison table.
struct ScanRecord {
  GraphFamily family = GraphFamily::kCoprime;
  std::int64_t n = 0;  // coprime bound driving the match
  std::int64_t num_nodes = 0;
  std::int64_t num_edges = 0;
  double lambda2 = 0.0;
  double lambdaN = 0.0;
  double ratio = 0.0;
  SolverKind solver = SolverKind::kFull;
  std::int64_t iterations = 0;
  double residual = 0.0;
  std::uint64_t seed = 0;
};

inline ScanRecord scan_record_from(const SpectralSummary& s, GraphFamily fam,
                                   std::int64_t n, std::uint64_t seed) {
  return {fam,      n,           s.num_nodes,  s.num_edges,
          s.lambda2_lap, s.lambdaN_lap, s.sync_ratio, s.solver,
          s.iterations,  s.residual_norm, seed};
}

// Per-n spectral rows for the coprime network and its matched ER/BA
// comparators. Deterministic under a fixed seed.
inline std::vector<ScanRecord> sync_ratio_sweep(
    const std::vector<std::int64_t>& n_values,
    const std::vector<GraphFamily>& families, std::uint64_t seed,
    const SieveTable& sieve, const SpectralOptions& opts = {}) {
  std::vector<ScanRecord> rows;
  for (std::int64_t n : n_values) {
    const auto net = build_network(n, sieve);
    const auto matched = match_parameters(net);
    for (GraphFamily fam : families) {
      switch (fam) {
        case GraphFamily::kCoprime:
          rows.push_back(
              scan_record_from(spectral_summary(net, opts, n), fam, n, seed));
          break;
        case GraphFamily::kEr: {
          const auto g = connected_er(matched.er.N, matched.er.M, seed);
          rows.push_back(
              scan_record_from(spectral_summary(g, opts, n), fam, n, seed));
          break;
        }
        case GraphFamily::kBa: {
          const auto g = connected_ba(matched.ba.N, matched.ba.m, seed);
          rows.push_back(
              scan_record_from(spectral_summary(g, opts, n), fam, n, seed));
          break;
        }
      }
    }
  }
  return rows;
}

}  // namespace coprime
