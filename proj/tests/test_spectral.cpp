#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <numbers>

#include "coprime/spectral.hpp"

using namespace coprime;

namespace {

// Minimal synthetic graph satisfying the bitset-adjacency interface.
struct TestGraph {
  BitMatrix adj;
  std::vector<std::int64_t> degs;

  std::int64_t num_nodes() const { return adj.rows(); }
  std::int64_t degree(std::int64_t u) const { return degs[u]; }
  std::span<const std::uint64_t> row(std::int64_t u) const {
    return adj.row(u);
  }

  static TestGraph from_edges(std::int64_t n,
                              const std::vector<std::pair<int, int>>& edges) {
    TestGraph g;
    g.adj = BitMatrix(n, n);
    g.degs.assign(n, 0);
    for (auto [u, v] : edges) {
      g.adj.set(u, v);
      g.adj.set(v, u);
      ++g.degs[u];
      ++g.degs[v];
    }
    return g;
  }
  static TestGraph path(std::int64_t n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return from_edges(n, e);
  }
  static TestGraph complete(std::int64_t n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return from_edges(n, e);
  }
  static TestGraph cycle(std::int64_t n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, int((i + 1) % n)});
    return from_edges(n, e);
  }
};

const SieveTable& sieve1k() {
  static const SieveTable s = build_sieve(1000);
  return s;
}

}  // namespace

TEST_CASE("dense eigensolver on known spectra") {
  // path P3 Laplacian: {0, 1, 3}
  auto lp3 = dense_laplacian_matrix(TestGraph::path(3));
  auto w = dense_symmetric_eigenvalues(lp3, 3);
  CHECK(w[0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(w[1] == Catch::Approx(1.0));
  CHECK(w[2] == Catch::Approx(3.0));

  // complete K6 adjacency: {-1 x5, 5}
  auto a6 = dense_adjacency_matrix(TestGraph::complete(6));
  auto wa = dense_symmetric_eigenvalues(a6, 6);
  for (int i = 0; i < 5; ++i) CHECK(wa[i] == Catch::Approx(-1.0));
  CHECK(wa[5] == Catch::Approx(5.0));

  // cycle C4 Laplacian: {0, 2, 2, 4}
  auto lc4 = dense_laplacian_matrix(TestGraph::cycle(4));
  auto wc = dense_symmetric_eigenvalues(lc4, 4);
  CHECK(wc[0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(wc[1] == Catch::Approx(2.0));
  CHECK(wc[2] == Catch::Approx(2.0));
  CHECK(wc[3] == Catch::Approx(4.0));

  // path P7 Laplacian closed form: 4 sin^2(k pi / 14)
  auto lp7 = dense_laplacian_matrix(TestGraph::path(7));
  auto wp = dense_symmetric_eigenvalues(lp7, 7);
  for (int k = 0; k < 7; ++k) {
    const double want =
        4.0 * std::pow(std::sin(k * std::numbers::pi / 14.0), 2);
    CHECK(wp[k] == Catch::Approx(want).margin(1e-10));
  }
}

TEST_CASE("adjacency lambda1") {
  // complete graph: lambda1 = m - 1
  for (std::int64_t m : {3, 8, 21}) {
    const auto res = adjacency_lambda1(TestGraph::complete(m));
    CHECK(res.value == Catch::Approx(static_cast<double>(m - 1)));
  }

  // coprime n=10 against the dense oracle
  const auto net10 = build_network(10, sieve1k());
  auto a = dense_adjacency_matrix(net10);
  const auto dense = dense_symmetric_eigenvalues(a, net10.num_nodes());
  const auto iter = adjacency_lambda1(net10);
  CHECK(iter.value == Catch::Approx(dense.back()).epsilon(1e-8));

  // Rayleigh bounds for a connected instance
  const auto net100 = build_network(100, sieve1k());
  const auto r = adjacency_lambda1(net100);
  CHECK(r.value >= average_degree(net100) - 1e-9);
  CHECK(r.value <= static_cast<double>(max_degree(net100).degree) + 1e-9);
}

TEST_CASE("laplacian extremes on synthetic graphs") {
  const auto p3 = laplacian_extremes_iterative(TestGraph::path(3));
  CHECK(p3.lambda2 == Catch::Approx(1.0).epsilon(1e-7));
  CHECK(p3.lambdaN == Catch::Approx(3.0).epsilon(1e-9));

  for (std::int64_t m : {4, 9}) {
    const auto km = laplacian_extremes_iterative(TestGraph::complete(m));
    CHECK(km.lambda2 == Catch::Approx(static_cast<double>(m)).epsilon(1e-8));
    CHECK(km.lambdaN == Catch::Approx(static_cast<double>(m)).epsilon(1e-8));
    CHECK(km.lambdaN / km.lambda2 == Catch::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("laplacian extremes reject disconnected graphs") {
  const auto net30 = build_network(30, sieve1k());
  CHECK_THROWS_AS(laplacian_extremes_iterative(net30), std::domain_error);
  CHECK_THROWS_AS(spectral_summary(net30), std::domain_error);
}

TEST_CASE("iterative matches dense oracle on coprime instances") {
  for (std::int64_t n : {100, 300}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve1k());
    auto lap = dense_laplacian_matrix(net);
    const auto w = dense_symmetric_eigenvalues(lap, net.num_nodes());
    const auto ext = laplacian_extremes_iterative(net);
    CHECK(ext.lambda2 == Catch::Approx(w[1]).epsilon(1e-6));
    CHECK(ext.lambdaN == Catch::Approx(w.back()).epsilon(1e-6));

    auto adj = dense_adjacency_matrix(net);
    const auto wa = dense_symmetric_eigenvalues(adj, net.num_nodes());
    const auto l1 = adjacency_lambda1(net);
    CHECK(l1.value == Catch::Approx(wa.back()).epsilon(1e-6));
  }
}

TEST_CASE("laplacian kernel and deflation invariants") {
  const auto net = build_network(200, sieve1k());
  const std::int64_t N = net.num_nodes();

  // L * 1 = 0 exactly: integer row sums cancel
  std::vector<double> ones(N, 1.0), out(N);
  coprime::detail::laplacian_apply(net, ones, out);
  for (double v : out) CHECK(v == 0.0);

  // returned lambda2 eigenvector is orthogonal to 1 and satisfies the
  // residual certificate
  const auto ext = laplacian_extremes_iterative(net);
  double dot1 = 0.0;
  for (double v : ext.lambda2_vector) dot1 += v;
  CHECK(std::abs(dot1) / static_cast<double>(N) < 1e-9);

  std::vector<double> lv(N);
  coprime::detail::laplacian_apply(net, ext.lambda2_vector, lv);
  double res = 0.0;
  for (std::int64_t i = 0; i < N; ++i) {
    const double r = lv[i] - ext.lambda2 * ext.lambda2_vector[i];
    res += r * r;
  }
  CHECK(std::sqrt(res) <= 1e-6 * std::max(1.0, ext.lambdaN));
}

TEST_CASE("spectral summary picks the dense path at small N") {
  const auto net = build_network(300, sieve1k());
  const auto s = spectral_summary(net, {}, 300);
  CHECK(s.solver == SolverKind::kFull);
  CHECK(s.n == 300);
  CHECK(s.num_nodes == net.num_nodes());
  CHECK(s.lambda2_lap > 0.0);
  CHECK(s.lambda2_lap <= s.lambdaN_lap);
  CHECK(s.sync_ratio >= 1.0);
  CHECK(s.lambdaN_lap <= 2.0 * static_cast<double>(max_degree(net).degree));
  CHECK(s.lambda1_adj <= static_cast<double>(max_degree(net).degree));

  SpectralOptions iter_opts;
  iter_opts.dense_threshold = 10;  // force the iterative path
  const auto si = spectral_summary(net, iter_opts, 300);
  CHECK(si.solver == SolverKind::kIterative);
  CHECK(si.lambda2_lap == Catch::Approx(s.lambda2_lap).epsilon(1e-6));
  CHECK(si.lambdaN_lap == Catch::Approx(s.lambdaN_lap).epsilon(1e-6));
  CHECK(si.lambda1_adj == Catch::Approx(s.lambda1_adj).epsilon(1e-6));
}

TEST_CASE("identical seed and tolerance give bit-identical summaries") {
  const auto net = build_network(300, sieve1k());
  SpectralOptions opts;
  opts.seed = 42;
  opts.dense_threshold = 10;  // force the iterative path
  const auto a = spectral_summary(net, opts, 300);
  const auto b = spectral_summary(net, opts, 300);
  CHECK(std::memcmp(&a.lambda1_adj, &b.lambda1_adj, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.lambda2_lap, &b.lambda2_lap, sizeof(double)) == 0);
  CHECK(std::memcmp(&a.lambdaN_lap, &b.lambdaN_lap, sizeof(double)) == 0);
  CHECK(a.iterations == b.iterations);
}
