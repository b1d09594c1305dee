#include <catch2/catch_amalgamated.hpp>

#include "coprime/generators.hpp"
#include "coprime/metrics.hpp"

using namespace coprime;

namespace {
const SieveTable& sieve2k() {
  static const SieveTable s = build_sieve(2000);
  return s;
}

void check_simple_symmetric(const RandomGraph& g) {
  std::int64_t edges = 0, degsum = 0;
  for (std::int64_t u = 0; u < g.N; ++u) {
    REQUIRE(!g.adj.test(u, u));
    REQUIRE(g.degree(u) == g.adj.row_popcount(u));
    degsum += g.degree(u);
    for (std::int64_t v = u + 1; v < g.N; ++v) {
      REQUIRE(g.adj.test(u, v) == g.adj.test(v, u));
      edges += g.adj.test(u, v);
    }
  }
  CHECK(edges == g.achieved_edges);
  CHECK(degsum == 2 * g.achieved_edges);
}
}  // namespace

TEST_CASE("gen_er boundary cases") {
  const auto k5 = gen_er(5, 10, 1);  // M = C(5,2): complete graph
  CHECK(k5.achieved_edges == 10);
  for (std::int64_t u = 0; u < 5; ++u)
    for (std::int64_t v = 0; v < 5; ++v)
      CHECK(k5.adj.test(u, v) == (u != v));

  const auto empty = gen_er(5, 0, 1);
  CHECK(empty.achieved_edges == 0);

  CHECK_THROWS_AS(gen_er(5, 11, 1), std::domain_error);
  CHECK_THROWS_AS(gen_er(5, -1, 1), std::domain_error);
  CHECK_THROWS_AS(gen_er(0, 0, 1), std::domain_error);
}

TEST_CASE("gen_er achieves the exact edge count") {
  for (std::int64_t N : {10, 57, 200})
    for (std::int64_t frac = 1; frac <= 3; ++frac) {
      const std::int64_t M = frac * N * (N - 1) / 8;
      const auto g = gen_er(N, M, 99 + frac);
      CHECK(g.achieved_edges == M);
      CHECK(g.target_edges == M);
      check_simple_symmetric(g);
    }
}

TEST_CASE("gen_er determinism") {
  const auto a = gen_er(120, 2000, 7);
  const auto b = gen_er(120, 2000, 7);
  CHECK(a.adj == b.adj);
  const auto c = gen_er(120, 2000, 8);
  CHECK(!(c.adj == a.adj));
}

TEST_CASE("gen_ba boundary cases") {
  // N = m+1: just the seed clique
  const auto clique = gen_ba(5, 4, 1);
  CHECK(clique.achieved_edges == 10);
  for (std::int64_t u = 0; u < 5; ++u)
    for (std::int64_t v = 0; v < 5; ++v)
      CHECK(clique.adj.test(u, v) == (u != v));

  CHECK_THROWS_AS(gen_ba(5, 0, 1), std::domain_error);
  CHECK_THROWS_AS(gen_ba(5, 5, 1), std::domain_error);
  CHECK_THROWS_AS(gen_ba(1, 1, 1), std::domain_error);
}

TEST_CASE("gen_ba edge count formula and handshake") {
  for (auto [N, m] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {30, 3}, {100, 7}, {100, 60}, {200, 120}}) {
    CAPTURE(N, m);
    const auto g = gen_ba(N, m, 5);
    CHECK(g.achieved_edges == ba_edge_count(N, m));
    check_simple_symmetric(g);
    // every arrival has at least its m attachment edges
    for (std::int64_t u = m + 1; u < N; ++u) CHECK(g.degree(u) >= m);
  }
}

TEST_CASE("gen_ba determinism") {
  const auto a = gen_ba(80, 12, 3);
  const auto b = gen_ba(80, 12, 3);
  CHECK(a.adj == b.adj);
  const auto c = gen_ba(80, 12, 4);
  CHECK(!(c.adj == a.adj));
}

TEST_CASE("match_parameters") {
  const auto net10 = build_network(10, sieve2k());
  const auto p = match_parameters(net10);
  CHECK(p.er.N == 5);
  CHECK(p.er.M == 3);
  CHECK(p.ba.m == 1);  // round(3/5) rounds up to the minimum 1

  const auto net4 = build_network(4, sieve2k());
  CHECK_THROWS_AS(match_parameters(net4), std::domain_error);
}

TEST_CASE("matched BA edge gap stays within the model bound") {
  for (std::int64_t n : {100, 500, 2000}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto p = match_parameters(net);
    const double gap =
        std::abs(static_cast<double>(p.ba.achieved_edges - p.ba.target_edges)) /
        static_cast<double>(p.ba.target_edges);
    const double bound = (static_cast<double>(p.ba.m) + 1.0) /
                         static_cast<double>(p.ba.N);
    CHECK(gap <= bound);
    // the generated graph really produces the predicted count
    if (n <= 500) {
      const auto g = gen_ba(p.ba.N, p.ba.m, 11);
      CHECK(g.achieved_edges == p.ba.achieved_edges);
    }
  }
}

TEST_CASE("random graphs work with the generic analytics") {
  const auto g = gen_er(150, 3000, 21);
  CHECK(total_edges(g) == 3000);
  CHECK(link_density(g).value ==
        Catch::Approx(2.0 * 3000 / (150.0 * 149.0)));
  const auto hist = degree_histogram(g);
  std::int64_t total = 0;
  for (const auto& [d, c] : hist) total += c;
  CHECK(total == 150);
}
