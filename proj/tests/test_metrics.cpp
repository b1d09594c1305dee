#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "coprime/metrics.hpp"
#include "oracle_helpers.hpp"

using namespace coprime;

namespace {
const SieveTable& sieve2k() {
  static const SieveTable s = build_sieve(2000);
  return s;
}
}  // namespace

TEST_CASE("link density") {
  const auto net10 = build_network(10, sieve2k());
  CHECK(link_density(net10).value == Catch::Approx(0.3));  // 3 / C(5,2)
  CHECK_THROWS_AS(link_density(build_network(4, sieve2k())), std::domain_error);

  // deviation from 6/pi^2 shrinks with n
  const auto d200 = link_density(build_network(200, sieve2k()));
  const auto d2000 = link_density(build_network(2000, sieve2k()));
  CHECK(d2000.deviation < d200.deviation);
}

TEST_CASE("average degree") {
  const auto net10 = build_network(10, sieve2k());
  CHECK(average_degree(net10) == Catch::Approx(1.2));  // 6/5
}

TEST_CASE("BFS distances match Floyd-Warshall up to n=150") {
  for (std::int64_t n : {10, 30, 49, 100, 150}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto ref = oracle::brute_coprime_network(n);
    const auto fw = oracle::floyd_warshall(ref);
    for (std::int64_t u = 0; u < net.num_nodes(); ++u) {
      const auto dist = bfs_distances(net, u);
      for (std::int64_t v = 0; v < net.num_nodes(); ++v)
        CHECK(dist[v] == fw[u][v]);
    }
  }
}

TEST_CASE("diameter agrees with the dense oracle") {
  for (std::int64_t n : {49, 80, 120, 150}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto fw = oracle::floyd_warshall(oracle::brute_coprime_network(n));
    std::int64_t want = 0;
    bool connected = true;
    for (const auto& row : fw)
      for (std::int64_t x : row) {
        if (x < 0) connected = false;
        if (x > want) want = x;
      }
    const auto got = diameter(net);
    REQUIRE(got.connected == connected);
    if (connected) CHECK(got.diameter == want);
  }
}

TEST_CASE("diameter reports disconnected networks") {
  const auto net30 = build_network(30, sieve2k());
  const auto res = diameter(net30);
  CHECK(!res.connected);
  CHECK(res.components == 2);  // node 30 is isolated, rest are connected
  CHECK(res.to_string() == "disconnected");
  CHECK(!is_connected(net30));
  CHECK(is_connected(build_network(49, sieve2k())));
}

TEST_CASE("eccentricity bounds agree with exact eccentricities") {
  const auto net = build_network(100, sieve2k());
  for (std::int64_t u = 0; u < net.num_nodes(); ++u) {
    const std::int64_t ecc = bfs_eccentricity(net, u);
    CHECK(eccentricity_at_most(net, u, ecc));
    CHECK(!eccentricity_at_most(net, u, ecc - 1));
  }
  const auto d = diameter(net);
  REQUIRE(d.connected);
  CHECK(all_eccentricities_at_most(net, d.diameter));
  std::int64_t witness = -1;
  CHECK(!all_eccentricities_at_most(net, d.diameter - 1, &witness));
  CHECK(witness >= 0);
}

TEST_CASE("triangles per node against triple enumeration") {
  for (std::int64_t n : {10, 25, 49, 100}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto ref = oracle::brute_coprime_network(n);
    const auto tri = triangles_per_node(net);
    for (std::int64_t u = 0; u < net.num_nodes(); ++u)
      CHECK(tri[u] == ref.triangles_at(u));
    CHECK(triangle_count(net) == ref.triangle_total());
  }
}

TEST_CASE("triangle counts on worked instances") {
  const auto net25 = build_network(25, sieve2k());
  const auto tri25 = triangles_per_node(net25);
  // triple enumeration: neighbors of 4 are {9,15,21,25}; coprime pairs
  // among them are (9,25) and (21,25), giving triangles 4-9-25 and 4-21-25
  CHECK(tri25[net25.index(4)] == 2);

  const auto net10 = build_network(10, sieve2k());
  const auto tri10 = triangles_per_node(net10);
  CHECK(tri10[net10.index(9)] == 0);  // neighbors 4, 8, 10 pairwise even
  for (std::int64_t u = 0; u < net10.num_nodes(); ++u)
    if (net10.degrees[u] <= 1) CHECK(tri10[u] == 0);
}

TEST_CASE("local clustering records") {
  const auto net25 = build_network(25, sieve2k());
  const auto rec4 = local_clustering(net25, 4, sieve2k());
  CHECK(rec4.degree == 4);
  CHECK(rec4.triangles == 2);
  CHECK(rec4.local_cc == Catch::Approx(2.0 / 6.0));
  // asymptote for k = 2^a: (6/pi^2) * 4/3 = 8/pi^2
  CHECK(rec4.asymptotic_cc ==
        Catch::Approx(8.0 / (std::numbers::pi * std::numbers::pi)));

  // degenerate: degree < 2 gets cc 0 and the flag
  const auto net10 = build_network(10, sieve2k());
  const auto rec4_n10 = local_clustering(net10, 4, sieve2k());
  CHECK(rec4_n10.degree == 1);
  CHECK(rec4_n10.degenerate);
  CHECK(rec4_n10.local_cc == 0.0);

  // triangles never exceed C(d,2)
  for (std::int64_t u = 0; u < net25.num_nodes(); ++u) {
    const auto rec = local_clustering(net25, net25.labels[u], sieve2k());
    CHECK(rec.triangles <= rec.degree * (rec.degree - 1) / 2);
    CHECK(rec.local_cc >= 0.0);
    CHECK(rec.local_cc <= 1.0);
  }
}

TEST_CASE("clustering identical across equal radicals") {
  const auto net = build_network(100, sieve2k());
  const auto r4 = local_clustering(net, 4, sieve2k());
  const auto r8 = local_clustering(net, 8, sieve2k());
  const auto r16 = local_clustering(net, 16, sieve2k());
  CHECK(r4.degree == r8.degree);
  CHECK(r4.triangles == r8.triangles);
  CHECK(r8.triangles == r16.triangles);
  CHECK(r4.local_cc == r16.local_cc);
  CHECK(r4.asymptotic_cc == r16.asymptotic_cc);
}

TEST_CASE("average local clustering") {
  const auto net = build_network(200, sieve2k());
  const auto tri = triangles_per_node(net);
  double want = 0.0;
  for (std::int64_t u = 0; u < net.num_nodes(); ++u) {
    const std::int64_t d = net.degrees[u];
    if (d >= 2) want += 2.0 * tri[u] / (static_cast<double>(d) * (d - 1));
  }
  want /= static_cast<double>(net.num_nodes());
  CHECK(average_local_clustering(net) == Catch::Approx(want));
}

TEST_CASE("labeled cycles match tuple enumeration") {
  for (std::int64_t n : {10, 20, 25, 30}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto ref = oracle::brute_coprime_network(n);
    for (std::int64_t r = 3; r <= 5; ++r) {
      CAPTURE(r);
      CHECK(labeled_cycles_exact(net, r) ==
            oracle::enumerate_labeled_cycles(ref, r));
    }
  }
}

TEST_CASE("labeled cycle worked instances") {
  const auto net25 = build_network(25, sieve2k());
  CHECK(labeled_cycles_exact(net25, 3) == 6 * triangle_count(net25));

  const auto net10 = build_network(10, sieve2k());
  CHECK(labeled_cycles_exact(net10, 3) == 0);
  CHECK(labeled_cycles_exact(net10, 4) == 0);  // star on 9 has no cycle

  CHECK_THROWS_AS(labeled_cycles_exact(net10, 2), std::domain_error);
  const auto big = build_network(300, sieve2k());
  CHECK_THROWS_AS(labeled_cycles_exact(big, 6), resource_cap_error);
}

TEST_CASE("closed walks equal dense matrix-power traces") {
  for (std::int64_t n : {10, 25, 49}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    const auto ref = oracle::brute_coprime_network(n);
    for (std::int64_t r = 2; r <= 6; ++r) {
      CAPTURE(r);
      CHECK(closed_walks(net, r) == oracle::dense_trace_power(ref, r));
    }
  }
  CHECK_THROWS_AS(closed_walks(build_network(10, sieve2k()), 1),
                  std::domain_error);
}

TEST_CASE("trace identities") {
  for (std::int64_t n : {25, 49, 100, 200}) {
    CAPTURE(n);
    const auto net = build_network(n, sieve2k());
    CHECK(closed_walks(net, 2) == 2 * net.edge_count);
    CHECK(closed_walks(net, 3) == 6 * triangle_count(net));
    CHECK(closed_walks(net, 4) == sum_codegree_squares(net));
  }
}

TEST_CASE("cycle count record") {
  const auto net = build_network(100, sieve2k());
  const auto rec = cycle_count_record(net, 4);
  CHECK(rec.r == 4);
  REQUIRE(rec.exact_labeled.has_value());
  CHECK(*rec.exact_labeled <= rec.closed_walks);  // cycles are closed walks
  CHECK(rec.upper_bound ==
        Catch::Approx(std::pow(kCoprimeDensity * 100.0, 4.0)));
  CHECK(rec.wpr_estimate > 0.0);

  const auto net10 = build_network(10, sieve2k());
  const auto rec10 = cycle_count_record(net10, 3);
  REQUIRE(rec10.exact_labeled.has_value());
  CHECK(*rec10.exact_labeled == 0);
}

TEST_CASE("degree histogram") {
  const auto net10 = build_network(10, sieve2k());
  const auto hist = degree_histogram(net10);
  // brute-force degrees at n=10 are [1, 0, 1, 3, 1] for labels [4,6,8,9,10]
  const std::map<std::int64_t, std::int64_t> want{{0, 1}, {1, 3}, {3, 1}};
  CHECK(hist == want);

  std::int64_t total = 0;
  for (const auto& [d, c] : hist) total += c;
  CHECK(total == net10.num_nodes());

  // equal radicals, equal degrees: 4, 8, 16, 32, 64 land in one bin at n=100
  const auto net100 = build_network(100, sieve2k());
  const auto h100 = degree_histogram(net100);
  const std::int64_t d4 = degree_of(net100, 4);
  CHECK(degree_of(net100, 8) == d4);
  CHECK(degree_of(net100, 16) == d4);
  CHECK(h100.at(d4) >= 5);
}

TEST_CASE("compute_stats") {
  const auto net = build_network(100, sieve2k());
  const auto s = compute_stats(net, {.with_diameter = true,
                                     .with_clustering = true});
  CHECK(s.n == 100);
  CHECK(s.num_nodes == 74);
  CHECK(s.num_edges == net.edge_count);
  CHECK(s.link_density == Catch::Approx(link_density(net).value));
  CHECK(s.avg_degree == Catch::Approx(average_degree(net)));
  CHECK(s.max_degree == 61);
  CHECK(s.diam.connected);
  CHECK(s.diam.diameter == 3);
  REQUIRE(s.avg_clustering.has_value());
  CHECK(*s.avg_clustering == Catch::Approx(average_local_clustering(net)));
}
