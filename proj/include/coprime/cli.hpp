#pragma once

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coprime/common.hpp"
#include "coprime/io.hpp"
#include "coprime/metrics.hpp"
#include "coprime/network.hpp"
#include "coprime/prng.hpp"
#include "coprime/pseudorandom.hpp"
#include "coprime/spectral.hpp"
#include "coprime/verify.hpp"

namespace coprime::cli {

// Exit codes: 0 success / all claims pass, 1 verification or runtime
// failure, 2 usage error, 3 resource-cap refusal.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

struct RunConfig {
  std::string command;
  std::int64_t n = 0;
  std::int64_t n_min = 100;
  std::int64_t n_max = 10000;
  std::int64_t points = 20;
  bool linear = false;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string format = "csv";
  std::int64_t max_n = kDefaultMaxN;
  std::int64_t max_pair_nodes = kDefaultMaxPairLoopNodes;
  std::int64_t dense_cap = 4096;
  double spectral_tol = 1e-9;
  bool timestamp = false;
  std::vector<std::string> metrics = {"basic"};
  std::vector<std::string> claims;
  std::string range;    // "a..b" claim range override
  std::string t_range;  // lemma t override "a..b"
  bool clustering_table = false;
  bool histogram_table = false;
  std::vector<std::int64_t> cycle_lengths;
};

namespace detail {

inline OutputMeta base_meta(const RunConfig& cfg) {
  OutputMeta m;
  m.add("tool", "coprime-networks");
  m.add("version", kVersion);
  m.add("command", cfg.command);
  m.add("seed", static_cast<std::int64_t>(cfg.seed));
  m.add("format", cfg.format);
  m.add("max_n", cfg.max_n);
  m.add("prng", Xoshiro256StarStar::kName);
  if (cfg.timestamp) {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    m.add("timestamp", buf);
  }
  return m;
}

inline std::string out_path(const RunConfig& cfg, const std::string& name) {
  std::filesystem::create_directories(cfg.out_dir);
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

inline bool parse_range(const std::string& s, std::int64_t& lo,
                        std::int64_t& hi) {
  const auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoll(s.substr(0, pos));
    hi = std::stoll(s.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return lo <= hi;
}

inline bool has_metric(const RunConfig& cfg, const std::string& m) {
  for (const auto& x : cfg.metrics)
    if (x == m || x == "all") return true;
  return false;
}

}  // namespace detail

inline int cmd_build(const RunConfig& cfg) {
  if (cfg.n < 4) {
    std::cerr << "build: --n must be >= 4\n";
    return kExitUsage;
  }
  const auto sieve = build_sieve(cfg.n);
  const auto net = build_network(cfg.n, sieve, cfg.max_n);
  auto meta = detail::base_meta(cfg);
  meta.add("n", cfg.n);
  meta.add("nodes", net.num_nodes());
  meta.add("edges", net.edge_count);

  const std::string edge_path =
      detail::out_path(cfg, "edges_n" + std::to_string(cfg.n) + ".txt");
  {
    std::ofstream os(edge_path);
    if (!os) throw std::runtime_error("cannot open " + edge_path);
    write_edge_list(os, net, meta);
  }
  const std::string node_path = detail::out_path(
      cfg, "nodes_n" + std::to_string(cfg.n) +
               (cfg.format == "json" ? ".json" : ".csv"));
  write_file(node_path, node_table(net, sieve), meta, cfg.format);
  std::cout << "wrote " << edge_path << " and " << node_path << " ("
            << net.num_nodes() << " nodes, " << net.edge_count << " edges)\n";

  const std::string ext = cfg.format == "json" ? ".json" : ".csv";
  if (cfg.clustering_table) {
    Table t;
    t.columns = {"label", "degree", "triangles", "cc", "asymptotic_cc"};
    const auto tri = triangles_per_node(net);
    for (std::int64_t u = 0; u < net.num_nodes(); ++u) {
      const std::int64_t d = net.degrees[u];
      const double cc =
          d >= 2 ? 2.0 * static_cast<double>(tri[u]) /
                       (static_cast<double>(d) * static_cast<double>(d - 1))
                 : 0.0;
      t.add_row({net.labels[u], d, tri[u], cc,
                 asymptotic_clustering(factor_signature(net.labels[u], sieve))});
    }
    const auto path = detail::out_path(
        cfg, "clustering_n" + std::to_string(cfg.n) + ext);
    write_file(path, t, meta, cfg.format);
    std::cout << "wrote " << path << "\n";
  }
  if (cfg.histogram_table) {
    Table t;
    t.columns = {"degree", "count"};
    for (const auto& [d, c] : degree_histogram(net)) t.add_row({d, c});
    const auto path =
        detail::out_path(cfg, "histogram_n" + std::to_string(cfg.n) + ext);
    write_file(path, t, meta, cfg.format);
    std::cout << "wrote " << path << "\n";
  }
  if (!cfg.cycle_lengths.empty()) {
    Table t;
    t.columns = {"r", "exact", "walks", "bound", "wpr_estimate"};
    for (std::int64_t r : cfg.cycle_lengths) {
      const auto rec = cycle_count_record(net, r);
      t.add_row({rec.r,
                 rec.exact_labeled ? Cell(*rec.exact_labeled)
                                   : Cell(std::string()),
                 rec.closed_walks, rec.upper_bound, rec.wpr_estimate});
    }
    const auto path =
        detail::out_path(cfg, "cycles_n" + std::to_string(cfg.n) + ext);
    write_file(path, t, meta, cfg.format);
    std::cout << "wrote " << path << "\n";
  }
  return kExitOk;
}

inline int cmd_scan(const RunConfig& cfg) {
  if (cfg.n_min < 4 || cfg.n_min > cfg.n_max || cfg.points < 1) {
    std::cerr << "scan: need 4 <= n-min <= n-max and points >= 1\n";
    return kExitUsage;
  }
  const auto sieve = build_sieve(cfg.n_max);
  std::vector<std::int64_t> grid;
  if (cfg.linear) {
    const std::int64_t stride = std::max<std::int64_t>(
        1, (cfg.n_max - cfg.n_min) / std::max<std::int64_t>(1, cfg.points - 1));
    for (std::int64_t n = cfg.n_min; n <= cfg.n_max; n += stride)
      grid.push_back(n);
  } else {
    grid = coprime::detail::log_grid(cfg.n_min, cfg.n_max, cfg.points);
  }

  const bool want_clustering = detail::has_metric(cfg, "clustering");
  const bool want_wpr = detail::has_metric(cfg, "wpr");
  const bool want_spectral = detail::has_metric(cfg, "spectral");

  Table t;
  t.columns = {"n", "N", "E", "link_density", "avg_degree", "max_degree",
               "diameter"};
  if (want_clustering) t.columns.push_back("avg_clustering");
  if (want_wpr) {
    t.columns.insert(t.columns.end(),
                     {"wpr_deviation", "wpr_normalized", "lambda1_ratio",
                      "r_threshold", "r_over_log_n"});
  }
  if (want_spectral) {
    t.columns.insert(t.columns.end(),
                     {"lambda2", "lambdaN", "sync_ratio", "solver"});
  }
  t.columns.push_back("error");

  SpectralOptions sopts;
  sopts.tol = cfg.spectral_tol;
  sopts.seed = cfg.seed;
  sopts.dense_threshold = cfg.dense_cap;

  for (std::int64_t n : grid) {
    std::vector<Cell> row;
    try {
      const auto net = build_network(n, sieve, cfg.max_n);
      const auto md = max_degree(net);
      const auto diam = diameter(net);
      row = {n,
             net.num_nodes(),
             net.edge_count,
             net.num_nodes() >= 2 ? link_density(net).value : 0.0,
             average_degree(net),
             md.degree,
             diam.to_string()};
      if (want_clustering) row.push_back(average_local_clustering(net));
      if (want_wpr) {
        const auto rep = wpr_report(net, sieve, sopts, cfg.max_pair_nodes);
        row.push_back(rep.codeg_deviation_sum);
        row.push_back(rep.normalized);
        row.push_back(rep.lambda1_ratio);
        row.push_back(rep.max_cycle_len_estimate);
        row.push_back(rep.r_over_log_n);
      }
      if (want_spectral) {
        const auto s = spectral_summary(net, sopts, n);
        row.push_back(s.lambda2_lap);
        row.push_back(s.lambdaN_lap);
        row.push_back(s.sync_ratio);
        row.push_back(std::string(solver_name(s.solver)));
      }
      row.push_back(std::string());
    } catch (const std::exception& e) {
      // row-level error marker; the scan continues
      row.assign(t.columns.size() - 1, std::string());
      row[0] = n;
      row.push_back(std::string(e.what()));
    }
    t.add_row(std::move(row));
  }

  auto meta = detail::base_meta(cfg);
  meta.add("n_min", cfg.n_min);
  meta.add("n_max", cfg.n_max);
  meta.add("points", static_cast<std::int64_t>(grid.size()));
  meta.add("grid", cfg.linear ? "linear" : "log");
  std::string mlist;
  for (const auto& m : cfg.metrics) mlist += (mlist.empty() ? "" : ",") + m;
  meta.add("metrics", mlist);
  const std::string path = detail::out_path(
      cfg, "scan_" + std::to_string(cfg.n_min) + "_" +
               std::to_string(cfg.n_max) +
               (cfg.format == "json" ? ".json" : ".csv"));
  write_file(path, t, meta, cfg.format);
  std::cout << "wrote " << path << " (" << t.rows.size() << " rows)\n";
  return kExitOk;
}

inline int cmd_verify(const RunConfig& cfg) {
  VerifyOptions v;
  v.seed = cfg.seed;
  v.max_n_cap = cfg.max_n;
  v.sweep_dense_cap = cfg.dense_cap;
  v.spectral.tol = cfg.spectral_tol;

  std::vector<std::string> ids =
      cfg.claims.empty() ? all_claim_ids() : cfg.claims;
  for (auto& id : ids)
    for (auto& c : id) c = static_cast<char>(std::toupper(c));

  std::int64_t lo = 0, hi = 0;
  if (!cfg.range.empty()) {
    if (!detail::parse_range(cfg.range, lo, hi)) {
      std::cerr << "verify: bad --range, expected a..b\n";
      return kExitUsage;
    }
    // the range override lands on each selected claim's natural window
    for (const auto& id : ids) {
      if (id == "T1") v.isolated_lo = lo, v.isolated_hi = hi;
      if (id == "T2" || id == "T3") v.formula_lo = lo, v.formula_hi = hi;
      if (id == "T4") {
        v.formula_lo = lo;
        v.formula_hi = hi;
        v.maxdeg_lo = lo;
        v.maxdeg_hi = hi;
      }
      if (id == "T6") {
        v.diam3_lo = lo;
        v.diam3_hi = std::min<std::int64_t>(hi, 288);
        v.diam2_lo = std::max<std::int64_t>(lo, 289);
        v.diam2_hi = hi;
      }
      if (id == "T7") v.identities_max_n = hi;
      if (id == "L5") v.lemma5_max = hi;
    }
  }
  if (!cfg.t_range.empty()) {
    std::int64_t tlo = 0, thi = 0;
    if (!detail::parse_range(cfg.t_range, tlo, thi)) {
      std::cerr << "verify: bad --t, expected a..b\n";
      return kExitUsage;
    }
    v.lemmas.t_min = tlo;
    v.lemmas.t_max = thi;
  }

  const auto sieve = build_sieve(required_sieve_limit(ids, v));
  bool all_pass = true;
  nlohmann::json jreports = nlohmann::json::array();
  for (const auto& id : ids) {
    VerificationReport rep;
    try {
      rep = verify_claim(id, v, sieve);
    } catch (const resource_cap_error& e) {
      std::cerr << id << ": " << e.what() << "\n";
      return kExitResourceCap;
    }
    all_pass = all_pass && rep.pass;
    std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.claim << " ("
              << rep.tested_range << ", "
              << coprime::detail::fmt(rep.elapsed_seconds) << "s)\n";
    for (const auto& c : rep.checks)
      std::cout << "       " << (c.pass ? "ok   " : "FAIL ") << c.name
                << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    for (const auto& ce : rep.counterexamples)
      std::cout << "       counterexample: " << ce << "\n";

    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : rep.checks)
      jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    jreports.push_back({{"claim", rep.claim},
                        {"tested_range", rep.tested_range},
                        {"convention_notes", rep.convention_notes},
                        {"pass", rep.pass},
                        {"checks", jc},
                        {"counterexamples", rep.counterexamples},
                        {"elapsed_seconds", rep.elapsed_seconds}});
  }
  auto meta = detail::base_meta(cfg);
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [k, val] : meta.entries) config[k] = val;
  const std::string path = detail::out_path(cfg, "verify_report.json");
  std::ofstream os(path);
  os << nlohmann::json{{"config", config}, {"reports", jreports}}.dump(2)
     << "\n";
  std::cout << "wrote " << path << "\n";
  return all_pass ? kExitOk : kExitVerifyFail;
}

inline int cmd_compare(const RunConfig& cfg) {
  if (cfg.n < 10) {
    std::cerr << "compare: --n must be >= 10\n";
    return kExitUsage;
  }
  const auto sieve = build_sieve(cfg.n);
  SpectralOptions sopts;
  sopts.tol = cfg.spectral_tol;
  sopts.seed = cfg.seed;
  sopts.dense_threshold = cfg.dense_cap;
  Table t;
  t.columns = {"family",   "n",     "N",      "E_actual",   "lambda2",
               "lambdaN",  "ratio", "solver", "iterations", "residual",
               "seed",     "error"};
  const auto net = build_network(cfg.n, sieve, cfg.max_n);
  const auto matched = match_parameters(net);
  // one row per family; a disconnected comparator (possible at tiny n)
  // becomes a row-level error marker rather than aborting the table
  for (GraphFamily fam :
       {GraphFamily::kCoprime, GraphFamily::kEr, GraphFamily::kBa}) {
    std::vector<Cell> row;
    try {
      SpectralSummary s;
      switch (fam) {
        case GraphFamily::kCoprime:
          s = spectral_summary(net, sopts, cfg.n);
          break;
        case GraphFamily::kEr:
          s = spectral_summary(connected_er(matched.er.N, matched.er.M,
                                            cfg.seed),
                               sopts, cfg.n);
          break;
        case GraphFamily::kBa:
          s = spectral_summary(connected_ba(matched.ba.N, matched.ba.m,
                                            cfg.seed),
                               sopts, cfg.n);
          break;
      }
      row = {std::string(family_name(fam)), cfg.n, s.num_nodes, s.num_edges,
             s.lambda2_lap, s.lambdaN_lap, s.sync_ratio,
             std::string(solver_name(s.solver)), s.iterations,
             s.residual_norm, static_cast<std::int64_t>(cfg.seed),
             std::string()};
    } catch (const std::exception& e) {
      row.assign(t.columns.size(), std::string());
      row[0] = std::string(family_name(fam));
      row[1] = cfg.n;
      row.back() = std::string(e.what());
    }
    t.add_row(std::move(row));
  }
  auto meta = detail::base_meta(cfg);
  meta.add("n", cfg.n);
  const std::string path = detail::out_path(
      cfg, "compare_n" + std::to_string(cfg.n) + "_seed" +
               std::to_string(cfg.seed) +
               (cfg.format == "json" ? ".json" : ".csv"));
  write_file(path, t, meta, cfg.format);
  std::cout << "wrote " << path << "\n";
  return kExitOk;
}

inline int run_cli(std::vector<std::string> args) {
  CLI::App app{"coprime network of composite numbers: build, scan, verify, "
               "compare"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("COPRIME_OUT_DIR")) cfg.out_dir = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--max-n", cfg.max_n, "bound cap for network builds");
    sub->add_option("--max-pair-nodes", cfg.max_pair_nodes,
                    "node cap for the O(N^3/64) pair loops");
    sub->add_option("--dense-cap", cfg.dense_cap,
                    "largest N solved by the dense eigensolver");
    sub->add_option("--spectral-tol", cfg.spectral_tol,
                    "Rayleigh lock tolerance");
    sub->add_flag("--timestamp", cfg.timestamp,
                  "include a timestamp line in output headers");
  };

  auto* build = app.add_subcommand("build", "build one network, export edge "
                                            "list and node table");
  build->add_option("--n", cfg.n, "largest node index")->required();
  build->add_flag("--clustering", cfg.clustering_table,
                  "also write the per-node clustering table");
  build->add_flag("--histogram", cfg.histogram_table,
                  "also write the degree histogram table");
  build->add_option("--cycles", cfg.cycle_lengths,
                    "also write a cycle table for these lengths r")
      ->delimiter(',');
  add_common(build);

  auto* scan = app.add_subcommand(
      "scan", "sweep n and emit one row of metrics per bound");
  scan->add_option("--n-min", cfg.n_min, "smallest bound");
  scan->add_option("--n-max", cfg.n_max, "largest bound");
  scan->add_option("--points", cfg.points, "grid size");
  scan->add_flag("--linear", cfg.linear, "linear grid (default log-spaced)");
  scan->add_option("--metrics", cfg.metrics,
                   "basic, clustering, wpr, spectral, all")
      ->delimiter(',');
  add_common(scan);

  auto* verify = app.add_subcommand(
      "verify", "run theorem/lemma claim suites (T1..T8, L1..L9, WPR, SYNC)");
  verify->add_option("claims", cfg.claims, "claim ids (default: all)");
  verify->add_option("--range", cfg.range, "range override a..b");
  verify->add_option("--t", cfg.t_range, "lemma t range a..b");
  add_common(verify);

  auto* compare = app.add_subcommand(
      "compare", "coprime vs matched ER and BA spectral table");
  compare->add_option("--n", cfg.n, "largest node index")->required();
  add_common(compare);

  std::vector<const char*> argv{"coprime"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      cfg.command = "build";
      return cmd_build(cfg);
    }
    if (scan->parsed()) {
      cfg.command = "scan";
      return cmd_scan(cfg);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg);
    }
    cfg.command = "compare";
    return cmd_compare(cfg);
  } catch (const resource_cap_error& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::domain_error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
}

}  // namespace coprime::cli
