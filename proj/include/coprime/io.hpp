#pragma once

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "coprime/common.hpp"
#include "coprime/network.hpp"
#include "coprime/sieve.hpp"

namespace coprime {

using Cell = std::variant<std::int64_t, double, std::string>;

inline std::string format_cell(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c))
    return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(c));
    return buf;
  }
  return std::get<std::string>(c);
}

// Column-oriented result table; one CSV row per entry, mirrored one-to-one
// into JSON rows.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// Resolved run configuration echoed into every output file, so a result is
// reproducible from its own header.
struct OutputMeta {
  // insertion-ordered key/value pairs
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& k, const std::string& v) {
    entries.emplace_back(k, v);
  }
  void add(const std::string& k, std::int64_t v) {
    entries.emplace_back(k, std::to_string(v));
  }
};

inline void write_csv(std::ostream& os, const Table& t, const OutputMeta& meta) {
  for (const auto& [k, v] : meta.entries) os << "# " << k << "=" << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_cell(row[i]);
    os << "\n";
  }
}

inline nlohmann::json to_json(const Table& t, const OutputMeta& meta) {
  nlohmann::json config = nlohmann::json::object();
  for (const auto& [k, v] : meta.entries) config[k] = v;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::int64_t>(c))
        obj[t.columns[i]] = std::get<std::int64_t>(c);
      else if (std::holds_alternative<double>(c))
        obj[t.columns[i]] = std::get<double>(c);
      else
        obj[t.columns[i]] = std::get<std::string>(c);
    }
    rows.push_back(std::move(obj));
  }
  return nlohmann::json{{"config", config}, {"rows", rows}};
}

inline void write_json(std::ostream& os, const Table& t,
                       const OutputMeta& meta) {
  os << to_json(t, meta).dump(2) << "\n";
}

// Edge list: one "u v" line per edge with u < v, node labels (composite
// numbers), not indices.
inline void write_edge_list(std::ostream& os, const CoprimeNetwork& net,
                            const OutputMeta& meta) {
  for (const auto& [k, v] : meta.entries) os << "# " << k << "=" << v << "\n";
  const std::int64_t N = net.num_nodes();
  for (std::int64_t u = 0; u < N; ++u) {
    const auto row = net.row(u);
    const std::size_t w0 = static_cast<std::size_t>(u >> 6);
    for (std::size_t w = w0; w < row.size(); ++w) {
      std::uint64_t x = row[w];
      if (w == w0) x &= ~((std::uint64_t{2} << (u & 63)) - 1);
      while (x) {
        const std::int64_t v =
            static_cast<std::int64_t>(w * 64 + std::countr_zero(x));
        os << net.labels[u] << " " << net.labels[v] << "\n";
        x &= x - 1;
      }
    }
  }
}

// Node table: label, degree, radical, omega.
inline Table node_table(const CoprimeNetwork& net, const SieveTable& sieve) {
  Table t;
  t.columns = {"label", "degree", "radical", "omega"};
  for (std::int64_t u = 0; u < net.num_nodes(); ++u) {
    const auto sig = factor_signature(net.labels[u], sieve);
    t.add_row({net.labels[u], net.degrees[u], sig.radical, sig.omega});
  }
  return t;
}

inline void write_file(const std::string& path, const Table& t,
                       const OutputMeta& meta, const std::string& format) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  if (format == "json")
    write_json(os, t, meta);
  else
    write_csv(os, t, meta);
}

}  // namespace coprime
