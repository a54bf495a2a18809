// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "domsuite/check_record.hpp"
#include "domsuite/errors.hpp"
#include "domsuite/graph.hpp"

namespace domsuite {

// graph6: size prefix, then the upper triangle x(i,j) for j = 1..n-1 and
// i = 0..j-1, packed big-endian into 6-bit groups; every byte is value+63.

namespace detail {

inline constexpr int kGraph6Offset = 63;

inline int graph6_value(char c, std::string_view line) {
  const int v = static_cast<unsigned char>(c) - kGraph6Offset;
  if (v < 0 || v > 63) {
    throw FormatError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                      " outside 63..126 in \"" + std::string(line) + "\"");
  }
  return v;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  const std::string_view original = line;
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw FormatError("graph6: empty record");
  std::size_t n = 0;
  std::size_t pos = 0;
  auto take = [&](std::size_t bytes) {
    if (line.size() < pos + bytes) throw FormatError("graph6: truncated size field");
    std::size_t v = 0;
    for (std::size_t k = 0; k < bytes; ++k) v = (v << 6) | static_cast<std::size_t>(detail::graph6_value(line[pos + k], original));
    pos += bytes;
    return v;
  };
  if (line[0] != '~') {
    n = take(1);
  } else if (line.size() > 1 && line[1] != '~') {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n == 0) throw FormatError("graph6: order 0");
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw FormatError("graph6: expected " + std::to_string(bytes) + " data bytes for order " +
                      std::to_string(n) + ", found " + std::to_string(line.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = detail::graph6_value(line[pos + k / 6], original);
      if ((group >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((detail::graph6_value(line[pos + k / 6], original) >> (5 - k % 6)) & 1) {
      throw FormatError("graph6: nonzero padding bits in \"" + std::string(original) + "\"");
    }
  }
  return Graph(n, edges);
}

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  auto put = [&](std::size_t v) { out.push_back(static_cast<char>(v + detail::kGraph6Offset)); };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63);
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        put(static_cast<std::size_t>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(static_cast<std::size_t>(acc << (6 - filled)));
  return out;
}

/// "n u1 v1 u2 v2 ..." with whitespace separators.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(std::move(t));
  if (tokens.empty()) throw FormatError("edge list: missing order");
  auto number = [](const std::string& t) {
    std::size_t used = 0;
    long long v = -1;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0) throw FormatError("edge list: bad token \"" + t + "\"");
    return static_cast<std::size_t>(v);
  };
  const std::size_t n = number(tokens[0]);
  if (n == 0) throw FormatError("edge list: order 0");
  if ((tokens.size() - 1) % 2 != 0) throw FormatError("edge list: odd number of endpoint tokens");
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < tokens.size(); k += 2) {
    const std::size_t u = number(tokens[k]);
    const std::size_t v = number(tokens[k + 1]);
    if (u >= n || v >= n) {
      throw FormatError("edge list: endpoint out of range in " + tokens[k] + " " + tokens[k + 1]);
    }
    if (u == v) throw FormatError("edge list: loop at vertex " + tokens[k]);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph(n, edges);
}

enum class CorpusFormat { graph6, edges };

struct CorpusEntry {
  std::string source_id;
  Graph graph;
  std::string record;  // the raw graph6 line (empty for edge lists)
};

/// An ordered, immutable list of graphs with unique source ids.
class Corpus {
 public:
  Corpus() = default;

  void add(CorpusEntry e) {
    if (std::any_of(entries_.begin(), entries_.end(),
                    [&](const CorpusEntry& x) { return x.source_id == e.source_id; })) {
      throw FormatError("duplicate source id " + e.source_id);
    }
    entries_.push_back(std::move(e));
  }

  void append(const Corpus& other) {
    for (const auto& e : other.entries_) add(e);
  }

  const std::vector<CorpusEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Entries whose order lies in [lo, hi].
  Corpus filter_order(std::size_t lo, std::size_t hi) const {
    Corpus out;
    for (const auto& e : entries_) {
      if (e.graph.order() >= lo && e.graph.order() <= hi) out.entries_.push_back(e);
    }
    return out;
  }

 private:
  std::vector<CorpusEntry> entries_;
};

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// graph6: one record per line, ids "file:line" (blank lines skipped).
/// edges: `path` is a file or a directory of files, one graph per file,
/// ids are file names.
inline Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format) {
  Corpus corpus;
  if (format == CorpusFormat::graph6) {
    std::istringstream in(detail::read_file(path));
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const std::string id = path.string() + ":" + std::to_string(line_no);
      try {
        Graph g = parse_graph6(line);
        corpus.add({id, std::move(g), line});
      } catch (const Error& e) {
        throw FormatError(id + ": " + e.what());
      }
    }
    return corpus;
  }
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& de : std::filesystem::directory_iterator(path)) {
      if (de.is_regular_file()) files.push_back(de.path());
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  for (const auto& f : files) {
    const std::string id = f.filename().string();
    try {
      corpus.add({id, parse_edge_list(detail::read_file(f)), {}});
    } catch (const Error& e) {
      throw FormatError(id + ": " + e.what());
    }
  }
  return corpus;
}

/// Published counts of connected graphs by order (OEIS A001349).
inline constexpr std::size_t kConnectedGraphCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

/// Loads data/graphs/connected_n{1..max_order}.g6 and verifies each file
/// holds the published number of connected graphs.
inline Corpus load_connected_corpus(const std::filesystem::path& dir, std::size_t max_order) {
  if (max_order > 8) throw PreconditionError("shipped corpus stops at order 8");
  Corpus all;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto file = dir / ("connected_n" + std::to_string(n) + ".g6");
    Corpus c = load_corpus(file, CorpusFormat::graph6);
    if (c.size() != kConnectedGraphCounts[n]) {
      throw FormatError(file.string() + ": " + std::to_string(c.size()) +
                        " graphs, expected " + std::to_string(kConnectedGraphCounts[n]));
    }
    for (const auto& e : c) {
      if (e.graph.order() != n || !is_connected(e.graph)) {
        throw FormatError(e.source_id + ": not a connected graph of order " + std::to_string(n));
      }
    }
    all.append(c);
  }
  return all;
}

struct ReportHeader {
  std::string suite;
  std::string corpus;
  std::string started;
};

/// JSON lines: the header object, then one object per record with keys in
/// the fixed order check, instance, pass, witness.
inline void write_report(std::ostream& out, const ReportHeader& header,
                         const std::vector<CheckRecord>& records) {
  nlohmann::ordered_json h;
  h["suite"] = header.suite;
  h["corpus"] = header.corpus;
  h["started"] = header.started;
  out << h.dump() << '\n';
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["instance"] = r.instance;
    j["pass"] = r.pass;
    j["witness"] = r.witness;
    out << j.dump() << '\n';
  }
}

inline std::vector<CheckRecord> read_report_records(std::istream& in, ReportHeader* header = nullptr) {
  std::vector<CheckRecord> out;
  std::string line;
  if (!std::getline(in, line)) throw FormatError("report: missing header line");
  try {
    auto h = nlohmann::json::parse(line);
    ReportHeader parsed{h.at("suite").get<std::string>(), h.at("corpus").get<std::string>(),
                        h.at("started").get<std::string>()};
    if (header) *header = std::move(parsed);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = nlohmann::json::parse(line);
      out.push_back({j.at("check").get<std::string>(), j.at("instance").get<std::string>(),
                     j.at("pass").get<bool>(), j.at("witness").get<std::string>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("report: ") + e.what());
  }
  return out;
}

}  // namespace domsuite
