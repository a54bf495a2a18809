// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

// domsuite: batch front end for the domination engine, product
// constructions, recognizers, and the verification harness.
//
// Exit status: 0 success, 1 check failure (or a NotWellDominated result
// under --assert), 2 usage or format error, 3 instance too large.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "domsuite/domsuite.hpp"

#ifndef DOMSUITE_DATA_DIR
#define DOMSUITE_DATA_DIR "data/graphs"
#endif

namespace {

using namespace domsuite;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

struct Common {
  std::string format = "graph6";
  std::size_t max_n = 25;
  std::size_t iso_cap = 16;
  std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string out;
  bool assert_wd = false;
};

CorpusFormat parse_format(const std::string& f) {
  if (f == "graph6") return CorpusFormat::graph6;
  if (f == "edges") return CorpusFormat::edges;
  throw UsageError("--format must be graph6 or edges, got \"" + f + "\"");
}

/// A path when the argument names one, otherwise an inline graph6 record.
Corpus resolve_input(const std::string& arg, CorpusFormat format) {
  const bool looks_like_path =
      arg.find('/') != std::string::npos || arg.find('\\') != std::string::npos || std::filesystem::exists(arg);
  if (looks_like_path) {
    if (!std::filesystem::exists(arg)) throw FormatError(arg + ": no such file");
    return load_corpus(arg, format);
  }
  Corpus c;
  try {
    c.add({arg, parse_graph6(arg), arg});
  } catch (const Error& e) {
    throw FormatError(arg + ": " + e.what());
  }
  return c;
}

Graph single_graph(const std::string& arg, CorpusFormat format, const char* flag) {
  Corpus c = resolve_input(arg, format);
  if (c.size() != 1) {
    throw UsageError(std::string(flag) + " " + arg + ": expected exactly one graph, found " + std::to_string(c.size()));
  }
  return c.entries().front().graph;
}

// SOURCE_DATE_EPOCH pins the header timestamp for byte-identical reports.
std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) t = static_cast<std::time_t>(std::atoll(epoch));
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

void write_report_file(const std::string& path, const ReportHeader& header, const std::vector<CheckRecord>& records) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write report " + path);
  write_report(out, header, records);
}

void print_summary(const std::vector<CheckRecord>& records) {
  std::map<std::string, std::pair<std::size_t, std::size_t>> by_check;
  for (const auto& r : records) {
    auto& [pass, fail] = by_check[r.check];
    ++(r.pass ? pass : fail);
  }
  for (const auto& [check, counts] : by_check) {
    std::cout << (counts.second == 0 ? "PASS " : "FAIL ") << check << ": " << counts.first << " passed, "
              << counts.second << " failed\n";
  }
  for (const auto& r : records) {
    if (!r.pass) std::cout << "  failed " << r.check << " [" << r.instance << "]: " << r.witness << '\n';
  }
}

int run_invariants(const std::string& in, const Common& c) {
  const Corpus corpus = resolve_input(in, parse_format(c.format));
  const EngineLimits limits{c.max_n};
  bool all_wd = true;
  for (const auto& e : corpus) {
    const InvariantReport r = domination_chain(e.graph, limits);
    all_wd = all_wd && r.well_dominated;
    std::cout << e.source_id << ": n=" << e.graph.order() << " m=" << e.graph.size() << '\n'
              << "  chain (" << r.gamma << ',' << r.ind_dom << ',' << r.independence << ',' << r.upper_gamma
              << "), well-dominated: " << (r.well_dominated ? "yes" : "no")
              << ", well-covered: " << (r.well_covered ? "yes" : "no") << '\n'
              << "  γ witness " << r.gamma_witness.to_string() << ", i witness " << r.ind_dom_witness.to_string()
              << ", α witness " << r.independence_witness.to_string() << ", Γ witness "
              << r.upper_gamma_witness.to_string() << '\n';
  }
  return c.assert_wd && !all_wd ? kExitCheckFailed : kExitOk;
}

int run_product(const std::string& kind, const std::string& left, const std::string& right, bool emit,
                const Common& c) {
  const CorpusFormat fmt = parse_format(c.format);
  const Graph g = single_graph(left, fmt, "--left");
  Graph p = g;
  if (kind == "corona") {
    p = corona(g);
  } else {
    if (right.empty()) throw UsageError("--right is required for --kind " + kind);
    const Graph h = single_graph(right, fmt, "--right");
    if (kind == "cartesian") {
      p = cartesian_product(g, h);
    } else if (kind == "direct") {
      p = direct_product(g, h);
    } else if (kind == "strong") {
      p = strong_product(g, h);
    } else {
      throw UsageError("--kind must be cartesian, direct, strong, or corona");
    }
  }
  if (emit) {
    std::cout << emit_graph6(p) << '\n';
  } else {
    std::cout << kind << " product: n=" << p.order() << " m=" << p.size() << '\n';
  }
  if (!c.out.empty()) {
    std::ofstream out(c.out);
    if (!out) throw UsageError("cannot write " + c.out);
    out << emit_graph6(p) << '\n';
  }
  return kExitOk;
}

int run_recognize(const std::string& which, const std::string& left, const std::string& right, std::size_t m,
                  std::size_t n, const Common& c) {
  const CorpusFormat fmt = parse_format(c.format);
  if (right.empty()) throw UsageError("--right is required");
  const Graph h = single_graph(right, fmt, "--right");
  RecognitionVerdict v;
  if (which == "direct") {
    if (left.empty()) throw UsageError("--left is required for direct");
    v = direct_product_well_dominated(single_graph(left, fmt, "--left"), h);
  } else if (which == "cartesian-complete") {
    if (m == 0) throw UsageError("--m is required for cartesian-complete");
    v = cartesian_with_complete_well_dominated(m, h);
  } else if (which == "strong-complete") {
    if (n == 0) throw UsageError("--n is required for strong-complete");
    v = strong_with_complete_well_dominated(n, h, EngineLimits{c.max_n});
  } else {
    throw UsageError("recognizer must be direct, cartesian-complete, or strong-complete");
  }
  std::cout << to_string(v.verdict);
  if (!v.rule.empty()) std::cout << " (rule: " << v.rule << ")";
  std::cout << '\n';
  if (v.corona_base) std::cout << "  corona base F: " << emit_graph6(*v.corona_base) << '\n';
  if (!v.note.empty()) std::cout << "  note: " << v.note << '\n';
  return c.assert_wd && v.verdict != Verdict::well_dominated ? kExitCheckFailed : kExitOk;
}

Corpus gather_corpus(const std::vector<std::string>& inputs, std::size_t shipped, const Common& c,
                     std::string& label) {
  Corpus corpus;
  if (shipped > 0) {
    const char* env = std::getenv("DOMSUITE_DATA");
    const std::filesystem::path dir = env ? env : DOMSUITE_DATA_DIR;
    corpus.append(load_connected_corpus(dir, shipped));
    label = "shipped connected n<=" + std::to_string(shipped);
  }
  for (const auto& in : inputs) {
    corpus.append(resolve_input(in, parse_format(c.format)));
    label += (label.empty() ? "" : ",") + in;
  }
  if (inputs.empty() && shipped == 0) throw UsageError("a corpus is required (--in or --shipped)");
  return corpus;
}

int run_verify(const std::vector<std::string>& suites, const std::vector<std::string>& inputs, std::size_t shipped,
               const std::string& resume, const Common& c) {
  std::string label;
  const std::string started = utc_now();
  const Corpus corpus = gather_corpus(inputs, shipped, c, label);
  SuiteOptions opts;
  opts.limits.engine.max_n = c.max_n;
  opts.limits.isomorphism.max_order = c.iso_cap;
  opts.workers = c.jobs;
  if (!resume.empty()) opts.resume_log = resume;
  const SuiteResult result = run_suite(suites, corpus, opts);
  std::string suite_label;
  for (const auto& s : suites) suite_label += (suite_label.empty() ? "" : ",") + s;
  print_summary(result.records);
  std::cout << (result.pass ? "all checks passed" : "check failures present") << " (" << result.records.size()
            << " records)\n";
  if (!c.out.empty()) write_report_file(c.out, {suite_label, label, started}, result.records);
  return result.pass ? kExitOk : kExitCheckFailed;
}

int run_hunt(const std::vector<std::string>& inputs, std::size_t shipped, std::size_t max_order,
             const std::string& resume, const Common& c) {
  std::string label;
  const std::string started = utc_now();
  const Corpus corpus = gather_corpus(inputs, shipped, c, label);
  HuntOptions opts;
  opts.max_order = max_order;
  opts.workers = c.jobs;
  if (!resume.empty()) opts.resume_log = resume;
  HarnessLimits limits;
  limits.engine.max_n = c.max_n;
  const auto records = hunt_conjecture(corpus, opts, limits);
  bool pass = true;
  for (const auto& r : records) {
    pass = pass && r.pass;
    if (r.check == "conj-wd-product") std::cout << "well-dominated: " << r.instance << '\n';
  }
  print_summary(records);
  if (!c.out.empty()) write_report_file(c.out, {"conj-hunt", label, started}, records);
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination invariants, graph products, and well-dominated product verification"};
  app.require_subcommand(1);

  Common c;
  if (const char* env = std::getenv("DOMSUITE_MAX_N")) {
    try {
      c.max_n = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: DOMSUITE_MAX_N must be a positive integer, got \"" << env << "\"\n";
      return kExitUsage;
    }
  }
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Input format for paths: graph6 or edges")->capture_default_str();
    sub->add_option("--max-n", c.max_n, "Order cap for exact computations (default: DOMSUITE_MAX_N or 25)");
    sub->add_option("--out", c.out, "Output file (report or graph6)");
  };

  std::string in, left, right, kind, which, resume;
  std::vector<std::string> inputs;
  std::vector<std::string> suites{"all"};
  std::size_t m = 0, n = 0, shipped = 0, max_order = 4;
  bool emit = false;

  auto* inv = app.add_subcommand("invariants", "γ, i, α, Γ with witnesses");
  inv->add_option("--in", in, "Path or inline graph6")->required();
  inv->add_flag("--assert", c.assert_wd, "Exit 1 unless every graph is well-dominated");
  add_common(inv);

  auto* prod = app.add_subcommand("product", "Build a Cartesian, direct, or strong product, or a corona");
  prod->add_option("--kind", kind, "cartesian | direct | strong | corona")->required();
  prod->add_option("--left", left, "Left factor (path or inline graph6)")->required();
  prod->add_option("--right", right, "Right factor (path or inline graph6)");
  prod->add_flag("--emit", emit, "Print the product as graph6");
  add_common(prod);

  auto* rec = app.add_subcommand("recognize", "Characterization verdicts");
  rec->add_option("recognizer", which, "direct | cartesian-complete | strong-complete")->required();
  rec->add_option("--left", left, "Left factor (direct)");
  rec->add_option("--right", right, "Right factor H");
  rec->add_option("--m", m, "Order of the complete factor (cartesian-complete)");
  rec->add_option("--n", n, "Order of the complete factor (strong-complete)");
  rec->add_flag("--assert", c.assert_wd, "Exit 1 unless the verdict is WellDominated");
  add_common(rec);

  auto* ver = app.add_subcommand("verify", "Run verification suites and write a JSON-lines report");
  ver->add_option("--suite", suites, "Suite ids (comma separated)")->delimiter(',')->capture_default_str();
  ver->add_option("--in", inputs, "Corpus path(s) or inline graph6");
  ver->add_option("--shipped", shipped, "Use the shipped connected corpus up to this order (1..8)");
  ver->add_option("--jobs", c.jobs, "Worker threads");
  ver->add_option("--resume", resume, "Resume log for the conjecture hunt");
  ver->add_option("--iso-cap", c.iso_cap, "Order cap for isomorphism tests")->capture_default_str();
  add_common(ver);

  auto* hunt = app.add_subcommand("hunt", "Search for well-dominated Cartesian products without a complete factor");
  hunt->add_option("--in", inputs, "Corpus path(s) or inline graph6");
  hunt->add_option("--shipped", shipped, "Use the shipped connected corpus up to this order (1..8)");
  hunt->add_option("--max-order", max_order, "Largest factor order considered")->capture_default_str();
  hunt->add_option("--jobs", c.jobs, "Worker threads");
  hunt->add_option("--resume", resume, "Resume log: one completed pair id per line");
  add_common(hunt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*inv) return run_invariants(in, c);
    if (*prod) return run_product(kind, left, right, emit, c);
    if (*rec) return run_recognize(which, left, right, m, n, c);
    if (*ver) return run_verify(suites, inputs, shipped, resume, c);
    if (*hunt) return run_hunt(inputs, shipped, max_order, resume, c);
  } catch (const InstanceTooLargeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
