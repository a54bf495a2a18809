// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "domsuite/harness.hpp"
#include "oracle.hpp"

namespace domsuite {
namespace {

namespace fs = std::filesystem;

const Graph kK1 = make_named(GraphKind::complete, 1);
const Graph kK2 = make_named(GraphKind::complete, 2);
const Graph kK3 = make_named(GraphKind::complete, 3);
const Graph kP3 = make_named(GraphKind::path, 3);
const Graph kP4 = make_named(GraphKind::path, 4);
const Graph kC4 = make_named(GraphKind::cycle, 4);
const Graph kC5 = make_named(GraphKind::cycle, 5);

const Corpus& connected_up_to(std::size_t n) {
  static const Corpus all = load_connected_corpus(DOMSUITE_DATA_DIR, 7);
  static std::map<std::size_t, Corpus> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, all.filter_order(1, n)).first;
  return it->second;
}

Corpus corpus_of(std::initializer_list<Graph> graphs) {
  Corpus c;
  std::size_t k = 0;
  for (const Graph& g : graphs) c.add({"g" + std::to_string(k++), g, emit_graph6(g)});
  return c;
}

bool all_pass(const std::vector<CheckRecord>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckRecord& r) { return r.pass && r.witness.empty(); });
}

std::size_t failures(const std::vector<CheckRecord>& rs) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [](const CheckRecord& r) { return !r.pass; }));
}

TEST(Hereditary, Examples) {
  const auto c5 = check_hereditary(kC5);
  EXPECT_TRUE(all_pass(c5));
  EXPECT_EQ(c5.size(), oracle::independent_sets(kC5).size());
  EXPECT_TRUE(all_pass(check_hereditary(cartesian_product(kK3, kP3))));
  const auto p3 = check_hereditary(kP3);
  ASSERT_EQ(p3.size(), 1u);
  EXPECT_TRUE(p3[0].pass);
}

TEST(Hereditary, FlagsEmptyRemnant) {
  const auto k3 = check_hereditary(kK3);
  EXPECT_TRUE(std::any_of(k3.begin(), k3.end(),
                          [](const CheckRecord& r) { return r.instance.find("remnant=empty") != std::string::npos; }));
}

// The remnants themselves, judged by the subset-scan oracle.
TEST(Hereditary, RemnantsWellDominatedByOracle) {
  for (const auto& e : connected_up_to(6)) {
    const oracle::Chain c = oracle::chain(e.graph);
    if (c.gamma != c.upper_gamma) continue;
    for (const VertexSet& m : oracle::independent_sets(e.graph)) {
      const auto r = remove_closed_neighborhood(e.graph, m);
      if (!r) continue;
      const oracle::Chain rc = oracle::chain(r->graph);
      EXPECT_EQ(rc.gamma, rc.upper_gamma) << e.source_id << " M=" << m.to_string();
    }
  }
}

TEST(StrongBounds, Examples) {
  EXPECT_TRUE(check_strong_bounds(kC5, kC5).pass);
  EXPECT_TRUE(check_strong_bounds(kK2, kK2).pass);
  EXPECT_TRUE(check_strong_bounds(kP3, kP3).pass);
  EXPECT_THROW(check_strong_bounds(make_named(GraphKind::cycle, 6), kC5), InstanceTooLargeError);
}

TEST(DirectLemmas, Examples) {
  EXPECT_TRUE(all_pass(check_direct_lemmas(kK3, kK3)));
  const auto c4 = check_direct_lemmas(kC4, kC4);
  EXPECT_TRUE(all_pass(c4));
  EXPECT_TRUE(std::any_of(c4.begin(), c4.end(),
                          [](const CheckRecord& r) { return r.instance.find("D={0,2}") != std::string::npos; }));
  EXPECT_THROW(check_direct_lemmas(kK2, kK3), PreconditionError);
}

// D × V(H) is minimal dominating in G × H exactly when D is independent.
TEST(DirectLemmas, MinimalityMatchesOracle) {
  for (const Graph& g : {kK3, kP3, kC4, kP4}) {
    for (const Graph& h : {kK3, kP3, kC4}) {
      const Graph p = direct_product(g, h);
      const oracle::Adjacency a(p);
      for (const VertexSet& d : oracle::minimal_dominating_sets(g)) {
        oracle::Subset lifted = 0;
        d.for_each([&](Vertex u) {
          for (Vertex y = 0; y < h.order(); ++y) lifted |= oracle::Subset{1} << pair_index(u, y, h.order());
        });
        EXPECT_EQ(a.minimal_dominating(lifted), is_independent(g, d));
      }
    }
  }
}

TEST(CartesianConstructions, Examples) {
  const auto p3 = check_cartesian_constructions(kP3, kK2);
  EXPECT_TRUE(all_pass(p3));
  EXPECT_TRUE(std::any_of(p3.begin(), p3.end(), [](const CheckRecord& r) {
    return r.check == "lem-minimal-construction" && r.instance.find("D={1}") != std::string::npos;
  }));
  const auto p4 = check_cartesian_constructions(kP4, kK2);
  EXPECT_TRUE(all_pass(p4));
  EXPECT_TRUE(std::any_of(p4.begin(), p4.end(), [](const CheckRecord& r) {
    return r.check == "lem-c-construction" && r.instance.find("D={0,2} u=0 S={1}") != std::string::npos;
  }));
  const auto c4 = check_cartesian_constructions(kC4, kK3);
  EXPECT_TRUE(all_pass(c4));
  EXPECT_TRUE(std::any_of(c4.begin(), c4.end(), [](const CheckRecord& r) {
    return r.check == "lem-c-construction" && r.instance.find("D={0,2} u=0") != std::string::npos;
  }));
  EXPECT_THROW(check_cartesian_constructions(kK1, kK2), PreconditionError);
}

TEST(CoronaIdentity, Examples) {
  EXPECT_TRUE(check_corona_direct_identity(kK1).pass);
  EXPECT_TRUE(check_corona_direct_identity(kP3).pass);
  HarnessLimits wide;
  wide.isomorphism.max_order = 20;
  EXPECT_TRUE(check_corona_direct_identity(kC5, wide).pass);
  EXPECT_THROW(check_corona_direct_identity(kC5), InstanceTooLargeError);
}

TEST(CrossValidation, SmallSweeps) {
  const Corpus& c = connected_up_to(4);
  CrossValidationParams direct;
  direct.extra_pairs = direct_extra_pairs(c, 3);
  const auto d = cross_validate_recognizers(c, ProductKind::direct, direct);
  EXPECT_EQ(failures(d.records), 0u);
  EXPECT_FALSE(d.records.empty());

  CrossValidationParams cart;
  cart.complete_orders = {2, 3};
  cart.max_factor_order = 4;
  const auto ca = cross_validate_recognizers(c, ProductKind::cartesian, cart);
  EXPECT_EQ(failures(ca.records), 0u);
  std::vector<std::string> wd = ca.well_dominated;
  std::sort(wd.begin(), wd.end());
  EXPECT_EQ(wd, (std::vector<std::string>{"K2□K2", "K3□K3", "K3□P3"}));

  CrossValidationParams strong;
  strong.complete_orders = {2};
  strong.min_factor_order = 1;
  const auto s = cross_validate_recognizers(c, ProductKind::strong, strong);
  EXPECT_EQ(failures(s.records), 0u);
}

TEST(CrossValidation, RecordsMismatchAgainstWrongRecognizer) {
  // compare_verdict is the single point deciding a mismatch.
  const RecognitionVerdict claim{Verdict::well_dominated, "rule", {}, {}};
  const CheckRecord r = detail::compare_verdict("xval-direct", "G=A_ H=Bo", claim, false);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.witness.find("exact=NotWellDominated"), std::string::npos);
}

TEST(Hunt, SmallCorpora) {
  const auto found = hunt_conjecture(connected_up_to(4), HuntOptions{});
  std::vector<std::string> wd;
  for (const auto& r : found)
    if (r.check == "conj-wd-product") wd.push_back(r.instance);
  ASSERT_EQ(wd.size(), 4u);
  EXPECT_EQ(failures(found), 0u);
  for (const char* label : {"(K2□K2)", "(K3□K3)", "(P3□K3)", "(K4□K4)"}) {
    EXPECT_TRUE(std::any_of(wd.begin(), wd.end(), [&](const std::string& s) { return s.find(label) != std::string::npos; }))
        << label;
  }

  const auto cycles = hunt_conjecture(corpus_of({kC4, kC5}), HuntOptions{5});
  EXPECT_TRUE(std::none_of(cycles.begin(), cycles.end(), [](const CheckRecord& r) { return r.check == "conj-wd-product"; }));
  EXPECT_EQ(failures(cycles), 0u);

  EXPECT_TRUE(hunt_conjecture(Corpus{}, HuntOptions{}).empty());
}

TEST(Hunt, ResumeReproducesTheReport) {
  const fs::path log = fs::temp_directory_path() / ("domsuite_resume_" + std::to_string(std::random_device{}()));
  fs::remove(log);
  HuntOptions opts;
  opts.resume_log = log;
  const auto fresh = hunt_conjecture(connected_up_to(4), opts);

  // Pretend the run stopped halfway through the log.
  std::vector<std::string> lines;
  {
    std::ifstream in(log);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  ASSERT_FALSE(lines.empty());
  {
    std::ofstream out(log, std::ios::trunc);
    for (std::size_t i = 0; i < lines.size() / 2; ++i) out << lines[i] << '\n';
  }
  EXPECT_EQ(hunt_conjecture(connected_up_to(4), opts), fresh);
  EXPECT_EQ(hunt_conjecture(connected_up_to(4), opts), fresh);
  fs::remove(log);
}

TEST(Suites, UnknownIdIsUsageError) {
  EXPECT_THROW(run_suite({"bogus"}, Corpus{}, SuiteOptions{}), UsageError);
}

TEST(Suites, NegativeControlFailsOnce) {
  const SuiteResult r = run_suite({"self-test-violation"}, Corpus{}, SuiteOptions{});
  EXPECT_FALSE(r.pass);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(failures(r.records), 1u);
  EXPECT_EQ(r.records[0].witness, "γ=1 Γ=2");
}

TEST(Suites, AllPassesAndWorkerCountDoesNotMatter) {
  SuiteOptions one;
  SuiteOptions three;
  three.workers = 3;
  const Corpus& c = connected_up_to(5);
  const SuiteResult a = run_suite({"all"}, c, one);
  const SuiteResult b = run_suite({"all"}, c, three);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.records, b.records);
  EXPECT_TRUE(std::is_sorted(a.records.begin(), a.records.end(), record_less));
  EXPECT_TRUE(std::none_of(a.records.begin(), a.records.end(),
                           [](const CheckRecord& r) { return r.check == "self-test-violation"; }));
}

TEST(Suites, CartesianFilterSweep) {
  const SuiteResult r = run_suite({"cartesian-filter"}, connected_up_to(4), SuiteOptions{});
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.records.size(), 45u);  // unordered pairs over 9 graphs
}

}  // namespace
}  // namespace domsuite
