// Copyright 2026 The domsuite Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "domsuite/graph_io.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;  // stdout and stderr
};

Outcome run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + DOMSUITE_CLI + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("domsuite_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

using Cli = Scratch;

TEST_F(Cli, InvariantsFromFile) {
  const Outcome r = run("invariants --in " + file("p3.g6", "Bg\n"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("chain (1,1,2,2), well-dominated: no"), std::string::npos) << r.out;
}

TEST_F(Cli, InvariantsAssert) {
  EXPECT_EQ(run("invariants --in Bg --assert").status, 1);
  EXPECT_EQ(run("invariants --in Dhc --assert").status, 0);
}

TEST_F(Cli, InvariantsEdgeListFormat) {
  const Outcome r = run("invariants --format edges --in " + file("c5.txt", "5 0 1 1 2 2 3 3 4 4 0"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("chain (2,2,2,2), well-dominated: yes"), std::string::npos) << r.out;
}

TEST_F(Cli, StrongProductOfTrianglesIsK9) {
  const Outcome r = run("product --kind strong --left Bw --right Bw --emit");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out, "H~~~~~~\n");  // K9: 36 edge bits, six full groups
}

TEST_F(Cli, ProductToFile) {
  const std::string out = path("k2k2.g6");
  EXPECT_EQ(run("product --kind cartesian --left A_ --right A_ --out " + out).status, 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "Cr");  // edges 01 02 13 23 under (g,h) -> 2g+h
}

TEST_F(Cli, CoronaNeedsNoRightFactor) {
  const Outcome r = run("product --kind corona --left A_ --emit");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(domsuite::parse_graph6(r.out.substr(0, r.out.find('\n'))).size(), 3u);
}

TEST_F(Cli, RecognizeCartesianComplete) {
  const Outcome r = run("recognize cartesian-complete --m 3 --right " + file("p3.g6", "Bg\n"));
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("WellDominated (rule: m=3 and H ∈ {K3,P3})"), std::string::npos) << r.out;
}

TEST_F(Cli, RecognizeAssertOnNegativeVerdict) {
  EXPECT_EQ(run("recognize direct --left A_ --right Bg").status, 0);
  const Outcome r = run("recognize direct --left A_ --right Bg --assert");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("NotWellDominated"), std::string::npos);
  EXPECT_EQ(run("recognize strong-complete --n 2 --right Dhc --assert").status, 0);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("invariants").status, 2);
  EXPECT_EQ(run("verify --suite bogus --in Bw").status, 2);
  EXPECT_EQ(run("product --kind lexicographic --left A_ --right A_").status, 2);
  EXPECT_EQ(run("invariants --in Bw --format sparse6").status, 2);
}

TEST_F(Cli, FormatErrorsNameTheSource) {
  const std::string bad = file("bad.g6", "Bw\nBx\n");
  const Outcome r = run("invariants --in " + bad);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find(bad + ":2"), std::string::npos) << r.out;
  const Outcome inline_bad = run("invariants --in Bx");
  EXPECT_EQ(inline_bad.status, 2);
  EXPECT_NE(inline_bad.out.find("Bx"), std::string::npos);
  EXPECT_EQ(run("invariants --in ./missing.g6").status, 2);
}

TEST_F(Cli, TooLargeExitsThree) {
  const std::string c26 = domsuite::emit_graph6(domsuite::make_named(domsuite::GraphKind::cycle, 26));
  const Outcome r = run("invariants --in '" + c26 + "'");
  EXPECT_EQ(r.status, 3) << r.out;
  EXPECT_NE(r.out.find("26"), std::string::npos);
  EXPECT_EQ(run("invariants --max-n 26 --in '" + c26 + "'").status, 0);
  EXPECT_EQ(run("invariants --in '" + c26 + "'", "DOMSUITE_MAX_N=26").status, 0);
  EXPECT_EQ(run("invariants --max-n 25 --in '" + c26 + "'", "DOMSUITE_MAX_N=26").status, 3);
}

TEST_F(Cli, VerifyWritesReport) {
  const std::string out = path("report.jsonl");
  const Outcome r = run("verify --suite chain,graph6-roundtrip --shipped 4 --jobs 2 --out " + out, "SOURCE_DATE_EPOCH=0");
  EXPECT_EQ(r.status, 0) << r.out;
  std::ifstream in(out);
  domsuite::ReportHeader h;
  const auto records = domsuite::read_report_records(in, &h);
  EXPECT_EQ(h.suite, "chain,graph6-roundtrip");
  EXPECT_EQ(h.started, "1970-01-01T00:00:00Z");
  EXPECT_EQ(records.size(), 2u * (1 + 1 + 2 + 6));
}

TEST_F(Cli, NegativeControlExitsOne) {
  const std::string out = path("neg.jsonl");
  const Outcome r = run("verify --suite self-test-violation --in Bw --out " + out);
  EXPECT_EQ(r.status, 1) << r.out;
  std::ifstream in(out);
  const auto records = domsuite::read_report_records(in);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_FALSE(records[0].pass);
}

TEST_F(Cli, HuntIsDeterministicAndResumable) {
  const std::string a = path("a.jsonl");
  const std::string b = path("b.jsonl");
  const std::string log = path("resume.log");
  EXPECT_EQ(run("hunt --shipped 4 --jobs 1 --out " + a, "SOURCE_DATE_EPOCH=1").status, 0);
  EXPECT_EQ(run("hunt --shipped 4 --jobs 3 --resume " + log + " --out " + b, "SOURCE_DATE_EPOCH=1").status, 0);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(log).empty());
  EXPECT_EQ(run("hunt --shipped 4 --resume " + log + " --out " + b, "SOURCE_DATE_EPOCH=1").status, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

}  // namespace
