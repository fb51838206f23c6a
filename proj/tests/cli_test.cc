// Copyright 2026 The normcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the normcheck binary and checks output and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "normcheck/report.h"

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(NORMCHECK_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = testing::TempDir() + "normcheck_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(CliTest, AnalyzeExitCodes) {
  const CliRun p4 = run("analyze --name P4 --format kv --restarts 5");
  EXPECT_EQ(p4.code, 1);
  EXPECT_NE(p4.out.find("reason=biregularity fails"), std::string::npos);
  EXPECT_EQ(run("analyze --name C4 --restarts 5").code, 0);
  const CliRun k4 = run("analyze --graph6 'C~' --format kv");
  EXPECT_EQ(k4.code, 1);
  EXPECT_NE(k4.out.find("reason=not bipartite"), std::string::npos);
  const CliRun lit = run("analyze --name C4 --restarts 5 --format kv");
  EXPECT_NE(lit.out.find("catalog.known_status=known_weakly_norming"), std::string::npos);
  EXPECT_NO_THROW(normcheck::parse_records(lit.out));
}

TEST(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run("analyze --graph6 'C\x7f'").code, 2);
  EXPECT_EQ(run("analyze --name nosuchgraph").code, 2);
  EXPECT_EQ(run("analyze").code, 2);
  EXPECT_EQ(run("analyze --name C4 --graph6 'C~'").code, 2);
  EXPECT_EQ(run("analyze --edge-list /nonexistent/file").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  const std::string bad = temp_file("bad.el", "0 1\n1 q\n");
  EXPECT_EQ(run("analyze --edge-list " + bad).code, 2);
}

TEST(CliTest, EdgeListInput) {
  const std::string square = temp_file("square.el", "0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run("analyze --edge-list " + square + " --restarts 5").code, 0);
}

TEST(CliTest, Density) {
  const std::string k = temp_file("k.txt", "2\n0.5 0.5\n0.2 0.6\n0.6 1.0\n");
  const std::string hand = temp_file("hand.txt", "2\n0.5 0.5\n1 0.5\n0.5 0\n");
  const std::string one = temp_file("one.txt", "1\n1\n1\n");
  EXPECT_EQ(run("density --name K2 " + k).out, "0.6\nmethod contraction\n");
  EXPECT_EQ(run("density --name K2 " + k + " --brute-force").out, "0.6\nmethod oracle\n");
  EXPECT_EQ(run("density --name Q3 " + one).out, "1\nmethod contraction\n");
  EXPECT_EQ(run("density --name torus_6_6 " + one).out, "1\nmethod contraction\n");
  EXPECT_EQ(run("density --name P4 " + hand + " --edge-deleted").out, "0.3125 0.25 0.3125\nmethod contraction\n");
  const CliRun kv = run("density --name P4 " + hand + " --edge-deleted --format kv");
  EXPECT_EQ(kv.out, "t.0=0.3125\nt.1=0.25\nt.2=0.3125\nmethod=contraction\n");
  EXPECT_EQ(run("density --name P3 --multilinear " + one + " " + hand).out, "0.5\nmethod contraction\n");
  EXPECT_EQ(run("density --name P3 --multilinear " + one).code, 2);
  EXPECT_EQ(run("density --name torus_6_6 " + hand + " --brute-force").code, 2);
}

TEST(CliTest, FalsifyAndVerify) {
  const std::string k3 = testing::TempDir() + "normcheck_cli_k3.cert";
  EXPECT_EQ(run("falsify --name K3 --target holder --out " + k3).code, 0);
  EXPECT_EQ(run("verify " + k3).code, 0);
  EXPECT_EQ(run("verify --oracle " + k3).code, 0);

  std::string text = read(k3);
  const auto pos = text.find("\nlhs ");
  ASSERT_NE(pos, std::string::npos);
  text.insert(pos + 5, "1");  // lhs 1 -> lhs 11
  const std::string tampered = temp_file("tampered.cert", text);
  EXPECT_EQ(run("verify " + tampered).code, 1);
  EXPECT_EQ(run("verify " + temp_file("garbage.cert", "kind holder\n")).code, 2);

  const std::string p4 = testing::TempDir() + "normcheck_cli_p4.cert";
  EXPECT_EQ(run("falsify --name P4 --target lemma --out " + p4).code, 0);
  EXPECT_EQ(run("verify --oracle " + p4).code, 0);
  EXPECT_EQ(run("falsify --name C4 --target lemma").code, 3);
  EXPECT_NE(run("falsify --name C5 --target holder --format kv").out.find("\nfound=true\n"), std::string::npos);
}

TEST(CliTest, Catalog) {
  EXPECT_EQ(run("catalog build C6").out, "EhEG\n");
  const CliRun torus = run("catalog build torus_6_6 --format kv");
  EXPECT_NE(torus.out.find("vertices=36\nedges=72\n"), std::string::npos);
  const CliRun q3 = run("catalog build Q3 --format kv");
  EXPECT_NE(q3.out.find("vertices=8\nedges=12\n"), std::string::npos);
  const CliRun list = run("catalog list");
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("torus_6_6"), std::string::npos);
  EXPECT_EQ(run("catalog build nope").code, 2);
}

TEST(CliTest, SelftestIsByteIdentical) {
  const CliRun a = run("selftest --quick --seed 3 --format kv");
  const CliRun b = run("selftest --quick --seed 3 --format kv");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(normcheck::parse_records(a.out));
}

}  // namespace
