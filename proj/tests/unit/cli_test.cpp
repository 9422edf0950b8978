/*
 * Copyright (C) 2026 The flipcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include "flipcheck/cli.hpp"
#include "flipcheck/designs.hpp"
#include "flipcheck/obstruction.hpp"
#include "flipcheck/pit.hpp"

namespace flipcheck {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FLIPCHECK_DATA_DIR) + "/circuits/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string golden(const std::string& name) {
  const fs::path p = fs::path(FLIPCHECK_GOLDEN_DIR) / name;
  EXPECT_TRUE(fs::exists(p)) << p;
  return slurp(p);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("flipcheck_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

const std::string kToyClass = "n=4 m=3 alphabet=-1,0,1 regime=size";

TEST_F(CliTest, VerifyPermGolden) {
  const auto ok = run({"verify-perm", "--n", "2", "--circuit", data("perm2.ac"), "--seed", "7"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, golden("verify_perm_perm2.txt"));
  const auto bad = run({"verify-perm", "--n", "2", "--circuit", data("det2.ac"), "--seed", "7"});
  EXPECT_EQ(bad.code, kExitReject);
  EXPECT_EQ(bad.out, golden("verify_perm_det2.txt"));
  EXPECT_NE(bad.out.find("witness PPermLeft"), std::string::npos);
}

TEST_F(CliTest, DesignCommands) {
  const auto gen = run({"gen-design", "--l", "4", "--r", "2", "--kcap", "1", "--rows", "3", "--out", tmp("d.bin")});
  EXPECT_EQ(gen.code, kExitOk);
  EXPECT_EQ(gen.out, golden("gen_design.txt"));
  EXPECT_EQ(run({"verify-design", "--in", tmp("d.bin")}).code, kExitOk);
  EXPECT_EQ(run({"verify-design", "--hex", "0002000400020001cc"}).out, "invalid rows 0 and 1 share 2 elements\n");
  EXPECT_EQ(run({"verify-design", "--hex", "0002000400020001"}).code, kExitConfig);
  EXPECT_EQ(run({"gen-design", "--l", "4", "--r", "3", "--kcap", "1", "--rows", "2"}).code, kExitBudget);
  EXPECT_EQ(run({"count-designs", "--l", "2", "--r", "1", "--kcap", "0", "--rows", "2"}).out, "count 2\n");
  EXPECT_EQ(run({"count-designs", "--log-scale", "16,1,2,6"}).code, kExitBudget);
}

TEST_F(CliTest, CertificatePipeline) {
  const auto derive = run({"derive-cert", "--class", kToyClass, "--out", tmp("c.cert")});
  ASSERT_EQ(derive.code, kExitOk) << derive.err;
  EXPECT_EQ(derive.out, golden("derive_cert.txt"));
  EXPECT_EQ(slurp(tmp("c.cert")), golden("toy.cert"));
  // Round trip through the reader.
  EXPECT_EQ(ObstructionCertificate::parse(slurp(tmp("c.cert"))).serialize(), slurp(tmp("c.cert")));

  const auto dec = run({"decode", "--cert", tmp("c.cert"), "--circuit", data("det2.ac"), "--allow-outside-class"});
  EXPECT_EQ(dec.code, kExitOk);
  EXPECT_EQ(dec.out, golden("decode_det2.txt"));
  EXPECT_EQ(run({"decode", "--cert", tmp("c.cert"), "--circuit", data("perm2.ac"), "--allow-outside-class"}).code,
            kExitReject);
  EXPECT_EQ(run({"decode", "--cert", tmp("c.cert"), "--circuit", data("det2.ac")}).code, kExitConfig);

  auto text = slurp(tmp("c.cert"));
  text.replace(text.find("generator_seed=1"), 16, "generator_seed=2");
  std::ofstream(tmp("stale.cert")) << text;
  const auto stale = run({"decode", "--cert", tmp("stale.cert"), "--circuit", data("det2.ac")});
  EXPECT_EQ(stale.code, kExitConfig);
  EXPECT_NE(stale.err.find("hash mismatch"), std::string::npos);
}

TEST_F(CliTest, TrivialTableAndTrace) {
  const auto table = run({"trivial-table", "--class", "n=4 m=2 alphabet=1 regime=size", "--out", tmp("t.txt")});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_EQ(table.out, "rows 20 grid_side 3\n");
  EXPECT_EQ(slurp(tmp("t.txt")), golden("trivial_table.txt"));
  EXPECT_EQ(run({"trivial-table", "--class", "n=1 m=1 alphabet=1 regime=size", "--target", "perm(1)"}).code,
            kExitReject);

  const auto trace = run({"trace-tools", "--q", "2", "--l", "3", "--element", "1,0,1"});
  EXPECT_EQ(trace.code, kExitOk);
  EXPECT_EQ(trace.out, golden("trace_2_3.txt"));
  EXPECT_EQ(run({"trace-tools", "--q", "4", "--l", "2"}).code, kExitConfig);
}

TEST_F(CliTest, HittingSetAndOracles) {
  const auto build = run({"build-hitting-set", "--class", "n=1 m=4 alphabet=-1,0,1,2 regime=size", "--pool-size",
                          "10", "--box", "100", "--family", "3", "--out", tmp("h.txt")});
  EXPECT_EQ(build.code, kExitOk);
  EXPECT_EQ(slurp(tmp("h.txt")), golden("hitting_set.txt"));
  const auto artifact = slurp(tmp("h.txt"));
  EXPECT_EQ(artifact.rfind("# flipcheck build-hitting-set seed=1 pool_size=10 box=100 family=3\n", 0), 0u);
  EXPECT_EQ(HittingSet::parse(artifact).serialize(), artifact.substr(artifact.find('\n') + 1));
  EXPECT_EQ(run({"verify-hitting-set", "--in", tmp("h.txt")}).code, kExitOk);

  const auto e = run({"efun-oracle", "--m", "2", "--k", "2", "--entries", "1,2,3,4,5,6,7,8", "--out", tmp("e.ac")});
  EXPECT_EQ(e.out, golden("efun_oracle.txt"));
  EXPECT_EQ(run({"verify-efun", "--m", "2", "--k", "2", "--circuit", tmp("e.ac"), "--seed", "3"}).code, kExitOk);
  EXPECT_EQ(run({"eval", "--circuit", data("perm2.ac"), "--point", "1,2,3,4"}).out, "value 10\n");
}

TEST_F(CliTest, ConfigFileAndErrors) {
  std::ofstream(tmp("v.conf")) << "# verify the shipped permanent\nn=2\ncircuit=" << data("perm2.ac") << "\nseed=7\n";
  EXPECT_EQ(run({"verify-perm", "--config", tmp("v.conf")}).out, golden("verify_perm_perm2.txt"));
  EXPECT_EQ(run({"verify-perm", "--config", tmp("v.conf"), "--circuit", data("det2.ac")}).code, kExitReject);
  std::ofstream(tmp("bad.conf")) << "colour=red\n";
  EXPECT_EQ(run({"verify-perm", "--config", tmp("bad.conf")}).code, kExitConfig);
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(run({"eval", "--circuit", "/nonexistent", "--point", "1"}).code, kExitConfig);
  EXPECT_EQ(run({"eval", "--circuit", data("perm2.ac"), "--point", "1,x,3,4"}).code, kExitConfig);
  const auto arity = run({"eval", "--circuit", data("perm2.ac"), "--point", "1,2,3"});
  EXPECT_EQ(arity.code, kExitConfig);
  EXPECT_EQ(arity.out, "");
  EXPECT_EQ(run({"verify-perm", "--help"}).code, kExitOk);
}

TEST_F(CliTest, ThreadCountDoesNotChangeOutput) {
  const auto a = run({"derive-cert", "--class", kToyClass, "--seed-bits", "4", "--out", tmp("a.cert")});
  const auto b = run({"derive-cert", "--class", kToyClass, "--seed-bits", "4", "--threads", "4", "--out", tmp("b.cert")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(slurp(tmp("a.cert")), slurp(tmp("b.cert")));
  const auto p1 = run({"verify-perm", "--n", "3", "--circuit", data("perm2.ac"), "--seed", "1"});
  EXPECT_EQ(p1.code, kExitConfig);  // arity mismatch
}

}  // namespace
}  // namespace flipcheck
