// Copyright 2026 The entpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "cli.hpp"
#include "entpoly/io.hpp"
#include "entpoly/relations.hpp"

using namespace entpoly;
using nlohmann::json;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "entpoly");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

cli::CliConfig parse(std::vector<std::string> args) {
  args.insert(args.begin(), "entpoly");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  return cli::parse_args(static_cast<int>(argv.size()), argv.data());
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("entpoly_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string &name, const json &content) const {
    const auto p = path_ / name;
    write_text_file(p, dump_sorted(content));
    return p.string();
  }
  std::string path(const std::string &name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StateVector bell() {
  const Complex a[] = {1, 0, 0, 1};
  return build_state_vector(a, DimsLayout({2, 2}));
}

}  // namespace

TEST(cli_parse, examples) {
  const auto c = parse({"entropy", "--spec", "R:p=2", "--state", "bell.json"});
  EXPECT_EQ(c.command, "entropy");
  ASSERT_EQ(cli::resolve_specs(c).size(), 1u);
  EXPECT_EQ(cli::resolve_specs(c)[0], EntropySpec::renyi(2.0));

  const auto k = parse({"campaign", "--system", "qubits:3", "--relation", "polygon", "--samples", "10000", "--seed", "7"});
  EXPECT_EQ(k.command, "campaign");
  EXPECT_EQ(k.system, "qubits:3");
  EXPECT_EQ(k.relation, "polygon");
  EXPECT_EQ(k.samples.value(), 10000u);
  EXPECT_EQ(k.seed, 7u);

  const auto d = parse({"ghz-demo"});
  EXPECT_EQ(d.seed, cli::kDefaultSeed);
  EXPECT_EQ(cli::resolve_specs(d)[0], EntropySpec::von_neumann());

  const auto b = parse({"ghz-demo", "--spec", "S", "--spec", "R:p=2:b=2", "--spec", "T:q=2", "--base", "e"});
  const auto specs = cli::resolve_specs(b);
  EXPECT_EQ(specs[0].log_base(), std::exp(1.0));
  EXPECT_EQ(specs[1].log_base(), 2.0);
  EXPECT_EQ(specs[2], EntropySpec::tsallis(2.0));

  EXPECT_EQ(parse({"majorize", "--x", "2,2", "--y", "1,3"}).x, (std::vector<double>{2, 2}));
}

TEST(cli_parse, usage_errors) {
  EXPECT_THROW(parse({"entropy", "--spec", "R:p=0.5"}), cli::UsageError);
  EXPECT_THROW(parse({"entropy", "--bogus"}), cli::UsageError);
  EXPECT_THROW(parse({"frobnicate"}), cli::UsageError);
  EXPECT_THROW(parse({}), cli::UsageError);
  EXPECT_THROW(parse({"campaign", "--format", "xml"}), cli::UsageError);
  EXPECT_THROW(parse({"campaign", "--workers", "0"}), cli::UsageError);
  EXPECT_THROW(parse({"polygon", "--format", "text"}), cli::UsageError);
  EXPECT_THROW(parse({"campaign", "--help"}), cli::HelpRequested);
}

TEST(cli_run, exit_codes) {
  EXPECT_EQ(run_cli({"--help"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"entropy", "--spec", "R:p=0.5"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"entropy"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"entropy", "--state", "/nonexistent/state.json"}).status, cli::kRuntime);
  EXPECT_EQ(run_cli({"campaign", "--system", "qubits:3"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"campaign", "--system", "qubits:3", "--relation", "theorem2"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"ghz-demo", "--format", "csv"}).status, cli::kUsage);

  const auto w = run_cli({"wstate", "--p", "3"});
  EXPECT_EQ(w.status, cli::kViolation);
  EXPECT_TRUE(json::parse(w.out).contains("witness"));
  EXPECT_EQ(run_cli({"wstate", "--p", "1.5"}).status, cli::kUsage);

  EXPECT_EQ(run_cli({"subadd", "--system", "gaussian:1,1", "--spec", "T:q=1.5", "--samples", "5000"}).status,
            cli::kOk);
}

TEST(cli_run, state_commands) {
  TempDir dir;
  const auto bell_path = dir.file("bell.json", to_json(bell()));
  const auto e = run_cli({"entropy", "--spec", "S", "--state", bell_path, "--keep", "0"});
  ASSERT_EQ(e.status, cli::kOk) << e.err;
  EXPECT_NEAR(json::parse(e.out)["entropies"]["S:b=2"].get<double>(), 1.0, 1e-12);

  const auto p = run_cli({"polygon", "--state", dir.file("ghz.json", to_json(ghz_state(3)))});
  ASSERT_EQ(p.status, cli::kOk) << p.err;
  EXPECT_EQ(json::parse(p.out)["results"]["S:b=2"]["polygon"]["slacks"].size(), 3u);

  const double amps[] = {std::sqrt(0.98), 0.1, 0.1};
  const auto wp = dir.file("w.json", to_json(w_class_state(amps)));
  EXPECT_EQ(run_cli({"polygon", "--state", wp, "--spec", "R:p=3"}).status, cli::kViolation);
  EXPECT_EQ(run_cli({"marginal", "--state", wp}).status, cli::kOk);

  const auto cx = dir.file("cx.json", to_json(renyi_counterexample_state(DimsLayout({2, 2}))));
  EXPECT_EQ(run_cli({"subadd", "--state", cx, "--spec", "R:p=2"}).status, cli::kViolation);
  EXPECT_EQ(run_cli({"subadd", "--state", cx, "--spec", "T:q=2"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"polygon", "--state", cx}).status, cli::kRuntime);
  const auto eq = run_cli({"equiv", "--state", cx, "--spec", "R:p=2"});
  EXPECT_EQ(eq.status, cli::kOk);
  EXPECT_LT(json::parse(eq.out)["results"]["R:p=2:b=2"]["ancilla_slack"].get<double>(), 0.0);

  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(6, 6);
  m.topLeftCorner(4, 4) = two_mode_squeezed(0.5).entries();
  const auto cm = dir.file("cm.json", to_json(CovarianceMatrix(m)));
  EXPECT_EQ(run_cli({"theorem2", "--state", cm, "--spec", "T:q=1.5"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"polygon", "--state", cm, "--partition", "1,2"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"polygon", "--state", cm, "--partition", "1,1"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"marginal", "--state", cm}).status, cli::kOk);
  EXPECT_EQ(run_cli({"majorize", "--state", cm}).status, cli::kOk);
}

TEST(cli_run, vector_commands) {
  EXPECT_EQ(run_cli({"majorize", "--x", "2,2", "--y", "1,3"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"majorize", "--x", "1,3", "--y", "2,2"}).status, cli::kViolation);
  EXPECT_EQ(run_cli({"majorize", "--x", "1,3", "--y", "2"}).status, cli::kUsage);
  EXPECT_EQ(run_cli({"marginal", "--x", "0.3,0.1,0.1"}).status, cli::kViolation);
  EXPECT_EQ(run_cli({"marginal", "--x", "1.2,1.2", "--system", "gaussian:1,1"}).status, cli::kOk);
}

TEST(cli_run, campaign_reports) {
  TempDir dir;
  const auto out = dir.path("c.csv");
  const std::vector<std::string> args{"campaign", "--system", "qubits:3", "--relation", "polygon", "--spec",
                                      "R:p=3", "--injector", "w-class", "--samples", "200", "--format",
                                      "csv", "--out", out};
  EXPECT_EQ(run_cli(args).status, cli::kViolation);
  const auto first = slurp(out);
  EXPECT_EQ(first.rfind("spec,checked,violations,worst_slack\nR:p=3:b=2,206,", 0), 0u);
  EXPECT_EQ(run_cli(args).status, cli::kViolation);
  EXPECT_EQ(slurp(out), first);

  const auto j1 = run_cli({"theorem2", "--system", "gaussian:1,1,1", "--samples", "50", "--spec", "R:p=3"});
  const auto j2 = run_cli({"theorem2", "--system", "gaussian:1,1,1", "--samples", "50", "--spec", "R:p=3",
                           "--workers", "2"});
  EXPECT_EQ(j1.status, cli::kOk);
  EXPECT_EQ(j1.out, j2.out);
  EXPECT_EQ(run_cli({"majorize", "--system", "gaussian:2,2", "--samples", "200"}).status, cli::kOk);
  EXPECT_EQ(run_cli({"marginal", "--system", "qubits:4", "--samples", "200"}).status, cli::kOk);
}

TEST(cli_run, table1_text) {
  const auto t = run_cli({"table1", "--samples", "50", "--format", "text"});
  EXPECT_EQ(t.status, cli::kOk) << t.out;
  EXPECT_NE(t.out.find("polygon R"), std::string::npos);
  const auto c = run_cli({"table1", "--samples", "50", "--format", "csv"});
  EXPECT_EQ(c.out.rfind("property,entropy,system,", 0), 0u);
}

TEST(cli_run, unwritable_output) {
  EXPECT_EQ(run_cli({"ghz-demo", "--out", "/nonexistent_dir/x.json"}).status, cli::kRuntime);
}
