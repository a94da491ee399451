#include "svir/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace svir::cli {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("SVIR_SEED"); }
  void TearDown() override { unsetenv("SVIR_SEED"); }
};

TEST_F(Cli, Bracket) {
  const Invocation r = run({"bracket", "G[1]", "G[-1]"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "2*L[0] + 1/4*C\n");

  const Invocation w = run({"--algebra", "sw22", "bracket", "G[1]", "Q[-1]"});
  EXPECT_EQ(w.out, "2*I[0] + 1/4*C2\n");

  const Invocation j = run({"--json", "bracket", "L[2]", "L[-2]"});
  EXPECT_EQ(j.out, R"({"algebra":"svir0","a":"L[2]","b":"L[-2]","result":"4*L[0] + 1/2*C"})"
                   "\n");
}

TEST_F(Cli, JacobiSweep) {
  const Invocation r = run({"--algebra", "sw22", "jacobi", "--bound", "2"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out.rfind("0 violations / ", 0), 0u) << r.out;
}

TEST_F(Cli, Defect) {
  EXPECT_EQ(run({"--algebra", "sw22", "defect", "D", "L[1]", "I[2]"}).code, kSuccess);
  const Invocation r = run({"defect", "L[1]", "G[0]", "G[1]"});
  EXPECT_EQ(r.out, "0\n");
}

TEST_F(Cli, Annihilate) {
  const Invocation r = run({"--algebra", "sw22", "annihilate", "G[1]", "--bound", "4"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "dimension 3\nad(L[2])\nad(I[2])\nD\n");

  const Invocation j = run({"--json", "annihilate", "G[2]", "--bound", "6"});
  const auto parsed = nlohmann::json::parse(j.out);
  EXPECT_EQ(parsed["dimension"], 1);
  EXPECT_EQ(parsed["basis"][0], "L[4]");
}

TEST_F(Cli, GlobalizeHonestAndAdversarial) {
  const Invocation ok = run({"--json", "globalize", "--oracle", "honest:L[1]+G[0]", "--bound", "3", "--random", "20",
                      "--seed", "42"});
  EXPECT_EQ(ok.code, kSuccess);
  const auto cert = nlohmann::json::parse(ok.out);
  EXPECT_EQ(cert["verdict"], "pass");
  EXPECT_EQ(cert["candidate"]["inner"], "L[1] + G[0]");

  const Invocation w = run({"--algebra", "sw22", "--json", "globalize", "--oracle", "honest:I[2]+3*D"});
  EXPECT_EQ(nlohmann::json::parse(w.out)["mu"], "3");

  const Invocation bad = run({"globalize", "--oracle", "shift_map"});
  EXPECT_EQ(bad.code, kMathFailure);
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["failure_witness"].is_null());
}

TEST_F(Cli, GlobalizeOutputIsByteStable) {
  const std::vector<std::string> args = {"--algebra", "svir12", "--json", "globalize", "--oracle",
                                         "honest:L[-1]+2*G[1/2]", "--seed", "9"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, GlobalFlagsAfterSubcommand) {
  EXPECT_EQ(run({"bracket", "G[1]", "G[-1]", "--algebra", "svir0"}).out, "2*L[0] + 1/4*C\n");
  const Invocation r = run({"jacobi", "--algebra", "sw22", "--bound", "3"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out, "0 violations / 27000 triples\n");
  const Invocation l = run({"lemma", "lemma3.3", "--json"});
  EXPECT_EQ(l.out.rfind(R"({"name":"lemma3.3","cases":[{"i":-3,"dim":1,"pass":true},)", 0), 0u) << l.out;
}

TEST_F(Cli, Lemma) {
  const Invocation r = run({"--json", "lemma", "lemma4.4i"});
  EXPECT_EQ(r.code, kSuccess);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["name"], "lemma4.4i");
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["cases"].size(), 5u);
  EXPECT_EQ(run({"lemma", "lemma9.9"}).code, kUsageError);
}

TEST_F(Cli, UsageAndDomainErrors) {
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"bracket", "L[1]"}).code, kUsageError);
  EXPECT_EQ(run({"--algebra", "e8", "bracket", "L[1]", "L[2]"}).code, kUsageError);

  const Invocation syntax = run({"bracket", "L[1", "L[2]"});
  EXPECT_EQ(syntax.code, kUsageError);
  EXPECT_EQ(syntax.err.rfind("error[SyntaxError]", 0), 0u) << syntax.err;

  const Invocation kind = run({"--json", "bracket", "I[1]", "L[2]"});
  EXPECT_EQ(kind.code, kUsageError);
  EXPECT_EQ(nlohmann::json::parse(kind.err)["error"], "KindNotInFamily");

  EXPECT_EQ(run({"annihilate", "0"}).code, kUsageError);
  EXPECT_EQ(run({"--algebra", "vir", "globalize", "--oracle", "shift_map"}).code, kUsageError);
  EXPECT_EQ(run({"--help"}).code, kSuccess);
}

TEST_F(Cli, ConfigAndEnvironment) {
  const auto path = std::filesystem::temp_directory_path() / "svir_cli_test_config.json";
  {
    std::ofstream cfg(path);
    cfg << R"({"algebra": "sw22", "bound": 4, "seed": 5})";
  }
  const Invocation r = run({"--config", path.string(), "annihilate", "G[1]"});
  EXPECT_EQ(r.out, "dimension 3\nad(L[2])\nad(I[2])\nD\n");

  // Seed precedence: flag > environment > config.
  const std::vector<std::string> base = {"--config", path.string(), "--json", "globalize", "--oracle", "honest:L[1]"};
  const std::string from_config = run(base).out;
  std::vector<std::string> with_flag = base;
  with_flag.insert(with_flag.end(), {"--seed", "5"});
  EXPECT_EQ(run(with_flag).out, from_config);

  setenv("SVIR_SEED", "6", 1);
  const std::string from_env = run(base).out;
  EXPECT_NE(from_env, from_config);
  EXPECT_EQ(run(with_flag).out, from_config);
  setenv("SVIR_SEED", "not-a-number", 1);
  EXPECT_EQ(run(base).code, kUsageError);
  unsetenv("SVIR_SEED");

  EXPECT_EQ(run({"--config", "/nonexistent/svir.json", "bracket", "L[1]", "L[2]"}).code, kUsageError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace svir::cli
