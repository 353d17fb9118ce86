#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cde/cli.hpp"
#include "cde/io.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = CDE_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cde::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cde_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, AnalyzeExampleOne) {
  const auto r = cli({"analyze", "--problem", fixture("example1_problem.json"), "--format", "structured"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rho"], 4);
  EXPECT_EQ(j["delta"], 1);
  EXPECT_EQ(j["degree_bound"], 180);
}

TEST(Cli, TextAndStructuredCarryTheSameNumbers) {
  const auto text = cli({"analyze", "--problem", fixture("example1_problem.json")});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("180"), std::string::npos);
}

TEST(Cli, InfeasibleProblemExitsTwo) {
  EXPECT_EQ(cli({"analyze", "--problem", fixture("infeasible_problem.json")}).code, 2);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(cli({"analyze", "--problem", fixture("missing.json")}).code, 1);
  EXPECT_EQ(cli({"analyze", "--problem", fixture("example1_problem.json"), "--field", "4"}).code, 1);
  EXPECT_EQ(cli({"bogus"}).code, 1);
  EXPECT_EQ(cli({"simulate", "--problem", fixture("example1_problem.json"), "--trials", "0"}).code, 1);
}

TEST(Cli, VerifyExampleTwo) {
  const auto common = std::vector<std::string>{"verify", "--problem", fixture("example1_problem.json"), "--matrix",
                                               fixture("example2_matrix.json")};
  auto d0 = common;
  d0.insert(d0.end(), {"--delta", "0"});
  EXPECT_EQ(cli(d0).code, 0);
  auto d1 = common;
  d1.insert(d1.end(), {"--delta", "1"});
  EXPECT_EQ(cli(d1).code, 4);
  auto d2 = common;
  d2.insert(d2.end(), {"--delta", "2"});
  EXPECT_EQ(cli(d2).code, 4);
}

TEST(Cli, SupportViolationExitsOne) {
  const auto r = cli({"verify", "--problem", fixture("example1_problem.json"), "--matrix",
                      fixture("support_violation_matrix.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("packet 1"), std::string::npos) << r.err;
}

TEST(Cli, ConstructOutputFeedsVerifyAndSimulate) {
  const auto matrix = scratch("constructed.json");
  const auto built = cli({"construct", "--problem", fixture("example1_problem.json"), "--field", "1009", "--output",
                          matrix.string()});
  ASSERT_EQ(built.code, 0) << built.err;
  const auto doc = cde::io::load_matrix(matrix);
  EXPECT_EQ(doc.q, 1009u);
  EXPECT_EQ(cli({"verify", "--problem", fixture("example1_problem.json"), "--field", "1009", "--matrix",
                 matrix.string()})
                .code,
            0);
  const auto again = scratch("constructed_again.json");
  cli({"construct", "--problem", fixture("example1_problem.json"), "--field", "1009", "--output", again.string()});
  EXPECT_EQ(cde::io::read_file(matrix), cde::io::read_file(again));
}

TEST(Cli, ConstructOverBinaryFieldIsExhausted) {
  const auto r = cli({"construct", "--problem", fixture("example1_problem.json"), "--field", "2", "--attempts", "40"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("larger field"), std::string::npos);
}

TEST(Cli, ConstructTrivialProblem) {
  const auto r = cli({"construct", "--problem", fixture("everyone_holds_all.json")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, DecodeAtClientOne) {
  // X = (1,2,0,1,2,1); y_2 corrupted from 0 to 1.
  const auto r = cli({"decode", "--problem", fixture("example1_problem.json"), "--matrix",
                      fixture("example2_matrix.json"), "--client", "1", "--broadcast", "2,1,2,1,2,1", "--held",
                      "1=1,3=0,6=1", "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "unique");
  EXPECT_EQ(j["estimate"], nlohmann::json::parse("[1,2,0,1,2,1]"));
}

TEST(Cli, SimulateExhaustiveReportsFailure) {
  const auto r = cli({"simulate", "--problem", fixture("example1_problem.json"), "--matrix",
                      fixture("example2_matrix.json"), "--exhaustive", "--packets", "1,2,0,1,2,1"});
  EXPECT_EQ(r.code, 4) << r.err;
}

TEST(Cli, SimulateMonteCarlo) {
  const auto r = cli({"simulate", "--problem", fixture("example1_problem.json"), "--field", "1009", "--trials", "40",
                      "--format", "structured"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["monte_carlo"]["trials"], 40);
}

TEST(Cli, BudgetExceededExitsFive) {
  EXPECT_EQ(cli({"analyze", "--problem", fixture("example1_problem.json"), "--budget", "3"}).code, 5);
}

TEST(Cli, ExhaustiveConstructionOverTernaryFieldExitsThree) {
  const auto r = cli({"construct", "--problem", fixture("example1_problem.json"), "--strategy", "exhaustive"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(Cli, SimulateWritesTraceLog) {
  const auto log = scratch("traces.jsonl");
  fs::remove(log);
  const auto r = cli({"simulate", "--problem", fixture("example1_problem.json"), "--matrix",
                      fixture("example2_matrix.json"), "--exhaustive", "--delta", "0", "--output", log.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const std::string text = cde::io::read_file(log);
  ASSERT_FALSE(text.empty());
  const auto first = nlohmann::json::parse(text.substr(0, text.find('\n')));
  EXPECT_EQ(first["verdict"], "all_recovered");
}

TEST(Cli, RunsAreDeterministic) {
  const std::vector<std::string> args = {"simulate", "--problem", fixture("example1_problem.json"), "--field", "1009",
                                         "--trials", "25", "--seed", "7", "--format", "structured"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}
