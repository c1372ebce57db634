#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "qcrys/crystal_json.hpp"

using namespace qcrys;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("qcrys_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(CliIdentity, Verdicts) {
  EXPECT_EQ(run({"identity", "--a", "1", "--z", "1"}).code, 0);
  EXPECT_EQ(run({"identity", "--a", "2", "--z", "-2"}).code, 0);
  const auto r = run({"identity", "--a", "1", "--z", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "identity a=1 z=0 scope=all-q: FAIL\n");
  EXPECT_EQ(run({"identity", "--a", "3", "--z", "-2", "--classical"}).code, 0);
}

TEST(CliIdentity, UsageErrors) {
  EXPECT_EQ(run({"identity", "--a", "one", "--z", "1"}).code, 2);
  EXPECT_EQ(run({"identity", "--a", "0", "--z", "1"}).code, 2);
  EXPECT_EQ(run({"identity", "--z", "1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCrystal, GraphSizes) {
  const auto dot = run({"crystal", "--type", "A", "--n", "3", "--lambda", "2", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  std::size_t nodes = 0, edges = 0;
  std::istringstream lines(dot.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.find("->") != std::string::npos)
      ++edges;
    else if (line.find("[label=") != std::string::npos)
      ++nodes;
  }
  EXPECT_EQ(nodes, 6u);
  EXPECT_GT(edges, 0u);

  const auto ladder = Json::parse(run({"crystal", "--type", "C", "--n", "1", "--lambda", "0", "--cap", "4"}).out);
  EXPECT_EQ(ladder["states"], Json::parse("[[0],[2],[4]]"));
  EXPECT_EQ(ladder["edges"].size(), 2u);

  const auto trivial = Json::parse(run({"crystal", "--type", "A", "--n", "2", "--lambda", "0"}).out);
  EXPECT_EQ(trivial["states"].size(), 1u);
  EXPECT_TRUE(trivial["edges"].empty());
}

TEST(CliCrystal, InvalidSpecIsUsageError) {
  EXPECT_EQ(run({"crystal", "--type", "B"}).code, 2);
  EXPECT_EQ(run({"crystal", "--type", "A", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"crystal", "--type", "A", "--cap", "4"}).code, 2);
  EXPECT_EQ(run({"crystal", "--format", "svg"}).code, 2);
}

TEST(CliRep, PauliPair) {
  const auto r = run({"rep", "--type", "A", "--n", "2", "--lambda", "1", "--which", "classical", "--node", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "+,1,0,\"1\"\n-,0,1,\"1\"\n");
  const auto j = Json::parse(run({"rep", "--type", "A", "--n", "2", "--lambda", "1", "--node", "1"}).out);
  EXPECT_EQ(j["raise"].size(), 1u);
  EXPECT_EQ(j["lower"].size(), 1u);
}

TEST(CliRep, DeformedAtQOneIsClassical) {
  for (const std::string fmt : {"csv", "json"}) {
    auto deformed = run({"rep", "--type", "A", "--n", "3", "--lambda", "3", "--node", "2", "--which", "deformed", "--q", "1", "--format", fmt});
    auto classical = run({"rep", "--type", "A", "--n", "3", "--lambda", "3", "--node", "2", "--which", "classical", "--format", fmt});
    if (fmt == "json") {
      auto a = Json::parse(deformed.out), b = Json::parse(classical.out);
      EXPECT_EQ(a["raise"], b["raise"]);
      EXPECT_EQ(a["lower"], b["lower"]);
    } else {
      EXPECT_EQ(deformed.out, classical.out);
    }
  }
}

TEST(CliRep, SpRadicand) {
  const auto r = run({"rep", "--type", "C", "--n", "1", "--lambda", "0", "--cap", "8", "--which", "classical", "--node", "1", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sqrt(-2)"), std::string::npos);
}

TEST(CliRep, UsageErrors) {
  EXPECT_EQ(run({"rep", "--type", "A", "--n", "2", "--lambda", "1", "--node", "2"}).code, 2);
  EXPECT_EQ(run({"rep", "--which", "quantum"}).code, 2);
  EXPECT_EQ(run({"rep", "--which", "deformed", "--q", "-1"}).code, 2);
  EXPECT_EQ(run({"rep", "--which", "deformed", "--q", "0.5"}).code, 2);
  EXPECT_EQ(run({"rep", "--format", "dot"}).code, 2);
}

TEST(CliVerify, SingleModels) {
  const auto a = run({"verify", "--type", "A", "--n", "3", "--lambda", "3", "--q", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out)["summary"]["fail"], 0);

  const auto c = run({"verify", "--type", "C", "--n", "2", "--lambda", "2", "--cap", "12", "--q", "3/5"});
  EXPECT_EQ(c.code, 0);
  EXPECT_GT(Json::parse(c.out)["summary"]["boundary"].get<int>(), 0);

  const auto cz = Json::parse(run({"verify", "--type", "A", "--n", "2", "--lambda", "8", "--cz"}).out);
  for (const auto& r : cz["reports"]) {
    EXPECT_EQ(r["relation_id"], "cz");
    EXPECT_EQ(r["summary"]["pass"], 9);
    EXPECT_EQ(r["summary"]["fail"], 0);
  }
}

TEST(CliVerify, ZeroMarginReportsFailures) {
  EXPECT_EQ(run({"verify", "--type", "C", "--n", "1", "--lambda", "0", "--cap", "6", "--margin", "0", "--q", "2"}).code, 1);
}

TEST(CliVerify, ConfigHandling) {
  const auto dir = scratch_dir();
  const auto bad = dir / "bad.yaml";
  std::ofstream(bad) << "models:\n  - type: A\n    n: 2\n    lambda: 1\n    relations: [nope]\n";
  const auto r = run({"verify", "--config", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 5"), std::string::npos);
  EXPECT_EQ(run({"verify", "--config", (dir / "missing.yaml").string()}).code, 2);
  EXPECT_EQ(run({"verify", "--config", bad.string(), "--type", "A"}).code, 2);
  EXPECT_EQ(run({"verify", "--type", "A", "--n", "3", "--cz"}).code, 2);

  const auto good = dir / "good.yaml";
  std::ofstream(good) << "models:\n  - {type: A, n: 2, lambda: [1, 2], q: [2], relations: [ladder]}\n";
  EXPECT_EQ(run({"verify", "--config", good.string()}).code, 0);
  std::filesystem::remove_all(dir);
}

TEST(CliVerify, OutputFileIsDeterministicAndComplete) {
  const auto dir = scratch_dir();
  const auto path = dir / "report.json";
  const std::vector<std::string> args{"verify", "--type", "C", "--n", "2", "--lambda", "1", "--cap", "9", "-o", path.string()};
  ASSERT_EQ(run(args).code, 0);
  const std::string first = slurp(path);
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(path), first);
  EXPECT_EQ(Json::parse(first)["summary"]["fail"], 0);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) EXPECT_EQ(entry.path().filename(), "report.json");
  EXPECT_EQ(run({"verify", "--type", "A", "-o", (dir / "no" / "such" / "dir.json").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(CliBoson, Realizations) {
  EXPECT_EQ(run({"boson", "--realization", "vdj", "--q", "3/2", "--cutoff", "6"}).code, 0);
  EXPECT_EQ(run({"boson", "--realization", "standard", "--q", "1", "--cutoff", "6"}).code, 0);
  const auto standard = run({"boson", "--realization", "standard", "--q", "2", "--cutoff", "8"});
  EXPECT_EQ(standard.code, 1);
  EXPECT_EQ(Json::parse(standard.out)["summary"]["fail"], 74);
  EXPECT_EQ(run({"boson", "--q", "0"}).code, 2);
  EXPECT_EQ(run({"boson", "--realization", "other"}).code, 2);
}
