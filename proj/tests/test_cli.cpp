#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "estrada/cli.hpp"
#include "estrada/enumerate.hpp"
#include "estrada/generators.hpp"
#include "estrada/graph_io.hpp"
#include "estrada/report.hpp"

namespace estrada {
namespace {

using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& body)
      : path_(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path_) << body;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(Cli, ComputeJson) {
  const auto r = run({"compute", "--graph6", "A_", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["version"], "1");
  const auto& g = doc["graphs"][0];
  EXPECT_EQ(g["n"], 2);
  EXPECT_EQ(g["m"], 1);
  EXPECT_NEAR(g["ee"].get<double>(), 3.086161270, 1e-9);
  EXPECT_EQ(g["spectrum"].size(), 2U);
}

TEST(Cli, ComputeCsvAndTable) {
  const auto csv = run({"compute", "--graph6", "C~", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  const auto rows = parse_csv(csv.out);
  ASSERT_EQ(rows.size(), 2U);
  EXPECT_EQ(rows[0][0], "graph6");
  EXPECT_EQ(rows[1][1], "4");
  EXPECT_EQ(rows[1][2], "6");
  EXPECT_EQ(rows[0].size(), rows[1].size());
  const auto table = run({"compute", "--graph6", "C~"});
  ASSERT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("complete"), std::string::npos);
}

TEST(Cli, CheckBoundsFileCsv) {
  const std::vector<std::string> lines{write_graph6(path_graph(4)), write_graph6(complete_bipartite_graph(2, 3)),
                                       write_graph6(cycle_graph(6)), write_graph6(star_graph(5))};
  std::string body;
  for (const auto& l : lines) body += l + "\n";
  TempFile file("estrada_cli_bipartite.g6", body);
  const auto r = run({"check-bounds", "--file", file.path(), "--format", "csv"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), lines.size() + 1);
  const auto& header = rows[0];
  ASSERT_EQ(header, csv_columns());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), header.size());
    EXPECT_EQ(rows[i][0], lines[i - 1]);
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c].starts_with("B") && header[c].ends_with("_gap") && !rows[i][c].empty())
        EXPECT_GE(std::stod(rows[i][c]), -1e-8) << header[c];
    }
  }
}

TEST(Cli, CheckBoundsEdgeListJson) {
  TempFile file("estrada_cli_c4.el", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  const auto r = run({"check-bounds", "--file", file.path(), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 1U);
  EXPECT_EQ(doc["rows"][0]["bounds"]["B6"]["equality"], true);
  EXPECT_EQ(doc["summary"]["violations"], 0);
  EXPECT_TRUE(doc["violations"].empty());
  TempFile renamed("estrada_cli_c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run({"check-bounds", "--file", renamed.path()}).code, cli::kExitUsage);
  EXPECT_EQ(run({"check-bounds", "--file", renamed.path(), "--input-format", "el"}).code, 0);
}

TEST(Cli, SweepStarTable) {
  const auto r = run({"sweep", "--family", "star", "--param", "n=3..8"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::size_t data_rows = 0;
  const auto b4_column = 14 + 4 + 5 + 16 + 4 * index_of(BoundId::B4);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.starts_with("graph6")) continue;
    ++data_rows;
    ASSERT_GE(line.size(), b4_column + 4);
    EXPECT_EQ(line[b4_column + 3], '=') << line;
  }
  EXPECT_EQ(data_rows, 6U);
}

TEST(Cli, ExhaustiveAndEqualityCases) {
  const auto r = run({"exhaustive", "--n-max", "4", "--format", "json", "--jobs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["rows"].size(), 75U);
  const auto e = run({"equality-cases", "--bound", "B6", "--n-max", "5", "--format", "json"});
  ASSERT_EQ(e.code, 0) << e.err;
  const auto doc = json::parse(e.out);
  EXPECT_EQ(doc["cases"]["B6"].size(), 3U);
  const auto csv = run({"equality-cases", "--bound", "G5", "--n-max", "3", "--format", "csv"});
  EXPECT_EQ(csv.out, "bound,graph6\nG5,A?\nG5,B?\n");
}

TEST(Cli, RandomIsByteStable) {
  const std::vector<std::string> args{"random", "--trials", "50", "--seed", "7", "--format", "json"};
  const auto a = run(args);
  auto more_jobs = args;
  more_jobs.insert(more_jobs.end(), {"--jobs", "3"});
  const auto b = run(more_jobs);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto doc = json::parse(a.out);
  EXPECT_EQ(doc["corpus"]["seed"], 7);
  EXPECT_EQ(doc["rows"].size(), 50U);
  const auto bip = run({"random", "--model", "bipartite", "--left", "4", "--right", "5", "--trials", "20", "--format", "csv"});
  ASSERT_EQ(bip.code, 0) << bip.err;
  EXPECT_EQ(parse_csv(bip.out).size(), 21U);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compute", "--graph6", "A_", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compute"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compute", "--graph6", "A_", "--tol", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compute", "--graph6", "A_", "--tol", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"exhaustive", "--n-max", "8"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"sweep", "--family", "dodecahedron"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"equality-cases", "--bound", "Z9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, MalformedInputNamesTheProblem) {
  const auto bad = run({"compute", "--graph6", "A"});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("error:"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
  TempFile file("estrada_cli_bad.g6", "A_\nA_\nB\x01\n");
  const auto r = run({"check-bounds", "--file", file.path()});
  EXPECT_EQ(r.code, cli::kExitUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  const auto missing = run({"check-bounds", "--file", "/nonexistent/x.g6"});
  EXPECT_EQ(missing.code, cli::kExitUsage);
}

TEST(Cli, StrictBoundMetWithinToleranceIsReported) {
  // An absurd tolerance makes every strict-bound gap look like equality.
  const auto r = run({"check-bounds", "--graph6", "A_", "--tol", "10", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitViolation);
  EXPECT_NE(r.err.find("violation\tA_\tG2(strict)\t"), std::string::npos) << r.err;
}

TEST(Cli, JobsEnvironmentFallback) {
  ::setenv("ESTRADA_JOBS", "2", 1);
  EXPECT_EQ(run({"exhaustive", "--n-max", "3", "--format", "csv"}).code, 0);
  ::setenv("ESTRADA_JOBS", "zero", 1);
  EXPECT_EQ(run({"exhaustive", "--n-max", "3", "--format", "csv"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"exhaustive", "--n-max", "3", "--format", "csv", "--jobs", "1"}).code, 0);
  ::unsetenv("ESTRADA_JOBS");
}

}  // namespace
}  // namespace estrada
