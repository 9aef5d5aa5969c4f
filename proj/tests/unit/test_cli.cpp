#include "fatbetti/cli.hpp"
#include "fatbetti/formulas.hpp"
#include "fatbetti/koszul.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace fatbetti;
using namespace fatbetti::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fatbetti");
  std::ostringstream out, err;
  const int status = main_entry(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> t;
  for (std::string s; is >> s;) t.push_back(s);
  return t;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("fatbetti_cli_" + std::to_string(std::random_device{}()) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Diagram, QuotientByProperIdeal) {
  EXPECT_EQ(render_diagram(BettiTable::quotient_of_proper(3)), "total: 1\n    0: 1\n");
}

TEST(Diagram, TwoPointRowsAreTokenExact) {
  const auto lines = lines_of(render_diagram(two_points_betti(5, 5, 4)));
  ASSERT_EQ(lines.size(), 10u);
  EXPECT_EQ(tokens(lines[0]), (std::vector<std::string>{"total:", "1", "126", "420", "540", "315", "70"}));
  EXPECT_EQ(tokens(lines[5]), (std::vector<std::string>{"4:", ".", "91", "280", "330", "175", "35"}));
  EXPECT_EQ(tokens(lines[9]), (std::vector<std::string>{"8:", ".", "1", "4", "6", "4", "1"}));
}

TEST(Diagram, TriplePointRowTwo) {
  const auto lines = lines_of(render_diagram(triple_points_betti(5, 3)));
  EXPECT_EQ(tokens(lines[3]), (std::vector<std::string>{"2:", ".", "4", "3", ".", ".", "."}));
}

TEST(Diagram, ColumnsAreRightAligned) {
  const auto lines = lines_of(render_diagram(two_points_betti(5, 5, 4)));
  for (const auto& l : lines) EXPECT_EQ(l.size(), lines[0].size()) << l;
}

TEST(Diagram, RoundTripsThroughParser) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    BettiTable t = BettiTable::quotient_of_proper(5);
    for (int k = 0; k < 8; ++k) {
      const int i = 1 + static_cast<int>(rng() % 5);
      t.add(i, i + static_cast<int>(rng() % 6), BigInt(1 + rng() % 500));
    }
    EXPECT_EQ(parse_diagram(render_diagram(t), 5), t);
  }
  const BettiTable unit(3);
  EXPECT_EQ(parse_diagram(render_diagram(unit), 3), unit);
}

TEST(Diagram, TotalsAgreeWithColumnSums) {
  const auto t = triple_points_betti(4, 2);
  const auto first = tokens(lines_of(render_diagram(t))[0]);
  for (int i = 0; i <= t.max_index(); ++i)
    EXPECT_EQ(first[static_cast<std::size_t>(i) + 1], std::to_string(t.total(i)));
}

TEST(Diagram, ParserRejectsInconsistentTotals) {
  EXPECT_THROW(parse_diagram("total: 1 3\n0: 1 .\n1: . 2\n", 3), std::invalid_argument);
  EXPECT_THROW(parse_diagram("total: 1 x\n", 3), std::invalid_argument);
  EXPECT_THROW(parse_diagram("zero 1\n", 3), std::invalid_argument);
  EXPECT_THROW(parse_diagram("total: 1\n0: 1 .\n1: . 0\n", 3), std::invalid_argument);
  EXPECT_THROW(parse_diagram("total: 1\n0: 1\n1: . 2\n", 3), std::invalid_argument);
}

TEST(Json, TableRoundTrip) {
  const auto t = double_points_betti(4, 3);
  EXPECT_EQ(table_from_json(table_to_json(t), 5), t);
  EXPECT_EQ(table_to_json(BettiTable::quotient_of_proper(2)).dump(), "[[0,0,1]]");
}

TEST(Json, OutputCarriesEveryTable) {
  const auto r = invoke({"betti", "--fat-points", "3,2", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["command"], "betti");
  EXPECT_EQ(doc["parameters"]["n"], 3);
  EXPECT_EQ(doc["parameters"]["char"], 32003);
  ASSERT_EQ(doc["tables"].size(), 2u);
  EXPECT_EQ(table_from_json(doc["tables"][0]["entries"], 4), two_points_betti(3, 3, 2));
  EXPECT_EQ(doc["tables"][0]["entries"], doc["tables"][1]["entries"]);
  EXPECT_TRUE(doc["verdicts"]["match"].get<bool>());
}

TEST(Input, ParsesEachSourceKind) {
  auto [mono, p] = parse_input(nlohmann::json::parse(R"({"vars": 3, "char": 7, "monomials": [[2,0,0],[1,1,0]]})"));
  EXPECT_EQ(p, 7u);
  EXPECT_EQ(std::get<MonomialIdeal>(mono).size(), 2u);

  auto [coord, q] = parse_input(nlohmann::json::parse(R"({"vars": 4, "fat_points_coordinate": [3,2]})"));
  EXPECT_FALSE(q);
  EXPECT_EQ(std::get<FatPointConfig>(coord).n, 3);

  auto [expl, _] = parse_input(nlohmann::json::parse(
      R"({"vars": 3, "fat_points_explicit": [{"coords": [1,1,1], "mult": 1}, {"coords": [1,0,0], "mult": 2}]})"));
  const auto& cfg = std::get<FatPointConfig>(expl);
  EXPECT_EQ(cfg.multiplicities, (std::vector<int>{2, 1}));
  EXPECT_EQ(cfg.coordinates.front(), (std::vector<long long>{1, 0, 0}));
}

TEST(Input, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_input(nlohmann::json::parse(R"({"vars": 3})")), UsageError);
  EXPECT_THROW(parse_input(nlohmann::json::parse(R"({"vars": 3, "monomials": [[1,0]]})")), UsageError);
  EXPECT_THROW(parse_input(nlohmann::json::parse(
                   R"({"vars": 3, "monomials": [[1,0,0]], "fat_points_coordinate": [1]})")),
               UsageError);
  EXPECT_THROW(read_input_file("/nonexistent/fatbetti.json"), UsageError);
}

TEST(ExitStatus, SuccessAndMatch) {
  const auto r = invoke({"betti", "--fat-points", "2,2,2", "--n", "3"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
  EXPECT_NE(r.out.find("double points"), std::string::npos);
}

TEST(ExitStatus, UsageErrors) {
  EXPECT_EQ(invoke({}).status, kUsage);
  EXPECT_EQ(invoke({"betti"}).status, kUsage);
  EXPECT_EQ(invoke({"betti", "--fat-points", "2,2"}).status, kUsage);
  EXPECT_EQ(invoke({"betti", "--fat-points", "2,x", "--n", "2"}).status, kUsage);
  EXPECT_EQ(invoke({"betti", "--fat-points", "2,3", "--n", "2"}).status, kUsage);
  EXPECT_EQ(invoke({"betti", "--fat-points", "2,2", "--n", "2", "--method", "maybe"}).status, kUsage);
  EXPECT_EQ(invoke({"betti", "--fat-points", "2,2", "--n", "2", "--char", "6"}).status, kUsage);
  EXPECT_EQ(invoke({"split", "--fat-points", "2,2,2", "--n", "3"}).status, kUsage);
  EXPECT_EQ(invoke({"bogus"}).status, kUsage);
}

TEST(ExitStatus, ComputationErrors) {
  const auto r = invoke({"betti", "--fat-points", "2,1", "--n", "2", "--cap", "1"});
  EXPECT_EQ(r.status, kComputation);
  EXPECT_FALSE(r.err.empty());
}

TEST(ExitStatus, FailedChecks) {
  const auto desc = invoke({"mapcone", "--fat-points", "2,2,2", "--n", "3", "--order", "descending"});
  EXPECT_EQ(desc.status, kCheckFailed);
  EXPECT_NE(desc.out.find("FLAGGED"), std::string::npos);

  TempFile f(R"({"vars": 3, "char": 0, "fat_points_explicit": [
      {"coords": [1,0,0], "mult": 2}, {"coords": [0,1,0], "mult": 2},
      {"coords": [0,0,1], "mult": 2}, {"coords": [1,1,1], "mult": 2}]})");
  const auto cwl = invoke({"cwl", "--points-file", f.path()});
  EXPECT_EQ(cwl.status, kCheckFailed);
  EXPECT_EQ(cwl.out, "NOT componentwise linear (fails at d=4)\n");
}

TEST(Commands, FormulaRequiredButUnavailable) {
  TempFile f(R"({"vars": 3, "monomials": [[1,1,0],[0,1,1]]})");
  EXPECT_EQ(invoke({"betti", "--file", f.path(), "--method", "formula"}).status, kUsage);
  const auto r = invoke({"betti", "--file", f.path()});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("oracle"), std::string::npos);
  EXPECT_EQ(r.out.find("formula"), std::string::npos);
}

TEST(Commands, StableMonomialInputUsesEliahouKervaire) {
  TempFile f(R"({"vars": 3, "monomials": [[2,0,0],[1,1,0],[0,2,0],[1,0,1]]})");
  const auto r = invoke({"betti", "--file", f.path()});
  EXPECT_EQ(r.status, kOk) << r.err;
  EXPECT_NE(r.out.find("Eliahou-Kervaire"), std::string::npos);
  EXPECT_NE(r.out.find("MATCH"), std::string::npos);
}

TEST(Commands, FileCharacteristicIsOverriddenByFlag) {
  TempFile f(R"({"vars": 3, "char": 5, "fat_points_coordinate": [2,1]})");
  const auto r = invoke({"betti", "--file", f.path(), "--char", "0", "--format", "json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["parameters"]["char"], 0);
}

TEST(Commands, MultiplicityReport) {
  const auto r = invoke({"mult", "--fat-points", "5,4", "--n", "5"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_NE(r.out.find("bounds: 126 <= 182 <= 1287"), std::string::npos);
}

TEST(Commands, SplitReport) {
  const auto r = invoke({"split", "--fat-points", "4,2", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["verdicts"]["splitting"], "verified");
  EXPECT_TRUE(doc["verdicts"]["formula_match"].get<bool>());
  EXPECT_TRUE(doc["verdicts"]["oracle_match"].get<bool>());
}

TEST(Commands, MapconeOrders) {
  EXPECT_EQ(invoke({"mapcone", "--fat-points", "3,2", "--n", "3"}).status, kOk);
  EXPECT_EQ(invoke({"mapcone", "--fat-points", "2,2,2", "--n", "3"}).status, kOk);
  EXPECT_EQ(invoke({"mapcone", "--fat-points", "2,2,2", "--n", "3", "--order", "greedy"}).status, kOk);
  EXPECT_EQ(invoke({"mapcone", "--fat-points", "3,2", "--n", "3", "--order", "descending"}).status, kUsage);
}
