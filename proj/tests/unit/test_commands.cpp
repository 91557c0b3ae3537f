#include <gtest/gtest.h>

#include "sgh/commands.hpp"
#include "sgh/errors.hpp"
#include "test_paths.hpp"

using namespace sgh;

namespace {

const CheckResult* find(const std::vector<CheckResult>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

TEST(CmdHomology, UnknotTildeAndHat) {
  const auto tilde = cmd_homology(e1(), BlockMode::tilde);
  EXPECT_EQ(tilde.n, 2);
  EXPECT_EQ(tilde.m, 2u);
  EXPECT_EQ(tilde.edge_count, 1u);
  EXPECT_TRUE(tilde.graded);
  EXPECT_EQ(tilde.table, (BigradedDims{{{-1, -1}, 1}, {{0, 0}, 1}}));
  EXPECT_EQ(tilde.total, 2u);

  const auto hat = cmd_homology(e1(), BlockMode::hat);
  EXPECT_EQ(hat.table, (BigradedDims{{{0, 0}, 1}}));
  EXPECT_EQ(hat.total, 1u);
}

TEST(CmdHomology, HatDividesOutTheExtraOs) {
  const auto tilde = cmd_homology(d3(), BlockMode::tilde);
  const auto hat = cmd_homology(d3(), BlockMode::hat);
  EXPECT_EQ(tilde.edge_count, 2u);
  EXPECT_EQ(tensor_w(hat.table, 2), tilde.table);
  EXPECT_EQ(hat.table, (BigradedDims{{{1, 1}, 1}}));
}

TEST(CmdHomology, UngradedDiagramsReportTotals) {
  const Diagram theta = load_diagram(data_path("theta4.grid"));
  const auto tilde = cmd_homology(theta, BlockMode::tilde);
  EXPECT_FALSE(tilde.graded);
  EXPECT_TRUE(tilde.table.empty());
  EXPECT_EQ(tilde.total, 16u);
  const auto hat = cmd_homology(theta, BlockMode::hat);
  EXPECT_EQ(hat.total, 16u >> (theta.o_count() - 3));
}

TEST(CmdHomology, CapIsEnforced) {
  RunOptions opts;
  opts.max_states = 6;
  try {
    cmd_homology(v4(), BlockMode::tilde, opts);
    FAIL() << "expected a cap error";
  } catch (const CapError& e) {
    EXPECT_STREQ(e.what(), "state space 24 exceeds cap 6");
  }
}

TEST(CmdHomology, WorkerCountDoesNotChangeTheReport) {
  RunOptions one, many;
  one.workers = 1;
  many.workers = 8;
  const Diagram d = bundled("trefoil5");
  EXPECT_EQ(homology_json(cmd_homology(d, BlockMode::tilde, one)).dump(),
            homology_json(cmd_homology(d, BlockMode::tilde, many)).dump());
}

TEST(CmdCheck, DoubleLoopPassesEverything) {
  const auto checks = cmd_check(d3());
  EXPECT_TRUE(all_pass(checks)) << checks_text(checks);
  for (const char* name : {"d_minus_squared_zero", "d_tilde_squared_zero", "d_tilde_is_specialization",
                           "grading_path_independence", "differential_bidegree", "homotopy_(2,0)",
                           "reflection_invariance", "cyclic_shift_rows_1", "cyclic_shift_columns_1"})
    EXPECT_NE(find(checks, name), nullptr) << name;
  EXPECT_EQ(find(checks, "homotopy_(2,0)")->detail, "equals (V3V4 + V1V2) Id");
}

TEST(CmdCheck, EdgeHomotopiesCoverConsecutiveOs) {
  const auto checks = cmd_check(v4());
  EXPECT_TRUE(all_pass(checks)) << checks_text(checks);
  std::size_t edge_checks = 0;
  for (const auto& c : checks) edge_checks += c.name.rfind("edge_homotopy_", 0) == 0 ? 1 : 0;
  EXPECT_GT(edge_checks, 0u);
}

TEST(CheckSquareZero, ReportsAWitness) {
  const auto space = StateSpace::enumerate(2);
  PolyMatrix bad(2, 2);
  bad.add(1, 0, Poly::one());
  bad.add(0, 1, Poly::one());
  const auto r = check_square_zero("bad", bad, space);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.detail.find("[0,1]"), std::string::npos) << r.detail;
  EXPECT_TRUE(check_square_zero("zero", PolyMatrix(2, 2), space).pass);
}

TEST(Resources, EstimateGrowsWithTheGrid) {
  EXPECT_LT(estimate_memory_bytes(4, 5), estimate_memory_bytes(5, 5));
  EXPECT_LT(estimate_memory_bytes(7, 8), std::size_t{2} << 30);
  RunOptions opts;
  EXPECT_NO_THROW(require_resources(7, 8, opts));
  EXPECT_THROW(require_resources(9, 10, opts), CapError);
}

TEST(Json, HomologyReportLayout) {
  const auto j = homology_json(cmd_homology(e1(), BlockMode::tilde));
  EXPECT_EQ(j.dump(),
            R"({"n":2,"m":2,"edge_count":1,"mode":"tilde","graded":true,)"
            R"("table":[{"dM":-1,"dA":-1,"dim":1},{"dM":0,"dA":0,"dim":1}],"total":2})");
}

TEST(Json, GraphLayout) {
  const auto j = graph_json(reconstruct(d3()));
  EXPECT_EQ(j["edge_count"], 2);
  EXPECT_EQ(j["vertices"][0]["x"], nlohmann::json::parse("[2,0]"));
  EXPECT_EQ(j["vertices"][0]["in"], nlohmann::json::parse("[3,4]"));
}

TEST(Json, ChecksLayout) {
  const auto j = checks_json({{"a", true, ""}, {"b", false, "why"}});
  EXPECT_EQ(j.dump(), R"([{"name":"a","pass":true,"detail":""},{"name":"b","pass":false,"detail":"why"}])");
}

TEST(Text, HomologyTable) {
  EXPECT_EQ(homology_text(cmd_homology(e1(), BlockMode::hat)),
            "grid 2, m = 2, edges = 1, mode hat\n  dM  dA  dim\n   0   0    1\ntotal 1\n");
  EXPECT_EQ(checks_text({{"a", true, ""}, {"b", false, "why"}}), "PASS a\nFAIL b  why\n");
}

TEST(ParseSquare, Syntax) {
  EXPECT_EQ(parse_square("2,0"), (Square{2, 0}));
  EXPECT_EQ(parse_square(" 3 , 1 "), (Square{3, 1}));
  EXPECT_EQ(parse_square_list("2,1;2,2"), (std::vector<Square>{{2, 1}, {2, 2}}));
  EXPECT_EQ(parse_square_list("2,1;"), (std::vector<Square>{{2, 1}}));
  EXPECT_THROW(parse_square("2"), ValidationError);
  EXPECT_THROW(parse_square("a,1"), ValidationError);
  EXPECT_THROW(parse_square("1,2,3"), ValidationError);
}
