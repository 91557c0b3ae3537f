#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "json.hpp"
#include "test_paths.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + SGH_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string grid(const std::string& name) { return diagram_path(name + ".grid"); }

}  // namespace

TEST(Cli, Validate) {
  const auto r = run("validate " + grid("e1_unknot"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "valid: n = 2, m = 2, vertices = 0, edges = 1\n");
  EXPECT_EQ(run("validate /nonexistent.grid").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("homology").status, 1);
  EXPECT_EQ(run("homology " + grid("e1_unknot") + " --mode bogus").status, 1);
  EXPECT_EQ(run("moves " + grid("e1_unknot")).status, 1);
}

TEST(Cli, HomologyJson) {
  const auto r = run("homology " + grid("d3_double_loop") + " --mode hat --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["mode"], "hat");
  EXPECT_EQ(j["total"], 1);
  EXPECT_EQ(j["table"][0]["dM"], 1);
}

TEST(Cli, StateCapFromFlagAndEnvironment) {
  EXPECT_EQ(run("--max-states 6 homology " + grid("v4_double_loop")).status, 2);
  EXPECT_EQ(run("homology " + grid("v4_double_loop"), "SGH_MAX_STATES=6").status, 2);
  EXPECT_EQ(run("homology " + grid("v4_double_loop"), "SGH_MAX_STATES=24").status, 0);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check " + grid("d3_double_loop")).status, 0);
  const auto theta = run("check " + data_path("theta4.grid"));
  EXPECT_EQ(theta.status, 3);
  EXPECT_NE(theta.out.find("FAIL grading_path_independence"), std::string::npos);
}

TEST(Cli, CheckJson) {
  const auto r = run("check " + grid("e1_unknot") + " --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  for (const auto& c : j) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];
}

TEST(Cli, SkeinReportsTheFailedComposite) {
  const auto r = run("skein " + grid("d3_double_loop") + " --vertex 2,0 --partA 2,1 --partC 0,0");
  EXPECT_EQ(r.status, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["exact"].get<bool>());
  for (const auto& c : j["checks"])
    EXPECT_EQ(c["pass"].get<bool>(), c["name"] != "phi_a_phi_b_scalar") << c["name"];
  EXPECT_EQ(run("skein " + grid("d3_double_loop") + " --vertex 1,1 --partA 1,0 --partC 2,1").status, 2);
  EXPECT_EQ(run("skein " + grid("d3_double_loop") + " --vertex 2,0 --partA x --partC 0,0").status, 2);
}

TEST(Cli, MovesRoundTrip) {
  const auto r = run("moves " + grid("e1_unknot") + " --shift-rows 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "grid 2\nx 0 1\nx 1 0\no 0 0\no 1 1\n");
  const auto reflected = run("moves " + grid("d3_double_loop") + " --reflect");
  EXPECT_EQ(reflected.status, 0);
  EXPECT_EQ(reflected.out, "grid 3\nx 0 2\nx 1 1\nx 2 0\no 0 0\no 0 1\no 1 2\no 2 2\n");
}

TEST(Cli, GraphJson) {
  const auto r = run("graph " + grid("d3_double_loop"));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["edge_count"], 2);
}
