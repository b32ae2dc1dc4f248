#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>

#include "dilation/io.hpp"
#include "support/oracles.hpp"

using namespace dil;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DILATION_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dilation_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string save(const std::string& name, const MetricGraph& g) {
    const std::string path = (dir_ / name).string();
    io::save_graph(path, g);
    return path;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

MetricGraph triangle() { return MetricGraph(ref::equilateral(), {{0, 1}, {1, 2}}); }

}  // namespace

TEST_F(Cli, DilationReport) {
  auto r = run("dilation " + save("tri.json", triangle()));
  ASSERT_EQ(r.code, 0);
  auto doc = io::json::parse(r.out);
  EXPECT_NEAR(doc.at("dilation").get<double>(), 2.0, 1e-12);
  EXPECT_EQ(doc.at("pair"), io::json::parse("[0,2]"));

  r = run("dilation " + save("complete.json", ref::complete_graph(ref::equilateral())));
  ASSERT_EQ(r.code, 0);
  EXPECT_DOUBLE_EQ(io::json::parse(r.out).at("dilation").get<double>(), 1.0);
}

TEST_F(Cli, DecideExitCodes) {
  const std::string tri = save("tri.json", triangle());
  auto r = run("decide " + tri + " --k 1 --t 1.5 --trace " + path("trace.jsonl"));
  ASSERT_EQ(r.code, 0);
  auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc.at("verdict"), "YES");
  EXPECT_EQ(doc.at("edges"), io::json::parse("[[0,2]]"));
  EXPECT_FALSE(io::read_file(path("trace.jsonl")).empty());

  r = run("decide " + save("complete.json", ref::complete_graph(ref::equilateral())) + " --k 1 --t 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::json::parse(r.out).at("edges"), io::json::array());

  ASSERT_EQ(run("gen --family greedy --k 2 -o " + path("g2.json")).code, 0);
  const double t_star = io::json::parse(io::read_file(path("g2.sidecar.json"))).at("t_star_formula").get<double>();
  std::ostringstream t;
  t.precision(17);
  t << 0.9 * 3 * t_star;
  r = run("decide " + path("g2.json") + " --k 2 --t " + t.str());
  EXPECT_EQ(r.code, 10);
  EXPECT_EQ(io::json::parse(r.out).at("verdict"), "NO");
}

TEST_F(Cli, AugmentMethods) {
  const std::string tri = save("tri.json", triangle());
  auto r = run("augment " + tri + " --k 1 --eps 0.1");
  ASSERT_EQ(r.code, 0);
  auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc.at("edges"), io::json::parse("[[0,2]]"));
  EXPECT_DOUBLE_EQ(doc.at("achieved_dilation").get<double>(), 1.0);

  const MetricGraph g = gen_random(8, 5);
  const std::string rnd = save("rnd.json", g);
  r = run("augment " + rnd + " --k 2 --method greedy");
  ASSERT_EQ(r.code, 0);
  const double greedy = io::json::parse(r.out).at("achieved_dilation").get<double>();
  r = run("oracle " + rnd + " --k 2");
  ASSERT_EQ(r.code, 0);
  const double exact = io::json::parse(r.out).at("achieved_dilation").get<double>();
  EXPECT_LE(greedy, 3.3 * exact * (1 + 1e-9));

  EXPECT_EQ(run("oracle " + rnd + " --k 2 --oracle-cap 5").code, 3);
}

TEST_F(Cli, BottleneckFamilyFile) {
  ASSERT_EQ(run("gen --family bottleneck --k 3 --h 1e-3 -o " + path("plain.json")).code, 0);
  auto r = run("dilation " + path("plain.json"));
  ASSERT_EQ(r.code, 0);
  const double h = 1e-3;
  EXPECT_NEAR(io::json::parse(r.out).at("dilation").get<double>(), std::sqrt(1 + h * h) / h, 1e-9);

  // Ties broken against the heuristic, which is what the 2^k gap needs.
  ASSERT_EQ(run("gen --family bottleneck --k 3 --h 1e-3 --perturb -o " + path("b3.json")).code, 0);

  r = run("augment " + path("b3.json") + " --k 3 --method bottleneck");
  ASSERT_EQ(r.code, 0);
  const double heuristic = io::json::parse(r.out).at("achieved_dilation").get<double>();
  r = run("oracle " + path("b3.json") + " --k 3");
  ASSERT_EQ(r.code, 0);
  const double exact = io::json::parse(r.out).at("achieved_dilation").get<double>();
  EXPECT_NEAR(heuristic / exact, 8.0, 0.2);
}

TEST_F(Cli, GenFiles) {
  ASSERT_EQ(run("gen --family bottleneck --k 1 --h 0.1 -o " + path("b1.json")).code, 0);
  const MetricGraph b1 = io::load_graph(path("b1.json"));
  ASSERT_EQ(b1.size(), 5u);
  EXPECT_NEAR(b1.space().point(2)[0], 1.0, 1e-15);
  EXPECT_NEAR(b1.space().point(2)[1], 0.3, 1e-15);
  const auto side = io::json::parse(io::read_file(path("b1.sidecar.json")));
  EXPECT_EQ(side.at("labels").at("z1"), 2);

  ASSERT_EQ(run("gen --family greedy --k 2 -o " + path("g2.json")).code, 0);
  EXPECT_EQ(io::load_graph(path("g2.json")).size(), 15u);

  EXPECT_EQ(run("gen --family greedy --k 1 -o " + path("g1.json")).code, 1);
  EXPECT_FALSE(fs::exists(path("g1.json")));
}

TEST_F(Cli, BenchRows) {
  auto r = run("bench --sizes 25,50,100 --k 1 --seeds 3 --no-oracle");
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("n,k,seed", 0), 0u);
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  EXPECT_EQ(count, 9u);
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("decide").code, 2);
  EXPECT_EQ(run("dilation " + path("missing.json")).code, 1);
  io::write_file(path("bad.json"), "{ not json");
  EXPECT_EQ(run("dilation " + path("bad.json")).code, 1);
  EXPECT_EQ(run("decide " + save("tri.json", triangle()) + " --k 1 --t 0.5").code, 1);
}
