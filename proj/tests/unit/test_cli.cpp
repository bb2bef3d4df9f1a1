#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace {

namespace fs = std::filesystem;

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(CFFA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cffa_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
  const auto yes = write("yes.json", R"({"agents":["a"],"jobs":["x","y"],"utilities":[[3,4]],"edges":[[0,1]],"eta":4})");
  const auto no = write("no.json", R"({"agents":["a"],"jobs":["x","y"],"utilities":[[3,4]],"edges":[[0,1]],"eta":5})");
  const auto bad = write("bad.json", R"({"agents":["a"],"jobs":["x"],"utilities":[[1]],"edges":[],"eta":0})");
  EXPECT_EQ(run("solve --in " + yes).status, 0);
  EXPECT_EQ(run("solve --in " + no).status, 1);
  EXPECT_EQ(run("solve --in " + bad).status, 2);
  EXPECT_EQ(run("solve --in " + path("missing.json")).status, 2);
  const auto path3 = write("p3.json", R"({"agents":["a"],"jobs":["x","y","z"],"utilities":[[1,1,1]],"edges":[[0,1]],"eta":1})");
  EXPECT_EQ(run("solve --alg complete --in " + path3).status, 2);
  EXPECT_EQ(run("solve --alg complete --in " + yes).status, 0);
  EXPECT_EQ(run("solve --alg nonsense --in " + yes).status, 2);
  EXPECT_EQ(run("solve").status, 2);

  std::string big = R"({"agents":["a"],"jobs":[)";
  std::string row, edges;
  for (int i = 0; i < 40; ++i) {
    big += (i ? "," : "") + std::string("\"x") + std::to_string(i) + "\"";
    row += (i ? "," : "") + std::string("1");
  }
  big += R"(],"utilities":[[)" + row + R"(]],"edges":[],"eta":1})";
  EXPECT_EQ(run("solve --alg subsetdp --in " + write("big.json", big)).status, 3);
}

TEST_F(Cli, SolveThenVerify) {
  const auto inst = write("i.json", R"({"agents":["a","b"],"jobs":["x","y","z"],"utilities":[[3,4,1],[1,1,5]],"edges":[[0,1]],"eta":4})");
  const auto solved = run("solve --in " + inst + " --out " + path("r.json"));
  EXPECT_EQ(solved.status, 0);
  EXPECT_TRUE(solved.out.empty());
  const auto verified = run("verify --in " + inst + " --cert " + path("r.json"));
  EXPECT_EQ(verified.status, 0);
  EXPECT_NE(verified.out.find("\"valid\": true"), std::string::npos);

  const auto wrong = write("w.json", R"({"feasible":true,"assignment":{"a":["x","y"],"b":["z"]}})");
  EXPECT_EQ(run("verify --in " + inst + " --cert " + wrong).status, 1);
  const auto unknown = write("u.json", R"({"feasible":true,"assignment":{"a":["q"],"b":["z"]}})");
  EXPECT_EQ(run("verify --in " + inst + " --cert " + unknown).status, 2);
}

TEST_F(Cli, GenerateSolveReduceBench) {
  const auto gen = run("gen random --jobs 7 --agents 2 --seed 5 --cap 2");
  ASSERT_EQ(gen.status, 0);
  EXPECT_EQ(gen.out, run("gen random --jobs 7 --agents 2 --seed 5 --cap 2").out);
  const auto inst = write("g.json", gen.out);
  EXPECT_LE(run("solve --alg color --seed 3 --in " + inst).status, 1);
  EXPECT_LE(run("solve --alg color --exhaustive --in " + inst).status, 1);
  EXPECT_EQ(run("gen cluster --sizes 3,3 --uniform").status, 0);
  EXPECT_EQ(run("gen near-complete --jobs 6 --t 2").status, 0);
  EXPECT_EQ(run("gen regular --jobs 6").status, 0);
  EXPECT_EQ(run("gen regular --jobs 5").status, 2);

  const auto src = write("p.json", R"({"sizes":[4,4,4,4,4,4],"bound":12})");
  const auto reduced = run("reduce 3partition --in " + src);
  ASSERT_EQ(reduced.status, 0);
  EXPECT_EQ(run("solve --in " + write("img.json", reduced.out)).status, 0);
  const auto zero = write("s.json", R"({"vertices":2,"edges":[],"weights":[1,1],"k":1,"rho":0})");
  EXPECT_EQ(run("reduce sbmwis --in " + zero).status, 2);
  EXPECT_EQ(run("reduce sbmwis --lenient --in " + zero).status, 0);

  const auto spec = write("b.json", R"({"rows":[{"generator":"random","jobs":6,"solver":"auto"}]})");
  const auto bench = run("bench --spec " + spec);
  EXPECT_EQ(bench.status, 0);
  EXPECT_EQ(std::count(bench.out.begin(), bench.out.end(), '\n'), 2);
}

TEST_F(Cli, Maximize) {
  const auto inst = write("m.json", R"({"agents":["a","b"],"jobs":["x","y","z"],"utilities":[[3,4,5],[6,1,1]],"edges":[[1,2]],"eta":1})");
  const auto r = run("solve --maximize --in " + inst);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"eta\": 5"), std::string::npos);
}

}  // namespace
