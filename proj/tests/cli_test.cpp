#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns stdout and the exit status.
Run run(const std::string& args) {
  const std::string cmd = std::string(LPP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lpp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, BalancedSequence) {
  const auto r = run("balanced-seq --N 7 --n 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1101010\n");
  EXPECT_EQ(run("balanced-seq --N 3 --n 4").code, 1);
}

TEST_F(Cli, SturmGraphThenCertify) {
  const auto file = path("sturm.json");
  ASSERT_EQ(run("sturm-graph --x -11/7 --out " + file).code, 0);
  const auto doc = nlohmann::json::parse(slurp(file));
  EXPECT_EQ(doc["n"], 93);
  EXPECT_EQ(doc["W"], "69");
  EXPECT_EQ(doc["config"]["subcommand"], "sturm-graph");
  const auto yes = run("certify --graph " + file + " --x -11/7");
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(nlohmann::json::parse(yes.out)["verdict"], "witness");
  const auto no = run("certify --graph " + file + " --x 1");
  EXPECT_EQ(no.code, 0);
  EXPECT_EQ(nlohmann::json::parse(no.out)["verdict"], "not a witness");
}

TEST_F(Cli, ValidationFailuresExitOne) {
  EXPECT_EQ(run("sturm-graph --x -1.5").code, 1);
  EXPECT_EQ(run("witness --x 0.5").code, 1);
  EXPECT_EQ(run("witness --x 2/3").code, 1);
  EXPECT_EQ(run("estimate --p 1.5 --x 0 --n 5 --reps 5").code, 1);
  EXPECT_EQ(run("estimate --p 0.5 --x abc --n 5 --reps 5").code, 1);
  EXPECT_EQ(run("renewal --p 0.5 --x 3 --n 5 --reps 5").code, 1);
  EXPECT_EQ(run("certify --graph " + path("missing.json") + " --x 0").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
  std::ofstream(path("bad.json")) << R"({"n":2,"blue":[[0,5]]})";
  EXPECT_EQ(run("certify --graph " + path("bad.json") + " --x 0").code, 1);
}

TEST_F(Cli, DecimalsAcceptedForEstimates) {
  const auto r = run("estimate --p 0.5 --x 0.25 --n 10 --reps 20");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\nx,p,nWindow,reps,mean,stderr,dPlus,dMinus,jump\n0.25,0.5,10,20,"), std::string::npos)
      << r.out;
  EXPECT_EQ(r.out.rfind("# tool=lpp ", 0), 0u);
}

TEST_F(Cli, IdenticalCommandLinesGiveIdenticalBytes) {
  const std::string args = "curve --p 0.4 --x-grid -1,0,1/2,3/2 --n 30 --reps 400 --seed 9";
  const auto a = run(args + " --threads 1");
  const auto b = run(args + " --threads 1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  // Thread count only changes the header line that records it.
  const auto c = run(args + " --threads 3");
  auto strip = [](const std::string& s) {
    std::string kept, line;
    std::istringstream in(s);
    while (std::getline(in, line)) {
      if (line.rfind("# threads=", 0) != 0) kept += line + '\n';
    }
    return kept;
  };
  EXPECT_EQ(strip(a.out), strip(c.out));
  const auto f1 = path("w1.json"), f2 = path("w2.json");
  ASSERT_EQ(run("witness --kind integer --k 3 --out " + f1).code, 0);
  ASSERT_EQ(run("witness --kind integer --k 3 --out " + f2).code, 0);
  EXPECT_EQ(slurp(f1), slurp(f2));
}

TEST_F(Cli, DeltaPmfAndGamma) {
  const auto pmf = run("delta-pmf --p 0.7 --n 4 --reps 200 --seed 2");
  EXPECT_EQ(pmf.code, 0);
  EXPECT_NE(pmf.out.find("n,phat,stderr\n1,"), std::string::npos);
  EXPECT_NE(pmf.out.find("\n2,0,0\n"), std::string::npos) << pmf.out;
  const auto g = run("gamma --p 0.5");
  EXPECT_EQ(g.code, 0);
  ASSERT_EQ(g.out.rfind("gamma=", 0), 0u) << g.out;
  EXPECT_NEAR(std::stod(g.out.substr(6)), 0.0833985638637485, 1e-11);
}

TEST_F(Cli, SelftestSingleCriterion) {
  const auto r = run("selftest --only 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1/1 criteria passed"), std::string::npos) << r.out;
}

}  // namespace
