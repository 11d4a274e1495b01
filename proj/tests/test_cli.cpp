#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ramsey_p5/cli.hpp"

namespace fs = std::filesystem;
using namespace ramsey_p5;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "ramsey-p5");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ramsey_p5_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  static std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static void write(const std::string& path, const std::string& text) {
    std::ofstream(path, std::ios::binary) << text;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, Turan) {
  const CliResult r = run({"turan", "11"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ex=15 extremal=K4+K4+K3 unique=true\n");
  EXPECT_EQ(run({"turan", "10"}).out, "ex=13 extremal=K4+K4+K2 unique=true\n");
  EXPECT_EQ(run({"turan", "40"}).out, "ex=60 extremal=K4+K4+K4+K4+K4+K4+K4+K4+K4+K4 unique=unchecked\n");
}

TEST_F(Cli, Table) {
  const CliResult r = run({"table", "--max-r", "8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("r=4 R=11 case=special\n"), std::string::npos);
  EXPECT_NE(r.out.find("r=5 R=17 case=3r+2\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
}

TEST_F(Cli, WitnessThenVerify) {
  const std::string cert = file("k10.cert");
  const CliResult w = run({"witness", "4", "-o", cert});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out, "r=4\nn=10\nverified=true\nfile=" + cert + "\n");
  const CliResult v = run({"verify", cert});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "n=10\nr=4\nverified=true\n");
  // stdout form is byte-identical to the file
  EXPECT_EQ(run({"witness", "4"}).out, read(cert));
  const Certificate back = read_certificate(read(cert));
  EXPECT_EQ(back.colouring, k10_colouring());
}

TEST_F(Cli, WitnessFromDesignFile) {
  const std::string design = file("b16.design");
  EXPECT_EQ(run({"design", "search", "--v", "16", "--mode", "steiner", "--classes", "5", "-o", design}).code, 0);
  const CliResult dv = run({"design", "verify", design});
  EXPECT_EQ(dv.code, 0);
  EXPECT_EQ(dv.out, "v=16\nmode=steiner\nblocks=20\nproperty=true\nclasses=5\nresolution=true\n");
  const CliResult w = run({"witness", "6", "--design", design});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(verify_certificate(read_certificate(w.out)).holds);
  EXPECT_EQ(read_certificate(w.out).colouring.order(), 17);
}

TEST_F(Cli, TamperedCertificate) {
  const std::string cert = file("bad.cert");
  std::string text = write_certificate({EdgeColouring(5, 1), "mono-p5-free", {}});
  write(cert, text);
  const CliResult v = run({"verify", cert});
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.out.find("verified=false\ncolour=1\npath="), std::string::npos);
  write(cert, text.substr(0, text.size() - 6));
  const CliResult p = run({"verify", cert});
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.out.find("error=parse\nline="), std::string::npos);
}

TEST_F(Cli, DesignVerifyReportsFailures) {
  const std::string d = file("bad.design");
  write(d, "DESIGN v1\nv=8 k=4 mode=steiner\nP 1\n0 1 2 3\n4 5 6 7\n");
  const CliResult r = run({"design", "verify", d});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("property=false"), std::string::npos);
  write(d, "DESIGN v1\nv=8 k=4 mode=packing\nP 0\n0 1 2 3\n");
  const CliResult p = run({"design", "verify", d});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("leave_edges=22\n"), std::string::npos);
}

TEST_F(Cli, Claims) {
  const CliResult r = run({"claims", "--all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lemma1=holds max_r=100\n"), std::string::npos);
  EXPECT_NE(r.out.find("claim1=holds m14=2 m15=1 m16=0\n"), std::string::npos);
  EXPECT_NE(r.out.find("lemma3=holds"), std::string::npos);
  EXPECT_EQ(run({"claims", "--lemma1", "20"}).out, "lemma1=holds max_r=20\n");
}

TEST_F(Cli, Search) {
  const CliResult r = run({"search", "--n", "8", "--r", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 24), "outcome=witness\nn=8\nr=3\n");
  EXPECT_NE(r.out.find("RAMSEY-P5 v1\nn=8 r=3\n"), std::string::npos);
  const CliResult e = run({"search", "--n", "9", "--r", "3", "--nodes", "1"});
  EXPECT_EQ(e.code, 3);
  EXPECT_EQ(e.out.substr(0, 25), "outcome=budget-exhausted\n");
}

TEST_F(Cli, JobsFromEnvironment) {
  ::setenv("RAMSEY_P5_JOBS", "3", 1);
  const CliResult r = run({"search", "--n", "9", "--r", "3"});
  ::unsetenv("RAMSEY_P5_JOBS");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("outcome=refuted\n"), std::string::npos);
  EXPECT_NE(r.out.find("workers=3\nmode=parallel\n"), std::string::npos);
  ::setenv("RAMSEY_P5_JOBS", "zero", 1);
  EXPECT_EQ(run({"search", "--n", "5", "--r", "1"}).code, 2);
  ::unsetenv("RAMSEY_P5_JOBS");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"turan", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "13", "--r", "2"}).code, 2);
  EXPECT_EQ(run({"design", "search", "--v", "8", "--mode", "steiner", "--classes", "3"}).code, 2);
  EXPECT_EQ(run({"design", "search", "--v", "8", "--mode", "kirkman", "--classes", "3"}).code, 2);
  EXPECT_EQ(run({"claims", "--claim1", "--lemma3"}).code, 2);
  EXPECT_EQ(run({"witness", "11"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Binary) {
  const std::string cert = file("b.cert");
  const std::string exe = RAMSEY_P5_CLI;
  EXPECT_EQ(std::system((exe + " witness 3 -o " + cert + " > /dev/null 2>&1").c_str()), 0);
  EXPECT_EQ(std::system((exe + " verify " + cert + " > /dev/null 2>&1").c_str()), 0);
  const int bad = std::system((exe + " --nope > /dev/null 2>&1").c_str());
  ASSERT_TRUE(WIFEXITED(bad));
  EXPECT_EQ(WEXITSTATUS(bad), 2);
}

TEST_F(Cli, BundledDesigns) {
  const std::string data = RAMSEY_P5_DATA;
  const CliResult b16 = run({"design", "verify", data + "/b4_16.design"});
  EXPECT_EQ(b16.code, 0);
  EXPECT_EQ(b16.out, "v=16\nmode=steiner\nblocks=20\nproperty=true\nclasses=5\nresolution=true\n");
  const CliResult c8 = run({"design", "verify", data + "/cover_8_3.design"});
  EXPECT_EQ(c8.code, 0);
  EXPECT_EQ(c8.out, "v=8\nmode=covering\nblocks=6\nproperty=true\nclasses=3\nresolution=true\n");
  const CliResult w = run({"witness", "5", "--design", data + "/b4_16.design"});
  EXPECT_EQ(w.code, 0);
  EXPECT_TRUE(verify_certificate(read_certificate(w.out)).holds);
}
