#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "trapset/catalog.hpp"
#include "trapset/random_code.hpp"

namespace trapset {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "trapset");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trapset_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenSummaries) {
  auto r = run({"gen", "4", "6", "6", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "total=3 absorbing=2 lss={6:3}");
  EXPECT_NE(r.out.find("TS {g:3} AS {g:2}"), std::string::npos);
  r = run({"gen", "--dl", "3", "--girth", "8", "--a", "4", "--b", "4"});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "total=1 absorbing=1 lss={8:1}");
  r = run({"gen", "5", "8", "7", "9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "total=0 (class infeasible or empty)\n");
}

TEST_F(CliTest, GenWritesCatalog) {
  const auto r = run({"gen", "4", "6", "6", "6", "--out", path("c.cat")});
  ASSERT_EQ(r.code, 0);
  const Catalog c = parse_catalog(slurp(path("c.cat")));
  EXPECT_EQ(c.entries.size(), 11u);
  EXPECT_TRUE(c.fully_labeled());
}

TEST_F(CliTest, GenRequiresExtendedForLargeCells) {
  auto r = run({"gen", "6", "6", "9", "10"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("--extended"), std::string::npos);
  r = run({"gen", "3", "6", "10", "2"});
  EXPECT_EQ(r.code, cli::kUsage);
}

TEST_F(CliTest, GenRejectsOutOfScope) {
  EXPECT_EQ(run({"gen", "7", "6", "6", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "3", "7", "6", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "3", "6"}).code, cli::kUsage);
  EXPECT_EQ(run({"gen", "3", "6", "x", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
}

TEST_F(CliTest, ClassifyCatalogs) {
  ASSERT_EQ(run({"gen", "3", "6", "6", "4", "--no-classify", "--out", path("a.cat")}).code, 0);
  EXPECT_FALSE(parse_catalog(slurp(path("a.cat"))).fully_labeled());
  auto r = run({"classify", path("a.cat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "TS {10:2, 12:1, NA:1}");
  EXPECT_TRUE(parse_catalog(slurp(path("a.cat"))).fully_labeled());
  const std::string once = slurp(path("a.cat"));
  ASSERT_EQ(run({"classify", path("a.cat"), "--force"}).code, 0);
  EXPECT_EQ(slurp(path("a.cat")), once);

  ASSERT_EQ(run({"gen", "4", "6", "8", "8", "--no-classify", "--out", path("b.cat")}).code, 0);
  r = run({"classify", path("b.cat"), "--out", path("b2.cat")});
  EXPECT_NE(r.out.find("AS {10:3, 12:2}"), std::string::npos) << r.out;
  EXPECT_TRUE(parse_catalog(slurp(path("b2.cat"))).fully_labeled());
}

TEST_F(CliTest, ClassifyEmptyCatalog) {
  ASSERT_EQ(run({"gen", "5", "8", "7", "9", "--out", path("e.cat")}).code, 0);
  const auto r = run({"classify", path("e.cat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "TS {}\nAS {}\n");
}

TEST_F(CliTest, ClassifyInputErrors) {
  EXPECT_EQ(run({"classify", path("missing.cat")}).code, cli::kInputError);
  {
    std::ofstream out(path("bad.cat"));
    out << "# 3 6 4 4\nnot-hex\t1\t8\n";
  }
  const auto r = run({"classify", path("bad.cat")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST_F(CliTest, SearchAndDeterminism) {
  ASSERT_EQ(run({"random-code", "--vars", "30", "--checks", "22", "--seed", "4", "--out", path("r.alist")}).code, 0);
  const auto a = run({"search", path("r.alist"), "--k", "6", "--max-cycle-len", "8", "--json", "--threads", "1"});
  const auto b = run({"search", path("r.alist"), "--k", "6", "--max-cycle-len", "8", "--json", "--threads", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"classes\""), std::string::npos);
  ASSERT_EQ(run({"search", path("r.alist"), "--k", "6", "--out", path("r.json"), "--sets"}).code, 0);
  EXPECT_NE(slurp(path("r.json")).find("\"sets\""), std::string::npos);
}

TEST_F(CliTest, SearchErrors) {
  {
    std::ofstream out(path("bad.alist"));
    out << "3 6\n3 2\nzz\n";
  }
  auto r = run({"search", path("bad.alist")});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("bad.alist"), std::string::npos);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  ASSERT_EQ(run({"random-code", "--seed", "2", "--out", path("r.alist")}).code, 0);
  EXPECT_EQ(run({"search", path("r.alist"), "--k", "20"}).code, cli::kUsage);
  EXPECT_EQ(run({"search", path("r.alist"), "--max-cycle-len", "40"}).code, cli::kUsage);
}

TEST_F(CliTest, GenIsDeterministicAcrossThreads) {
  ASSERT_EQ(run({"gen", "4", "6", "8", "6", "--threads", "1", "--out", path("t1.cat")}).code, 0);
  ASSERT_EQ(run({"gen", "4", "6", "8", "6", "--threads", "4", "--out", path("t4.cat")}).code, 0);
  EXPECT_EQ(slurp(path("t1.cat")), slurp(path("t4.cat")));
}

TEST_F(CliTest, VerifyTables) {
  auto r = run({"verify-tables", "4", "--girth", "8", "--max-a", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("diffs=0"), std::string::npos);
  r = run({"verify", "--dl", "3", "--girth", "6", "--max-a", "8"});
  // The reference (8,6) cell for d_l = 3 disagrees with the layered rule (see README).
  EXPECT_EQ(r.code, cli::kMismatch);
  EXPECT_NE(r.out.find("DIFF dl=3 g=6 (8,6)"), std::string::npos);
  EXPECT_EQ(run({"verify", "6", "--girth", "6", "--max-a", "9"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify", "9"}).code, cli::kUsage);
}

TEST_F(CliTest, RandomCodeAndShow) {
  auto r = run({"random-code", "--vars", "12", "--checks", "9", "--seed", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "12 9");
  EXPECT_EQ(run({"random-code", "--mode", "zig"}).code, cli::kUsage);
  EXPECT_EQ(run({"random-code", "--mode", "peg", "--vars", "30", "--checks", "30", "--girth", "8"}).code, 0);
  ASSERT_EQ(run({"gen", "4", "6", "6", "2", "--out", path("s.cat")}).code, 0);
  r = run({"show", path("s.cat")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("entries=3"), std::string::npos);
}

}  // namespace
}  // namespace trapset
