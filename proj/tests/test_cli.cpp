#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tbsym_cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = tbsym::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("tbsym_cli_test_" + name);
}

}  // namespace

TEST(Cli, SymbolClosed) {
  const Outcome o = invoke({"symbol", "5", "3", "--method", "closed"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "3,2,1,1\n");
}

TEST(Cli, SymbolAllAgrees) {
  const Outcome o = invoke({"symbol", "2", "2", "--method", "all"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "2\n2\n2\nAGREE\n");
  EXPECT_EQ(invoke({"symbol", "7", "3"}).out, "3,3,1,1,1\n3,3,1,1,1\n3,3,1,1,1\nAGREE\n");
}

TEST(Cli, SymbolUsageErrors) {
  const Outcome o = invoke({"symbol", "3", "5"});
  EXPECT_EQ(o.code, 2);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("n >= r"), std::string::npos);
  EXPECT_EQ(invoke({"symbol", "3", "0"}).code, 2);
  EXPECT_EQ(invoke({"symbol", "3"}).code, 2);
  EXPECT_EQ(invoke({"symbol", "3", "2", "--method", "magic"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, SymbolCapExitsThree) {
  const Outcome o = invoke({"symbol", "4", "3", "--method", "oracle", "--all-minors", "--max-minors", "10"});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.out, "CAPPED\n");
  const Outcome all = invoke({"symbol", "4", "3", "--all-minors", "--max-minors", "10"});
  EXPECT_EQ(all.code, 3);
  EXPECT_EQ(all.out, "3,1,1,1\n3,1,1,1\nCAPPED\nCAPPED\n");
}

TEST(Cli, SymbolFormats) {
  EXPECT_EQ(invoke({"symbol", "2", "1", "--format", "tsv"}).out,
            "method\tsymbol\nclosed\t1,1\nstructured\t1,1\noracle\t1,1\nverdict\tAGREE\n");
  const Outcome j = invoke({"symbol", "2", "1", "--format", "json", "--method", "closed"});
  EXPECT_NE(j.out.find("\"closed\": \"1,1\""), std::string::npos);
  EXPECT_NE(j.out.find("\"verdict\": \"AGREE\""), std::string::npos);
}

TEST(Cli, TableUpToFour) {
  const Outcome o = invoke({"table", "--max-sum", "4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "n\tr\tclosed\tstructured\toracle\tverdict\n"
            "1\t1\t1\t1\t1\tAGREE\n"
            "2\t1\t1,1\t1,1\t1,1\tAGREE\n"
            "2\t2\t2\t2\t2\tAGREE\n"
            "3\t1\t1,1,1\t1,1,1\t1,1,1\tAGREE\n");
}

TEST(Cli, TableSingleMethodAndCaps) {
  const Outcome o = invoke({"table", "--max-sum", "3", "--method", "closed"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "n\tr\tclosed\tstructured\toracle\tverdict\n1\t1\t1\t-\t-\tAGREE\n2\t1\t1,1\t-\t-\tAGREE\n");
  const Outcome c = invoke({"table", "--max-sum", "5", "--all-minors", "--max-minors", "30"});
  EXPECT_EQ(c.code, 3);
  EXPECT_NE(c.out.find("3\t2\t2,1,1\t2,1,1\tCAPPED\tCAPPED\n"), std::string::npos);
  EXPECT_EQ(invoke({"table"}).code, 2);
}

TEST(Cli, TableIsDeterministic) {
  EXPECT_EQ(invoke({"table", "--max-sum", "7"}).out, invoke({"table", "--max-sum", "7"}).out);
}

TEST(Cli, CertifyWritesFile) {
  const auto path = scratch("c22.json");
  const Outcome o = invoke({"certify", "2", "2", "--jet", "3", "--out", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "CONFIRMED\n");
  const std::string text = slurp(path);
  EXPECT_NE(text.find("\"verdict\": \"CONFIRMED\""), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, CertifyStructuredTraceAndDeterminism) {
  const auto p1 = scratch("c42a.json");
  const auto p2 = scratch("c42b.json");
  ASSERT_EQ(invoke({"certify", "4", "2", "--out", p1.string()}).code, 0);
  ASSERT_EQ(invoke({"certify", "4", "2", "--out", p2.string()}).code, 0);
  const std::string a = slurp(p1);
  EXPECT_EQ(a, slurp(p2));
  const auto at = a.find("\"method\": \"structured\"");
  ASSERT_NE(at, std::string::npos);
  const auto coranks = a.find("\"coranks\"", at);
  std::string trace = a.substr(coranks, a.find(']', coranks) - coranks + 1);
  std::erase_if(trace, [](char ch) { return ch == ' ' || ch == '\n'; });
  EXPECT_EQ(trace, "\"coranks\":[2,2]");
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, CertifyExitCodes) {
  EXPECT_EQ(invoke({"certify", "2", "2", "--out", "/nonexistent-dir/x.json"}).code, 2);
  const Outcome partial = invoke({"certify", "5", "3", "--all-minors", "--max-minors", "2"});
  EXPECT_EQ(partial.code, 3);
  EXPECT_NE(partial.out.find("\"verdict\": \"PARTIAL\""), std::string::npos);
  EXPECT_EQ(invoke({"certify", "1", "2"}).code, 2);
}

TEST(Cli, VerifyLemmas) {
  const Outcome o32 = invoke({"verify-lemmas", "3", "2"});
  EXPECT_EQ(o32.code, 0);
  EXPECT_NE(o32.out.find("PASS  b0-derivative[s=1]\n"), std::string::npos);
  EXPECT_EQ(o32.out.find("b0-derivative[s=2]"), std::string::npos);

  const Outcome o22 = invoke({"verify-lemmas", "2", "2"});
  EXPECT_EQ(o22.code, 0);
  EXPECT_NE(o22.out.find("SKIPPED  product-congruence"), std::string::npos);

  const Outcome o52 = invoke({"verify-lemmas", "5", "2", "--format", "tsv"});
  EXPECT_EQ(o52.code, 0);
  EXPECT_NE(o52.out.find("b0-derivative[s=1]\tPASS"), std::string::npos);
  EXPECT_NE(o52.out.find("b0-derivative[s=2]\tPASS"), std::string::npos);
  EXPECT_EQ(o52.out.find("FAIL"), std::string::npos);
}

TEST(Cli, TimeBudgetFromEnvironment) {
  ::setenv("TB_TIME_BUDGET_SECS", "nonsense", 1);
  EXPECT_EQ(invoke({"symbol", "2", "1"}).code, 2);
  ::setenv("TB_TIME_BUDGET_SECS", "1e-9", 1);
  const Outcome o = invoke({"symbol", "6", "4", "--method", "oracle"});
  EXPECT_EQ(o.code, 3);
  ::unsetenv("TB_TIME_BUDGET_SECS");
  EXPECT_EQ(invoke({"symbol", "6", "4", "--method", "oracle"}).code, 0);
}
