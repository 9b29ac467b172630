#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "bicd/cli.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"bicd"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int status = bicd::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bicd_cli_" + name);
}

void write_file(const std::filesystem::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST(Cli, CheckReportsConditionD) {
  const Outcome r = run({"check", "--lambda", "3", "--v", "2", "--u", "2", "--m", "2,2,2,2,2,2"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("fail(d): 12 > 8"), std::string::npos) << r.out;
}

TEST(Cli, CheckWarnsWhenReordering) {
  const Outcome r = run({"check", "--lambda", "2", "--v", "3", "--u", "3", "--m", "6,2,2,4,4"});
  EXPECT_NE(r.err.find("reordered"), std::string::npos);
  EXPECT_NE(r.out.find("necessary: pass"), std::string::npos);
}

TEST(Cli, DecomposeEmitsVerifiableCertificate) {
  const Outcome r = run({"decompose", "--lambda", "2", "--v", "3", "--u", "3", "--m", "2,2,4,4,6", "--allow-oracle"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto path = scratch("roundtrip.cert");
  write_file(path, r.out);
  const Outcome v = run({"verify", "--cert", path.c_str()});
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(v.out, "valid\n");
  std::filesystem::remove(path);
}

TEST(Cli, DecomposeWritesToOutFile) {
  const auto path = scratch("out.cert");
  const Outcome r = run({"decompose", "--lambda", "1", "--v", "4", "--u", "4", "--m", "4,4,4,4", "--allow-oracle", "--out",
                     path.c_str()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"verify", "--cert", path.c_str()}).status, 0);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyRejectsTamperedCertificate) {
  // The two 2-cycles on (L1,R2) and (L2,R0) are replaced by a second copy of (L2,R0).
  const std::string text =
      R"({"lambda":2,"v":3,"u":3,"M":[2,2,4,4,6],"cycles":[[["L",2],["R",0]],[["L",2],["R",0]],)"
      R"([["L",0],["R",0],["L",1],["R",1]],[["L",0],["R",1],["L",2],["R",2]],)"
      R"([["L",0],["R",0],["L",1],["R",1],["L",2],["R",2]]]})";
  const auto path = scratch("tampered.cert");
  write_file(path, text);
  const Outcome r = run({"verify", "--cert", path.c_str()});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out, "invalid: pair (L1,R2) covered 0 of 2\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyMissingFileIsUsageError) {
  EXPECT_EQ(run({"verify", "--cert", "/nonexistent/bicd.cert"}).status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"check", "--lambda", "1"}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"check", "--lambda", "1", "--v", "2", "--u", "2", "--m", "4,x"}).status, 2);
  EXPECT_EQ(run({"--format", "xml", "check", "--lambda", "1", "--v", "2", "--u", "2", "--m", "4"}).status, 2);
}

TEST(Cli, NotCoveredWithoutOracleExitsOne) {
  // K_{3,3} into three 6-cycles lies outside the constructive hypotheses.
  const Outcome r = run({"decompose", "--lambda", "2", "--v", "3", "--u", "3", "--m", "6,6,6"});
  EXPECT_EQ(r.status, 1);
  const Outcome o = run({"decompose", "--lambda", "2", "--v", "3", "--u", "3", "--m", "6,6,6", "--allow-oracle"});
  EXPECT_EQ(o.status, 0) << o.err;
  EXPECT_NE(o.err.find("oracle"), std::string::npos);
}

TEST(Cli, OracleDecides) {
  EXPECT_EQ(run({"oracle", "--lambda", "1", "--v", "4", "--u", "4", "--m", "4,4,4,4"}).status, 0);
  // A 6-cycle needs three vertices on each side.
  EXPECT_EQ(run({"oracle", "--lambda", "1", "--v", "2", "--u", "5", "--m", "4,6"}).status, 1);
}

TEST(Cli, MachineFormatIsDeterministic) {
  const std::initializer_list<const char*> args{"--format", "machine", "sweep", "--lambda-max", "2", "--vu-max", "3"};
  const Outcome a = run(args);
  const Outcome b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TraceStreamsSwitchLog) {
  const Outcome r = run({"--trace", "decompose", "--lambda", "2", "--v", "6", "--u", "6", "--m", "6,6,6,6,6,6,6,6,6,6,6,6"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.err.find("switch"), std::string::npos) << r.err;
}
