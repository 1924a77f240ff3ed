#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "pairscheme/report.hpp"
#include "pairscheme/runner.hpp"

using namespace pairscheme;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const char* bin = std::getenv("PAIRSCHEME_BIN");
  if (!bin) throw std::runtime_error("PAIRSCHEME_BIN not set");
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CommandResult res;
  std::array<char, 4096> buf{};
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST(Runner, ReportRoundTrip) {
  RunRequest req;
  req.family = "twin";
  req.q = 3;
  auto res = run(req);
  EXPECT_TRUE(res.ok);
  // byte-deterministic and parseable
  std::string dumped = res.report.dump(2);
  EXPECT_EQ(Json::parse(dumped), res.report);
  auto res2 = run(req);
  EXPECT_EQ(res2.report.dump(2), dumped);
  // eigenmatrix entries survive the round trip exactly
  auto m = cyclotomic_from_json(res.report.at("eigen").at("matrix").at("rows")[3].at("entries")[3]);
  EXPECT_EQ(m.order(), 15);
}

TEST(Runner, FamilyQValues) {
  EXPECT_EQ(family_q_values("twin", 9), (std::vector<long>{2, 3, 5, 7, 9}));
  EXPECT_EQ(family_q_values("gdd", 8), (std::vector<long>{2, 3, 4, 7, 8}));
  EXPECT_EQ(family_q_values("intro", 9), (std::vector<long>{3, 5, 7, 9}));
  EXPECT_TRUE(family_q_values("twin", 1).empty());
}

TEST(Cli, TwinVerifyAllJson) {
  auto res = run_cli("twin --q 3 --verify all --format json");
  EXPECT_EQ(res.exit_code, 0) << res.output;
  Json report = Json::parse(res.output);
  EXPECT_EQ(report.at("family"), "twin");
  EXPECT_EQ(report.at("classes").get<long>(), 7);
  EXPECT_TRUE(report.at("ok").get<bool>());
  EXPECT_TRUE(report.at("eigen").at("closed_form_match").get<bool>());
  EXPECT_TRUE(report.at("eigen").at("self_dual").at("found").get<bool>());
}

TEST(Cli, InvalidInputGivesExit2) {
  auto res = run_cli("twin --q 13");
  EXPECT_EQ(res.exit_code, 2);
  EXPECT_NE(res.output.find("15 is not a prime power"), std::string::npos) << res.output;
  EXPECT_EQ(run_cli("gdd --q 5").exit_code, 2);
  EXPECT_EQ(run_cli("intro --q 4").exit_code, 2);
}

TEST(Cli, GddEigenPretty) {
  auto res = run_cli("gdd --q 4 --eigen --format pretty");
  EXPECT_EQ(res.exit_code, 0) << res.output;
  EXPECT_NE(res.output.find("9 classes"), std::string::npos);
  EXPECT_NE(res.output.find("first eigenmatrix (order 10)"), std::string::npos);
  EXPECT_NE(res.output.find("V5("), std::string::npos);  // construction labels attached
  EXPECT_NE(res.output.find("i)"), std::string::npos);   // decimal column on the surd entries
}

TEST(Cli, SweepEmptyAndSmall) {
  auto res = run_cli("sweep --family twin --max-q 1 --format json");
  EXPECT_EQ(res.exit_code, 0) << res.output;
  Json report = Json::parse(res.output);
  EXPECT_TRUE(report.at("rows").empty());
  auto res3 = run_cli("sweep --family gdd --max-q 3 --format csv");
  EXPECT_EQ(res3.exit_code, 0) << res3.output;
  EXPECT_NE(res3.output.find("q,vertices,classes,ok"), std::string::npos);
  auto res4 = run_cli("sweep --family intro --max-q 5 --format json");
  EXPECT_EQ(res4.exit_code, 0) << res4.output;
  EXPECT_EQ(Json::parse(res4.output).at("rows").size(), 2u);  // q = 3, 5
}

TEST(Cli, PhiMappingFile) {
  std::string path = ::testing::TempDir() + "phi_twin3.csv";
  {
    std::ofstream out(path);
    // 0->x, 3->y, and 1,2,4 onto the field in a scrambled order
    out << "0,x\n3,y\n1,2\n2,0\n4,1\n";
  }
  auto res = run_cli("twin --q 3 --verify all --phi " + path + " --format json");
  EXPECT_EQ(res.exit_code, 0) << res.output;
  Json report = Json::parse(res.output);
  EXPECT_TRUE(report.at("ok").get<bool>());
  EXPECT_EQ(report.at("phi").at("3"), "y");
  // malformed mapping: phi(0) != x
  std::string bad = ::testing::TempDir() + "phi_bad.csv";
  {
    std::ofstream out(bad);
    out << "0,1\n3,y\n1,2\n2,0\n4,x\n";
  }
  EXPECT_EQ(run_cli("twin --q 3 --phi " + bad).exit_code, 2);
  // unreadable mapping file is an I/O failure
  EXPECT_EQ(run_cli("twin --q 3 --phi /nonexistent/phi.csv").exit_code, 3);
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "twin3.json";
  auto res = run_cli("twin --q 3 --verify axioms --format json --out " + path);
  EXPECT_EQ(res.exit_code, 0) << res.output;
  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  Json report = Json::parse(in);
  EXPECT_TRUE(report.at("ok").get<bool>());
  EXPECT_EQ(run_cli("twin --q 3 --verify axioms --out /nonexistent/dir/x.json").exit_code, 3);
}
