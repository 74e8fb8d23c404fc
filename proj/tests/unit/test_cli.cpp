#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "coha/shuffle.hpp"

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = coha::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"verify", "yangian-shuffle", "--k", "2", "--rmax", "2", "--smax", "2"}).code, coha::cli::kPass);
  EXPECT_EQ(run({"verify", "wk-closure", "--k", "3", "--mrange", "3", "--arange", "3"}).code, coha::cli::kPass);
  EXPECT_EQ(run({"verify", "yangian-shuffle", "--k", "1", "--rmax", "2", "--smax", "2"}).code, coha::cli::kUsageError);
}

TEST(Cli, HumanReportFormat) {
  CliResult r = run({"verify", "cartan", "--kmax", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "PASS cartan_inverse K=1\nPASS cartan_inverse K=2\nPASS cartan_inverse K=3\n3 checks, 0 failed\n");
}

TEST(Cli, FailedCheckExitsOne) {
  CliResult r = run({"verify", "g-map", "--k", "2"});
  EXPECT_EQ(r.code, coha::cli::kCheckFailed);
  EXPECT_NE(r.out.find("FAIL kappa"), std::string::npos);
}

TEST(Cli, JsonIsDeterministic) {
  const std::vector<std::string> args{"--json", "verify", "theorem1", "--k", "2", "--nmax", "3"};
  CliResult a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j.is_object() || j.is_array());
  const std::vector<std::string> prod{"--json", "compute", "alpha", "--k", "2", "--i", "1", "--r", "2"};
  EXPECT_EQ(run(prod).out, run(prod).out);
}

TEST(Cli, ShuffleProductMatchesLibrary) {
  using namespace coha;
  const std::string a = alpha(2, 0, 0).to_json().dump(), b = alpha(2, 1, 0).to_json().dump();
  CliResult r = run({"--json", "compute", "shuffle-product", "--a", a, "--b", b});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out), shuffle_mul(alpha(2, 0, 0), alpha(2, 1, 0)).to_json());
  CliResult c = run({"--json", "compute", "shuffle-product", "--a", a, "--b", a, "--commutator"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(ShuffleElem::from_json(nlohmann::json::parse(c.out)).is_zero(), true);
}

TEST(Cli, KacJson) {
  CliResult r = run({"--json", "kac", "--quiver", "cyclic:1", "--dim", "1,1", "--q", "2,3,5", "--fit"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["counts"]["2"], 3);
  EXPECT_EQ(j["counts"]["3"], 4);
  EXPECT_EQ(j["counts"]["5"], 6);
  EXPECT_EQ(j["poly"], nlohmann::json::parse("[1,1]"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"verify", "bogus"}).code, coha::cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, coha::cli::kUsageError);
  EXPECT_EQ(run({"compute", "shuffle-product", "--a", "{not json", "--b", "[]"}).code, coha::cli::kUsageError);
  EXPECT_EQ(run({"--threads", "0", "verify", "cartan"}).code, coha::cli::kUsageError);
  EXPECT_EQ(run({"kac", "--quiver", "cyclic:1", "--dim", "3,3", "--q", "5", "--budget", "100"}).code,
            coha::cli::kUsageError);
  EXPECT_EQ(run({"compute", "ln", "--k", "2", "--n", "3", "--max-vars", "6"}).code, coha::cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, coha::cli::kPass);
}

TEST(Cli, Roots) {
  CliResult r = run({"--json", "roots", "--zeta", "-1/3,1/3,1/2", "--mu", "2", "--bound", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["d"], nlohmann::json::parse("[1,1,0]"));
}
