#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kappa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("KAPPA_FORGE_FORMAT");
    dir_ = std::filesystem::temp_directory_path() /
           ("kappa_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

}  // namespace

TEST_F(CliTest, Sigma) {
  const auto r = invoke({"sigma", "--class", "p1", "--weights", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
  EXPECT_EQ(invoke({"sigma", "--class", "e", "--weights=-1,2,3"}).out, "-6\n");
}

TEST_F(CliTest, TheoremA) {
  const auto r = invoke({"theorem-a", "--b", "9,18"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: ruled_out"), std::string::npos);
  EXPECT_NE(r.out.find("witness prime: 3"), std::string::npos);
  EXPECT_NE(r.err.find("warning"), std::string::npos);

  const auto j = invoke({"theorem-a", "--b", "1,5", "--flags", "rationally-odd,neg-euler,nontrivial-action",
                         "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_TRUE(j.err.empty());
  const auto body = nlohmann::json::parse(j.out);
  EXPECT_EQ(body["status"], "consistent");
  EXPECT_EQ(body["gcd"], 1);
}

TEST_F(CliTest, CatalogThenPullback) {
  const auto data = path("data.json");
  ASSERT_EQ(invoke({"catalog", "s2xs2", "--k", "4", "--out", data}).code, 0);
  const auto r = invoke({"pullback-su2", "--input", data, "--i", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("68 c2^1"), std::string::npos);
  EXPECT_NE(r.out.find("b1 = 17"), std::string::npos);

  const auto j = nlohmann::json::parse(invoke({"--format", "json", "pullback-su2", "--input", data, "--i", "1"}).out);
  EXPECT_EQ(j["coefficient"], "68");
  EXPECT_EQ(j["b"], "17");
  EXPECT_EQ(j["generator"], "c2");
}

TEST_F(CliTest, CatalogLocalizeRoundTrip) {
  for (int k : {0, 2, 8, 30}) {
    const auto data = path("k" + std::to_string(k) + ".json");
    ASSERT_EQ(invoke({"catalog", "s2xs2", "--k", std::to_string(k), "--out", data}).code, 0);
    const auto r = invoke({"localize", "--input", data, "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["checks"].size(), 1U);
    EXPECT_TRUE(j["checks"][0]["match"].get<bool>());
    EXPECT_EQ(j["checks"][0]["coefficient"], std::to_string(4 * (k * k + 1)));
  }
}

TEST_F(CliTest, LocalizeDetectsTamperedAnnotation) {
  const auto data = path("bad.json");
  ASSERT_EQ(invoke({"catalog", "s2xs2", "--k", "2", "--out", data}).code, 0);
  nlohmann::json j;
  std::ifstream(data) >> j;
  j["expected"][0]["coefficient"] = "21";
  std::ofstream(data) << j.dump();
  const auto r = invoke({"localize", "--input", data});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("MISMATCH"), std::string::npos);
}

TEST_F(CliTest, LocalizeWithClass) {
  const auto data = path("d.json");
  ASSERT_EQ(invoke({"catalog", "s2xs2", "--k", "2", "--out", data}).code, 0);
  EXPECT_EQ(invoke({"localize", "--input", data, "--class", "p1"}).out, "20 gamma^2\n");
  EXPECT_EQ(invoke({"localize", "--input", data, "--class", "e*e"}).out, "16 gamma^4\n");
  EXPECT_EQ(invoke({"localize", "--input", data, "--class", "p7"}).code, 2);
}

TEST_F(CliTest, BatchOutputIsOrderedAndStable) {
  std::vector<std::string> args{"--format", "json", "localize", "--jobs", "4"};
  for (int k = 0; k <= 20; k += 2) {
    const auto data = path("b" + std::to_string(k) + ".json");
    ASSERT_EQ(invoke({"catalog", "s2xs2", "--k", std::to_string(k), "--out", data}).code, 0);
    args.push_back("--input");
    args.push_back(data);
  }
  const auto first = invoke(args);
  EXPECT_EQ(first.code, 0);
  const auto j = nlohmann::json::parse(first.out);
  ASSERT_EQ(j.size(), 11U);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int k = 2 * static_cast<int>(i);
    EXPECT_EQ(j[i]["checks"][0]["coefficient"], std::to_string(4 * (k * k + 1)));
  }
  for (int rep = 0; rep < 5; ++rep) EXPECT_EQ(invoke(args).out, first.out);
}

TEST_F(CliTest, FormatFromEnvironment) {
  setenv("KAPPA_FORGE_FORMAT", "json", 1);
  const auto r = invoke({"sigma", "--class", "p1", "--weights", "2,1"});
  unsetenv("KAPPA_FORGE_FORMAT");
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], "5");
}

TEST_F(CliTest, Adams) {
  EXPECT_EQ(invoke({"adams", "--k", "3", "--b", "1,2"}).out, "9,162\n");
  const auto even = invoke({"adams", "--k", "2", "--b", "1,2"});
  EXPECT_EQ(even.code, 1);
  EXPECT_NE(even.err.find("odd square"), std::string::npos);

  const auto cert = invoke({"adams", "--k", "5", "--weights", "1,2", "--certify", "--format", "json", "--flags",
                            "rationally-odd,neg-euler,nontrivial-action"});
  EXPECT_EQ(cert.code, 0);
  const auto j = nlohmann::json::parse(cert.out);
  EXPECT_EQ(j["witness_prime"], 5);
  EXPECT_EQ(j["gcd"], 125);
  EXPECT_EQ(j["conclusion"], "non-kinetic");

  const auto na = invoke({"adams", "--k", "3", "--b", "0,0", "--certify", "--flags",
                          "rationally-odd,neg-euler,nontrivial-action"});
  EXPECT_EQ(na.code, 0);
  EXPECT_NE(na.out.find("not applicable"), std::string::npos);

  EXPECT_EQ(invoke({"adams", "--degree", "9"}).out, "realizable\n");
  EXPECT_EQ(invoke({"adams", "--degree", "4"}).out, "not realizable\n");
}

TEST_F(CliTest, Su2) {
  const auto r = invoke({"su2-restrict", "--rep", "V3+V1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("weights: 2,0"), std::string::npos);
  EXPECT_EQ(invoke({"su2-restrict", "--rep", "V1"}).code, 1);
  EXPECT_EQ(invoke({"su2-restrict", "--rep", "V6"}).code, 1);
  EXPECT_EQ(invoke({"su2-realize", "--weights", "1,1"}).out, "V4\n");
  EXPECT_EQ(invoke({"su2-realize", "--weights", "2,0"}).out, "V3+V1\n");
  const auto inf = invoke({"su2-realize", "--weights", "4"});
  EXPECT_EQ(inf.code, 1);
  EXPECT_EQ(inf.out, "infeasible\n");
}

TEST_F(CliTest, BettiAndWg) {
  EXPECT_EQ(invoke({"betti", "--w-even", "2", "--w-odd", "6", "--m-even", "1", "--m-odd", "5"}).out,
            "feasible, k = 1\n");
  EXPECT_EQ(invoke({"betti", "--w-even", "2", "--w-odd", "6", "--m-even", "2", "--m-odd", "0"}).out, "infeasible\n");
  EXPECT_NE(invoke({"betti", "--betti", "1,0,0,4,0,0,1"}).out.find("rationally odd: yes"), std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"catalog", "wg", "--n", "5", "--g", "3", "--format", "json"}).out);
  EXPECT_EQ(j["euler_char"], -4);
  EXPECT_TRUE(j["theorems_apply"].get<bool>());
  EXPECT_EQ(invoke({"catalog", "wg", "--n", "4", "--g", "2"}).code, 1);
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  const auto unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("'frobnicate'"), std::string::npos);

  const auto bad_class = invoke({"sigma", "--class", "q1", "--weights", "1,2"});
  EXPECT_EQ(bad_class.code, 2);
  EXPECT_NE(bad_class.err.find("'q1'"), std::string::npos);

  const auto data = path("junk.json");
  std::ofstream(data) << R"({"fiber_half_dim": 1, "components": [], "bogus_key": 3})";
  const auto bad_file = invoke({"localize", "--input", data});
  EXPECT_EQ(bad_file.code, 2);
  EXPECT_NE(bad_file.err.find("'bogus_key'"), std::string::npos);

  EXPECT_EQ(invoke({"sigma", "--weights", "1"}).code, 2);
  EXPECT_EQ(invoke({"--format", "xml", "sigma", "--class", "e", "--weights", "1"}).code, 2);
  EXPECT_EQ(invoke({"catalog", "s2xs2", "--k", "3"}).code, 1);
  EXPECT_EQ(invoke({"--help"}).code, 0);
}
