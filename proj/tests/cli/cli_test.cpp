#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <typent/typent.hpp>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using typent::Json;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "typent");
  std::ostringstream out, err;
  const int code = typent::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFile) {
  const auto& c = GetParam();
  const Invocation r = run(c.args);
  ASSERT_EQ(r.code, 0) << r.err;
  const fs::path file = fs::path(TYPENT_GOLDEN_DIR) / (std::string(c.name) + ".json");
  if (std::getenv("TYPENT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(file, std::ios::binary) << r.out;
  }
  EXPECT_EQ(r.out, slurp(file)) << file;
}

INSTANTIATE_TEST_SUITE_P(
    Predict, Golden,
    ::testing::Values(
        GoldenCase{"predict_main", {"predict", "main", "--ka", "4", "--kb", "4", "--na", "2", "--nb", "2", "--p0", "1"}},
        GoldenCase{"predict_power_law", {"predict", "power-law", "--r", "2", "--na", "2", "--nb", "8", "--p0", "1"}},
        GoldenCase{"predict_symm", {"predict", "symm", "--n", "3", "--face", "antisym", "--tr-purity", "1"}},
        GoldenCase{"predict_nonlocaltomo",
                   {"predict", "nonlocaltomo", "--ka", "3", "--kab", "10", "--p0", "1", "--p-phi-mu", "0.25",
                    "--mu-c-norm-sq", "0"}},
        GoldenCase{"predict_general", {"predict", "general", "--theory", "classical", "--na", "2", "--nb", "4", "--p0", "0.5"}}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(Cli, ReportShape) {
  const Invocation r = run({"predict", "main", "--ka", "4", "--kb", "4", "--na", "2", "--nb", "2", "--p0", "1"});
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "predict main");
  EXPECT_EQ(j["config"]["argv"].size(), 12u);
  EXPECT_EQ(j["config"]["parameters"]["p0"], 1.0);
  EXPECT_EQ(j["result"]["formula_id"], "main");
  EXPECT_NEAR(j["result"]["value"].get<double>(), 0.6, 1e-15);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, typent::cli::kExitUsage);
  EXPECT_EQ(run({"estimate", "--theory", "quantum", "--na", "2", "--nb", "2"}).code, typent::cli::kExitUsage);
  EXPECT_EQ(run({"predict", "main", "--ka", "4"}).code, typent::cli::kExitUsage);
  EXPECT_EQ(run({"predict", "bogus"}).code, typent::cli::kExitUsage);
  EXPECT_EQ(run({"two-design", "--k", "3"}).code, typent::cli::kExitUsage);
  EXPECT_EQ(run({"estimate", "--theory", "quantum", "--face", "sym", "--seed", "1"}).code, typent::cli::kExitUsage);
}

TEST(Cli, LibraryErrorsExitOne) {
  const Invocation r = run({"predict", "main", "--ka", "4", "--kb", "4", "--na", "2", "--nb", "2", "--p0", "2"});
  EXPECT_EQ(r.code, typent::cli::kExitUsage);
  EXPECT_NE(r.err.find("range"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) {
  const Invocation r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("estimate"), std::string::npos);
}

TEST(Cli, CsvNeedsAHistogram) {
  EXPECT_EQ(run({"predict", "symm", "--n", "2", "--tr-purity", "1", "--format", "csv"}).code,
            typent::cli::kExitUsage);
  const Invocation r = run({"estimate", "--theory", "classical", "--na", "2", "--nb", "3", "--p0", "0.5", "--samples", "50",
                     "--seed", "2", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("bin_lo,bin_hi,count\n", 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), typent::kHistogramBins + 1);
}

TEST(Cli, EstimateIsByteIdenticalAcrossRunsAndThreads) {
  const std::vector<std::string> base = {"estimate", "--theory", "quantum", "--na", "2", "--nb", "3",
                                         "--p0",     "0.9",      "--samples", "300", "--seed", "11"};
  auto with_threads = [&](const char* t) {
    auto a = base;
    a.insert(a.end(), {"--threads", t});
    return a;
  };
  const Invocation first = run(base);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, run(base).out);
  const Json one = Json::parse(run(with_threads("1")).out);
  const Json four = Json::parse(run(with_threads("4")).out);
  EXPECT_EQ(one["result"].dump(), four["result"].dump());
}

TEST(Cli, EstimateResultRoundTrips) {
  const Invocation r = run({"estimate", "--face", "sym", "--n", "2", "--tr-purity", "1", "--samples", "200", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json result = Json::parse(r.out)["result"];
  EXPECT_EQ(result["formula_id"], "symm");
  EXPECT_TRUE(result.contains("within_3_sigma"));
  result.erase("deviation_sigma");
  result.erase("within_3_sigma");
  EXPECT_EQ(typent::report_json(typent::report_from_json(result)).dump(), result.dump());
}

TEST(Cli, OutputFileMatchesStdout) {
  const fs::path file = fs::temp_directory_path() / "typent_cli_output_test.json";
  const std::vector<std::string> args = {"predict", "power-law", "--r", "1", "--na", "3", "--nb", "3", "--p0", "0.5"};
  const Invocation direct = run(args);
  auto to_file = args;
  to_file.insert(to_file.begin(), {"--output", file.string()});
  const Invocation redirected = run(to_file);
  ASSERT_EQ(redirected.code, 0) << redirected.err;
  EXPECT_TRUE(redirected.out.empty());
  const Json a = Json::parse(direct.out), b = Json::parse(slurp(file));
  EXPECT_EQ(a["result"], b["result"]);
  fs::remove(file);
}

TEST(Cli, VerifyCommandsPass) {
  for (const char* check : {"classical-subsystem", "boxworld"}) {
    const Invocation r = run({"verify", check});
    EXPECT_EQ(r.code, 0) << check << r.out;
    EXPECT_TRUE(Json::parse(r.out)["result"]["pass"].get<bool>());
  }
  const Invocation r = run({"verify", "pauli-identities", "--states", "50"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run({"two-design", "--k", "1"}).code, 0);
}

TEST(Cli, CoinRecordReportsPrediction) {
  const Invocation r = run({"coin-record", "--s0", "4", "--samples", "400", "--seed", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["result"]["prediction"].get<double>(), 1.0 / 7.0, 1e-15);
}

}  // namespace
