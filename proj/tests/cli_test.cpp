#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "grassmann/element.hpp"

namespace grassmann::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "grassmann");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write_spec(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / ("grassmann_cli_" + name + ".json");
    std::ofstream(path) << text;
    files_.push_back(path);
    return path.string();
  }
  void TearDown() override {
    for (const auto& f : files_) std::filesystem::remove(f);
  }

 private:
  std::vector<std::filesystem::path> files_;
};

TEST_F(CliTest, CheckCanonical) {
  std::string spec = write_spec("canonical", R"({"kind":"homogeneous","variant":"canonical"})");
  Result r = run_cli({"check", "--spec", spec, "--bound", "6", "--json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["results"].size(), 3U);
  for (const auto& v : j["results"]) EXPECT_EQ(v["status"], "Holds");
}

TEST_F(CliTest, CheckMethodCDefaultsToSmallerBound) {
  std::string spec = write_spec("c", R"({"kind":"methodC"})");
  Result r = run_cli({"check", "--spec", spec, "--json"});
  EXPECT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"][0]["bound"], 12);
  EXPECT_EQ(j["certificate"]["kind"], "structural");
}

TEST_F(CliTest, CheckReportsNonCanonicalType) {
  std::string spec = write_spec("pm", R"({"kind":"methodB","k":0,"t":1,"lambda":2})");
  Result r = run_cli({"check", "--spec", spec, "--bound", "4", "--json"});
  EXPECT_EQ(r.code, kCounterexample);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"][1]["status"], "Holds");
  EXPECT_EQ(j["results"][2]["status"], "Counterexample");
  auto cex = j["results"][2]["counterexample"];
  EXPECT_EQ(parse_element(cex["residual"].get<std::string>()), parse_element("2*e1e2"));
}

TEST_F(CliTest, InvolutionCounterexample) {
  std::string spec = write_spec("double", R"({"kind":"custom","images":{"1":"2*e1"},"defaultSign":1})");
  Result r = run_cli({"check", "--spec", spec, "--bound", "3", "--json"});
  EXPECT_EQ(r.code, kCounterexample);
  auto j = nlohmann::json::parse(r.out);
  auto inv = j["results"][1];
  EXPECT_EQ(inv["status"], "Counterexample");
  EXPECT_EQ(parse_element(inv["counterexample"]["actual"].get<std::string>()), parse_element("4*e1"));
  EXPECT_EQ(parse_element(inv["counterexample"]["expected"].get<std::string>()), parse_element("e1"));

  r = run_cli({"classify", "--spec", spec, "--bound", "3"});
  EXPECT_EQ(r.code, kCounterexample);
}

TEST_F(CliTest, Classify) {
  std::string spec = write_spec("pm2", R"({"kind":"methodB","k":0,"t":1,"lambda":2})");
  Result r = run_cli({"classify", "--spec", spec, "--bound", "5", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["type"], "Type3(candidate)");
  EXPECT_EQ(j["i_beta"], nlohmann::json::array({1}));
  EXPECT_EQ(parse_element(j["kernel_minus"][0].get<std::string>()), parse_element("e1"));

  Result text = run_cli({"classify", "--spec", spec, "--bound", "5"});
  EXPECT_EQ(text.code, kOk);
  EXPECT_NE(text.out.find("Type3"), std::string::npos);
}

TEST_F(CliTest, Epsilon) {
  Result r = run_cli({"epsilon", "7", "--json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["values"], nlohmann::json::array({1, 1, -1, 1, 1, 1, -1}));
  EXPECT_EQ(run_cli({"epsilon", "--n", "0"}).code, kUsageError);
  EXPECT_EQ(run_cli({"epsilon"}).code, kUsageError);
}

TEST_F(CliTest, EpsilonProductCommand) {
  Result r = run_cli({"lemma13", "--nmax", "1000", "--json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "Holds");
}

TEST_F(CliTest, Identity) {
  std::string spec = write_spec("can", R"({"kind":"homogeneous","variant":"canonical"})");
  Result r = run_cli({"identity", "--spec", spec, "--bound", "4", "--poly", "[z1,z2]", "--json"});
  ASSERT_EQ(r.code, kCounterexample) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "Counterexample");
  EXPECT_TRUE(j["counterexample"]["assignment"].contains("z1"));
  EXPECT_FALSE(parse_element(j["counterexample"]["residual"].get<std::string>()).is_zero());

  r = run_cli({"identity", "--spec", spec, "--bound", "4", "[y1,y2]", "--trials", "50", "--seed", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("NotFalsified"), std::string::npos);

  r = run_cli({"identity", "--spec", spec, "--bound", "3", "--poly", "z1*z1", "--exhaustive", "--json"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["status"], "NotFalsified");

  EXPECT_EQ(run_cli({"identity", "--spec", spec, "--poly", "[z1,"}).code, kUsageError);
}

TEST_F(CliTest, IdentityIsDeterministic) {
  std::string spec = write_spec("can2", R"({"kind":"homogeneous","variant":"canonical"})");
  std::vector<std::string> args = {"identity", "--spec", spec, "--bound", "5", "--poly", "[z1,z2]", "--seed", "7",
                                   "--json"};
  EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST_F(CliTest, Decompose) {
  std::string spec = write_spec("pm3", R"({"kind":"methodB","k":0,"t":1,"lambda":2})");
  Result r = run_cli({"decompose", "--spec", spec, "e2", "e1 + e1e2", "--json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["components"].size(), 2U);
  EXPECT_EQ(parse_element(j["components"][0]["a0"].get<std::string>()), parse_element("e1e2"));
  EXPECT_EQ(parse_element(j["components"][0]["a1"].get<std::string>()), parse_element("e2 - e1e2"));
  EXPECT_EQ(run_cli({"decompose", "--spec", spec, "e1 +"}).code, kUsageError);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, kUsageError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run_cli({"check"}).code, kUsageError);
  EXPECT_EQ(run_cli({"check", "--spec", "/nonexistent.json"}).code, kUsageError);

  std::string bad = write_spec("bad", "{\n \"kind\": }");
  Result r = run_cli({"check", "--spec", bad});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;

  std::string invalid = write_spec("invalid_b", R"({"kind":"methodB","k":0,"t":2,"lambda":1})");
  r = run_cli({"check", "--spec", invalid});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_FALSE(r.err.empty());

  EXPECT_EQ(run_cli({"--help"}).code, kOk);
}

}  // namespace
}  // namespace grassmann::cli
