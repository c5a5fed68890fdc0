#include <gtest/gtest.h>

#include <fstream>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = twaffine::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TWAFFINE_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, RootsCountSmallWindow) {
  auto r = run({"roots", "--family", "a-even-2", "--k", "1", "--l", "1", "--mmax", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["count"], 33);
  EXPECT_EQ(j["roots"].size(), 33u);
  int zeros = 0;
  for (const auto& e : j["roots"]) zeros += e["class"] == "zero";
  EXPECT_EQ(zeros, 1);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"roots", "--family", "d-2", "--k", "2", "--l", "1", "--format", "csv"},
        std::vector<std::string>{"tables", "--family", "a-odd-2", "--k", "2", "--l", "2"},
        std::vector<std::string>{"verify", "--family", "a-4", "--k", "1", "--l", "2", "--mmax", "4", "--samples", "5"}}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, VerifyD2) {
  auto r = run({"verify", "--family", "d-2", "--k", "2", "--l", "2", "--mmax", "8"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
  EXPECT_NE(r.err.find("wall time"), std::string::npos);
  EXPECT_EQ(r.out.find("wall time"), std::string::npos);
}

TEST(Cli, TexTableForA4) {
  auto r = run({"tables", "--family", "a-4", "--k", "1", "--l", "1", "--format", "tex"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4\\mathbb{Z}\\delta"), std::string::npos);
  EXPECT_EQ(r.out.rfind("\\documentclass", 0), 0u);
  EXPECT_NE(r.out.find("\\end{document}"), std::string::npos);
}

TEST(Cli, SingleTableJson) {
  auto r = run({"tables", "--family", "a-even-2", "--k", "1", "--l", "1", "--table", "2"});
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["table"], 2);
  EXPECT_FALSE(j["clauses"].empty());
  EXPECT_EQ(run({"tables", "--table", "9"}).code, 2);
}

TEST(Cli, CsvHeaders) {
  auto r = run({"tables", "--family", "d-2", "--k", "1", "--l", "1", "--format", "csv"});
  EXPECT_EQ(r.out.rfind("table,component,shape,dot,mod,res\n", 0), 0u);
  r = run({"roots", "--family", "d-2", "--k", "1", "--l", "2", "--format", "csv"});
  EXPECT_EQ(r.out.rfind("root,eps_1,del_1,del_2,dc,class,parity,component\n", 0), 0u);
}

TEST(Cli, InvalidParamsAreUsageErrors) {
  auto r = run({"roots", "--family", "a-odd-2", "--k", "1", "--l", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(k,l) = (1,1) is excluded"), std::string::npos) << r.err;
  EXPECT_EQ(run({"roots", "--family", "a-4", "--k", "1", "--l", "0"}).code, 2);
  EXPECT_EQ(run({"roots", "--family", "b-2"}).code, 2);
  EXPECT_EQ(run({"roots", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"classify", "--format", "csv", "--root", "{}"}).code, 2);
}

TEST(Cli, MalformedConfig) {
  auto bad = temp_file("bad.json", "{\"classes\": [ {\"root\": ");
  auto r = run({"shadow-validate", "--config", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parse error"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;

  auto wrong = temp_file("wrong.json", R"({"classes": [{"root": {"eps":[1],"del":[0],"dc":0}, "state": "sideways"}]})");
  r = run({"shadow-validate", "--config", wrong});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("classes[0]"), std::string::npos) << r.err;

  EXPECT_EQ(run({"shadow-validate", "--config", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"shadow-validate"}).code, 2);
}

TEST(Cli, SampleConfigs) {
  auto r = run({"shadow-validate", "--family", "a-even-2", "--k", "1", "--l", "1", "--config", data("a-even-2_k1_l1.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"shadow-validate", "--family", "a-even-2", "--k", "1", "--l", "1", "--config",
           data("a-even-2_k1_l1_broken.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["validate"]["failures"].empty());
  r = run({"parabolic-synth", "--family", "d-2", "--k", "1", "--l", "2", "--config", data("d-2_k1_l2.json")});
  EXPECT_EQ(r.code, 0) << r.out;
  r = run({"shadow-derive-p", "--family", "a-4", "--k", "1", "--l", "1", "--config", data("a-4_k1_l1.json")});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Classify) {
  auto r = run({"classify", "--family", "a-even-2", "--root", R"({"eps":[1],"del":[1],"dc":0})"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["class"], "nonsingular");
  r = run({"classify", "--family", "a-even-2", "--root", R"({"eps":[3],"del":[0],"dc":0})"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(json::parse(r.out)["is_root"].get<bool>());
  EXPECT_EQ(run({"classify", "--family", "a-even-2", "--root", R"({"eps":[1,0],"del":[1],"dc":0})"}).code, 2);
  EXPECT_EQ(run({"classify", "--family", "a-even-2", "--root", "{not json"}).code, 2);
}

TEST(Cli, PhiPiAndDecompose) {
  const std::string z = R"({"eps":["1"],"del":["1/2"],"delta":"0"})";
  auto r = run({"phi-pi", "--family", "a-even-2", "--zeta", z, "--mmax", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_FALSE(j["pi"].empty());
  r = run({"decompose", "--family", "a-even-2", "--zeta", z, "--mmax", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["decompositions"].size(), j["phi_plus"].size());
  EXPECT_EQ(run({"phi-pi", "--family", "a-even-2", "--zeta", R"({"eps":["1"],"del":["0"],"delta":"1"})"}).code, 2);
}

TEST(Cli, OutFileAndListFamilies) {
  std::string path = ::testing::TempDir() + "roots.json";
  auto r = run({"roots", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_NO_THROW(json::parse(in));
  r = run({"--list-families"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d-2"), std::string::npos);
}
