#include <gtest/gtest.h>

#include <sstream>

#include "ahg/error.hpp"
#include "ahg_cli/cli.hpp"

using ahg::cli::Json;

namespace {

struct Result {
  int code;
  Json json;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "ahg");
  std::ostringstream out;
  const int code = ahg::cli::run(args, out);
  Json j;
  try {
    j = Json::parse(out.str());
  } catch (...) {
  }
  return {code, j};
}

const std::string kCurve = "1 1 1 1 1; 0 2 4 7 9";
const std::string kSurface = "[[1,1,1,1],[0,0,1,2],[0,1,1,0]]";

}  // namespace

TEST(Cli, EnvelopeShape) {
  const auto r = call({"volume", "-A", kCurve});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json["schema_version"], "1.0");
  EXPECT_EQ(r.json["command"], "volume");
  EXPECT_EQ(r.json["input"]["A"], Json::parse("[[1,1,1,1,1],[0,2,4,7,9]]"));
  EXPECT_EQ(r.json["result"]["normalized_volume"], 9);
}

TEST(Cli, ClassifyAndHoles) {
  auto r = call({"classify", "-A", kCurve, "-b", "2,10", "-b2", "3,19"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json["result"]["isomorphic"], true);
  r = call({"holes", "-A", kCurve});
  EXPECT_EQ(r.json["result"]["holes"], Json::parse("[[2,10],[2,12],[3,19]]"));
  r = call({"classify", "-A", kSurface, "-b", "2,1,2", "--beta2", "2,2,0"});
  EXPECT_EQ(r.json["result"]["isomorphic"], false);
  EXPECT_EQ(r.json["result"]["differing_face"], Json::parse("[1,4]"));
}

TEST(Cli, EnumerateAndFaces) {
  auto r = call({"enumerate", "-A", "1 0 0 1; 0 1 0 1; 0 0 1 -1", "--box", "-3:3,-3:3,-3:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json["result"]["class_count"], 14);
  r = call({"faces", "-A", kSurface});
  bool edge = false;
  for (const auto& f : r.json["result"]["faces"]) {
    if (f["columns"] == Json::parse("[1,4]")) edge = f["index"] == 2;
  }
  EXPECT_TRUE(edge);
  EXPECT_EQ(r.json["result"]["normal"], false);
}

TEST(Cli, RationalParametersRoundTrip) {
  const auto r = call({"esets", "-A", kCurve, "-b", "1/2,-2/3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json["input"]["beta"], Json::parse(R"(["1/2","-2/3"])"));
  EXPECT_EQ(ahg::cli::parse_vector("1/2,-2/3"),
            (ahg::RatVec{ahg::Rat(1, 2), ahg::Rat(-2, 3)}));
}

TEST(Cli, InputErrorsExitTwo) {
  auto r = call({"esets", "-A", kCurve, "-b", "1,2,3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["error"], "PARSE_ERROR");
  r = call({"volume", "-A", "1 1 1; 0 1 2; 0 2 4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["error"], "NOT_FULL_DIM");
  r = call({"bideal", "-A", kCurve, "--chi", "1/2,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["error"], "CHI_NOT_IN_LATTICE");
  r = call({"witness", "-A", kSurface, "-b", "2,1,2", "-b2", "2,2,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["error"], "NOT_ISOMORPHIC");
  r = call({"volume"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, WitnessReportsChecks) {
  const auto r = call({"witness", "-A", kCurve, "-b", "1,2", "-b2", "2,4", "--order", "3"});
  ASSERT_EQ(r.code, 0) << r.json.dump();
  EXPECT_EQ(r.json["result"]["weights_ok"], true);
  EXPECT_EQ(r.json["result"]["certificates_ok"], true);
  EXPECT_EQ(r.json["result"]["series"]["forward_residual_zero"], true);
}

TEST(Cli, LaurentAndBideal) {
  auto r = call({"laurent", "-A", kCurve, "-b", "2,10"});
  EXPECT_EQ(r.json["result"]["count"], 2);
  r = call({"bideal", "-A", kSurface, "--chi", "0,1,0"});
  EXPECT_EQ(r.json["result"]["m_chi"], Json::parse("[[0,0,1,0],[0,1,0,1]]"));
}

TEST(Cli, CheckSuitePasses) {
  const auto r = call({"check", "-A", kSurface, "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.json.dump(2);
  EXPECT_EQ(r.json["result"]["all_pass"], true);
}

TEST(Cli, JsonIntegers) {
  EXPECT_EQ(ahg::cli::to_json(ahg::Int(42)), 42);
  const ahg::Int big("123456789012345678901234567890");
  EXPECT_EQ(ahg::cli::to_json(big), "123456789012345678901234567890");
  EXPECT_EQ(ahg::cli::to_json(ahg::Rat(3, 6)), "1/2");
}
