#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "nsarith/cli.hpp"

using nsarith::cli::run;

namespace {

struct Result {
  int code;
  nlohmann::json out;
  std::string raw;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  Result r{code, nullptr, out.str()};
  if (!r.raw.empty() && (r.raw.front() == '{' || r.raw.front() == '[')) r.out = nlohmann::json::parse(r.raw);
  return r;
}

}  // namespace

TEST(Cli, Equiv) {
  auto r = call({"equiv", "--level", "2", "t", "3*t+5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["equivalent"], true);
  EXPECT_EQ(r.out["witness"]["n"], 4);
  r = call({"equiv", "--level", "2", "t", "t^2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out["equivalent"], false);
}

TEST(Cli, Arith) {
  auto r = call({"arith", "add", "t^2+t", "t+1"});
  EXPECT_EQ(r.code, 0);
  r = call({"arith", "sub", "t", "t^2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.contains("error"));
  r = call({"arith", "root", "2*t^2", "2"});
  EXPECT_EQ(r.code, 3);
  r = call({"cmp", "t", "1000"});
  EXPECT_EQ(r.out["cmp"], "greater");
}

TEST(Cli, Auto) {
  auto r = call({"auto", "--from", "t", "--to", "t^2"});
  EXPECT_EQ(r.code, 1);
  r = call({"auto", "--from", "t", "--to", "2*t+1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out["route"], "e2");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"equiv", "--level", "9", "t", "t"}).code, 2);
  EXPECT_EQ(call({"eval", "t +"}).code, 2);
  EXPECT_EQ(call({"equiv", "--level", "1", "3", "t"}).code, 2);
}

TEST(Cli, SuiteIsDeterministic) {
  const auto a = call({"suite", "--name", "refinement", "--samples", "50", "--seed", "7", "--dim", "2"});
  const auto b = call({"suite", "--name", "refinement", "--samples", "50", "--seed", "7", "--dim", "2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.raw, b.raw);
  EXPECT_EQ(a.out["violations"], 0);
}
