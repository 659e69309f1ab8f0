#include <gtest/gtest.h>

#include "nctorus/scenario.hpp"

using namespace nctorus;
namespace sc = nctorus::scenario;
using sc::json;

namespace {

json with(json base, const std::string& key, json value) {
  base[key] = std::move(value);
  return base;
}

}  // namespace

TEST(Scenario, BuiltinScalarWilsonValue) {
  const auto out = sc::run(sc::builtin("paper-scalar"));
  ASSERT_EQ(out.exit_code, sc::exit_ok) << out.body.dump();
  EXPECT_EQ(out.body.at("result").at("value"), json::array({0.0, 1.0}));
  EXPECT_EQ(out.body.at("result").at("deck"), json::array({1, 0}));
}

TEST(Scenario, Builtin4x4WilsonMatrix) {
  const auto out = sc::run(sc::builtin("paper-4x4"));
  ASSERT_EQ(out.exit_code, sc::exit_ok) << out.body.dump();
  const auto& m = out.body.at("result").at("transport").at("matrix");
  const double r = std::sqrt(2.0) / 2.0;
  EXPECT_NEAR(m[0][0][0].get<double>(), r, 1e-14);
  EXPECT_NEAR(m[0][1][0].get<double>(), -r, 1e-14);
  EXPECT_NEAR(m[1][0][0].get<double>(), r, 1e-14);
  EXPECT_NEAR(m[1][1][0].get<double>(), r, 1e-14);
  EXPECT_EQ(m[2][2], json::array({1.0, 0.0}));
  EXPECT_EQ(m[0][2], json::array({0.0, 0.0}));
  EXPECT_FALSE(out.body.at("result").contains("value"));
}

TEST(Scenario, FlatCommandOnBuiltinScalar) {
  const auto out = sc::run(with(sc::builtin("paper-scalar"), "command", "flat"));
  ASSERT_EQ(out.exit_code, sc::exit_ok);
  EXPECT_EQ(out.body.at("result"), (json{{"flat", true}}));
}

TEST(Scenario, CurvatureCommandReportsBothRoutes) {
  const auto out = sc::run(with(sc::builtin("paper-4x4"), "command", "curvature"));
  ASSERT_EQ(out.exit_code, sc::exit_ok);
  EXPECT_TRUE(out.body.at("result").at("symbolically_zero").get<bool>());
  for (const auto& row : out.body.at("result").at("commutator")) {
    for (const auto& entry : row) EXPECT_TRUE(entry.at("terms").empty());
  }
}

TEST(Scenario, ClassifyAndTransportCommands) {
  const auto out = sc::run(sc::builtin("paper-cover"));
  ASSERT_EQ(out.exit_code, sc::exit_ok);
  const auto& paths = out.body.at("result").at("paths");
  ASSERT_EQ(paths.size(), 4u);
  EXPECT_EQ(paths[0].at("deck"), json::array({1, 0}));
  EXPECT_EQ(paths[1].at("deck"), json::array({0, 1}));
  EXPECT_FALSE(paths[3].at("closed").get<bool>());

  json t = sc::builtin("paper-scalar");
  t["command"] = "transport";
  t["paths"] = {{1, 0}};
  t["params"]["tau"] = 0.0;
  const auto tr = sc::run(t);
  ASSERT_EQ(tr.exit_code, sc::exit_ok) << tr.body.dump();
  EXPECT_EQ(tr.body.at("result").at("transports")[0].at("matrix")[0][0], json::array({1.0, 0.0}));
}

TEST(Scenario, IndependenceCommand) {
  json s = sc::builtin("paper-scalar");
  s["command"] = "independence";
  s["paths"] = {{1, 0}, {1, 2}};
  s["connection"]["theta_v"] = {{{0.0, 0.3}}};
  const auto out = sc::run(s);
  ASSERT_EQ(out.exit_code, sc::exit_ok) << out.body.dump();
  EXPECT_FALSE(out.body.at("result").at("certified").get<bool>());
  EXPECT_GT(out.body.at("result").at("max_distance").get<double>(), 0.5);
}

TEST(Scenario, InfiniteWilsonScalarAndRotation) {
  const auto scalar = sc::run(sc::builtin("paper-infinite"));
  ASSERT_EQ(scalar.exit_code, sc::exit_ok);
  EXPECT_EQ(scalar.body.at("result").at("value"), json::array({0.0, 1.0}));

  json s = sc::builtin("paper-infinite");
  s["params"]["gauge"] = "rotation";
  s["params"]["c_u"] = 0.125;
  const auto rot = sc::run(s);
  ASSERT_EQ(rot.exit_code, sc::exit_ok) << rot.body.dump();
  EXPECT_NEAR(rot.body.at("result").at("matrix")[1][0][0].get<double>(), std::sqrt(0.5), 1e-14);
  EXPECT_EQ(rot.body.at("result").at("residual"), 0.0);
}

TEST(Scenario, ValidationErrorsExitWithTwo) {
  const json base = sc::builtin("paper-scalar");
  std::vector<json> bad{
      json::array(),
      with(base, "v", 2),
      with(base, "command", "integrate"),
      with(base, "theta", 1.5),
      with(base, "theta", "0.3"),
      with(base, "params", json::object()),
      with(base, "covering", {{"degrees", {0, 2}}}),
  };
  json no_conn = base;
  no_conn.erase("connection");
  bad.push_back(no_conn);
  json classify = sc::builtin("paper-cover");
  classify.erase("paths");
  bad.push_back(classify);
  for (const auto& s : bad) {
    const auto out = sc::run(s);
    EXPECT_EQ(out.exit_code, sc::exit_validation) << s.dump();
    EXPECT_TRUE(out.body.contains("error"));
    EXPECT_TRUE(out.body.contains("message"));
  }
}

TEST(Scenario, DomainErrorsExitWithThree) {
  json not_flat = sc::builtin("paper-scalar");
  not_flat["connection"] = json::parse(
      R"({"rank":1,"theta_u":[[{"theta":0.3819660113,"terms":[{"m":0,"n":1,"re":1,"im":0,"lk":0}]}]],"theta_v":[[[0,0]]]})");
  auto out = sc::run(not_flat);
  EXPECT_EQ(out.exit_code, sc::exit_domain);
  EXPECT_EQ(out.body.at("error"), "NotFlat");

  json foreign = sc::builtin("paper-scalar");
  foreign["command"] = "independence";
  foreign["paths"] = {{0, 1}};
  out = sc::run(foreign);
  EXPECT_EQ(out.exit_code, sc::exit_domain);
  EXPECT_EQ(out.body.at("error"), "PathNotAssociated");

  json zero = sc::builtin("paper-cover");
  zero["paths"] = {{0, 0}};
  EXPECT_EQ(sc::run(zero).body.at("error"), "ZeroWeight");
}

TEST(Scenario, ReportsAreDeterministicAndEchoTheirInput) {
  for (auto name : sc::builtin_names) {
    const json s = sc::builtin(name);
    const auto first = sc::render(sc::run(s).body, false);
    const auto second = sc::render(sc::run(json::parse(s.dump())).body, false);
    EXPECT_EQ(first, second) << name;
    const auto report = json::parse(first);
    EXPECT_EQ(report.at("input"), s);
    const auto reparsed = sc::parse(report.at("input"));
    EXPECT_EQ(reparsed.raw, sc::parse(s).raw);
    EXPECT_EQ(sc::render(sc::run(report.at("input")).body, true), sc::render(sc::run(s).body, true));
  }
}

TEST(Scenario, RoundsToFifteenSignificantDigits) {
  EXPECT_EQ(sc::round_significant(0.70710678118654757), 0.707106781186548);
  EXPECT_EQ(sc::round_significant(6.123233995736766e-17), 6.12323399573677e-17);
  EXPECT_EQ(sc::round_significant(-0.0), 0.0);
  EXPECT_FALSE(std::signbit(sc::round_significant(-0.0)));
  EXPECT_EQ(sc::round_significant(1.0), 1.0);
}

TEST(Scenario, UnknownBuiltinIsAValidationError) {
  EXPECT_THROW(sc::builtin("no-such-builtin"), Error);
}
