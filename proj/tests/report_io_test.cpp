#include "symcap/report_io.hpp"

#include <gtest/gtest.h>

#include "json.hpp"

namespace symcap {
namespace {

using Json = nlohmann::json;

TEST(ReportJson, SolveReportKeys) {
  SolveReport r;
  r.alpha = 2;
  r.optimal = true;
  r.nodes_explored = 17;
  r.elapsed = std::chrono::milliseconds(5);
  r.certificate.members = {0, 3};
  const std::string text = to_json(r);
  EXPECT_EQ(text.find('\n'), std::string::npos);
  const Json j = Json::parse(text);
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["optimal"], true);
  EXPECT_EQ(j["nodes"], 17);
  EXPECT_EQ(j["elapsed_ms"], 5);
  EXPECT_EQ(j["certificate"], Json::array({0, 3}));
  EXPECT_EQ(j.size(), 5U);
}

TEST(ReportJson, BoundsNullsAndWideCounts) {
  BoundsReport r;
  r.k = 2000;
  r.alpha_base = 12;
  r.theta_base = 12;
  r.lower = binomial(2011, 11);
  r.upper_theta = r.lower;
  const Json j = Json::parse(to_json(r));
  EXPECT_TRUE(j["upper_c5"].is_null());
  EXPECT_TRUE(j["alpha"].is_null());
  EXPECT_TRUE(j["optimal"].is_null());
  ASSERT_TRUE(j["lower"].is_string());
  EXPECT_EQ(j["lower"].get<std::string>(), to_string(binomial(2011, 11)));

  r.k = 9;
  r.lower = 10;
  r.upper_theta = 55;
  r.upper_c5 = 19;
  r.alpha_exact = ExactAlpha{10, true};
  EXPECT_EQ(to_csv_row(r), "9,10,10,true,19,55");
  const Json small = Json::parse(to_json(r));
  EXPECT_EQ(small["lower"], 10);
  EXPECT_EQ(small["alpha"], 10);
}

TEST(ReportJson, AuditAndCapacity) {
  c5::AuditResult a;
  a.k = 3;
  a.check = "midpoint";
  a.ok = false;
  a.counterexamples = {"x"};
  const Json j = Json::parse(to_json(a));
  EXPECT_EQ(j["check"], "midpoint");
  EXPECT_EQ(j["counterexamples"].size(), 1U);

  CapacityEstimate e;
  e.target = 1;
  e.samples.push_back({9, 10, 1.0479516371446924, 1.1});
  EXPECT_EQ(capacity_csv(e), "k,alpha,ratio\n9,10,1.047952\n");
  EXPECT_EQ(Json::parse(to_json(e))["samples"][0]["alpha"], 10);
}

}  // namespace
}  // namespace symcap
