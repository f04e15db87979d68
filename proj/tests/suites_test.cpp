#include <gtest/gtest.h>

#include <json.hpp>

#include "gtq/suites.hpp"

using namespace gtq;

TEST(Suites, NamesEndWithAll) {
  const auto &names = suite_names();
  ASSERT_FALSE(names.empty());
  EXPECT_EQ(names.back(), "all");
  for (const auto &s : names) EXPECT_LE(suite_bound(s, Mode::classical), 6);
  EXPECT_EQ(suite_bound("generic", Mode::quantum), 5);
}

TEST(Suites, SmallRunsPass) {
  SuiteReport e = run_suite("embedding", 4, Mode::quantum);
  EXPECT_TRUE(e.passed());
  EXPECT_FALSE(e.checks.empty());
  SuiteReport g = run_suite("generic", 3, Mode::classical);
  EXPECT_TRUE(g.passed());
  for (const auto &c : g.checks) EXPECT_EQ(c.suite, "generic");
}

TEST(Suites, EmptyRangeIsVacuous) {
  SuiteReport r = run_suite("relations-exact", 2, Mode::quantum);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.checks.empty());
}

TEST(Suites, UnknownAndOverBound) {
  EXPECT_THROW(run_suite("nonsense", 3, Mode::quantum), UnknownSuite);
  EXPECT_THROW(run_suite("generic", 6, Mode::quantum), BoundExceeded);
  EXPECT_THROW(run_suite("invariance", 7, Mode::classical), BoundExceeded);
  SuiteOptions force;
  force.allow_over_bound = true;
  SuiteReport r = run_suite("invariance", 7, Mode::classical, force);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Suites, JsonReport) {
  SuiteReport r = run_suite("telescoping", 4, Mode::quantum);
  auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["suite"], "telescoping");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["summary"]["checks"], r.checks.size());
  EXPECT_EQ(j["summary"]["failed"], 0);
  for (const auto &c : j["checks"]) EXPECT_FALSE(c.contains("seconds"));
  auto timed = nlohmann::json::parse(r.to_json(true));
  for (const auto &c : timed["checks"]) EXPECT_TRUE(c.contains("seconds"));
}

TEST(Suites, SameSeedSameBytes) {
  SuiteOptions o;
  o.seed = 17;
  EXPECT_EQ(run_suite("all", 4, Mode::quantum, o).to_json(), run_suite("all", 4, Mode::quantum, o).to_json());
  SuiteOptions other = o;
  other.seed = 18;
  // the seed is part of the report
  EXPECT_NE(run_suite("telescoping", 4, Mode::quantum, o).to_json(),
            run_suite("telescoping", 4, Mode::quantum, other).to_json());
}
