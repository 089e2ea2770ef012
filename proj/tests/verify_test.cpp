#include "awconn/verify.hpp"

#include <gtest/gtest.h>

namespace awconn {
namespace {

TEST(Verify, SuiteNames) {
  const auto& names = verify_suite_names();
  ASSERT_EQ(names.size(), 7u);
  EXPECT_EQ(names[0], "eigen");
  EXPECT_EQ(names.back(), "appendixB");
  EXPECT_THROW(run_verify("bogus", {}), std::invalid_argument);
}

TEST(Verify, ReportSchemaAndDeterminism) {
  VerifyOptions opts;
  opts.N = 3;
  opts.M = 1;
  opts.seed = 42;
  const VerifyReport first = run_verify("eigen", opts);
  const VerifyReport second = run_verify("eigen", opts);
  EXPECT_TRUE(first.pass());
  EXPECT_FALSE(first.checks.empty());
  EXPECT_FALSE(first.tuples.empty());
  EXPECT_EQ(first.json(), second.json());

  const std::string js = first.json();
  EXPECT_NE(js.find("\"seed\": 42"), std::string::npos);
  EXPECT_NE(js.find("\"tuples\""), std::string::npos);
  EXPECT_NE(js.find("\"checks\""), std::string::npos);
  EXPECT_NE(js.find("\"status\": \"pass\""), std::string::npos);
  EXPECT_NE(js.find("\"pass\": true"), std::string::npos);
}

TEST(Verify, SeedChangesTuples) {
  VerifyOptions a, b;
  a.N = b.N = 3;
  a.M = b.M = 1;
  a.seed = 1;
  b.seed = 2;
  EXPECT_NE(run_verify("eigen", a).tuples, run_verify("eigen", b).tuples);
}

// A suite run alone matches its section of "all" for the same seed.
TEST(Verify, SuiteSeedIndependentOfOrder) {
  VerifyOptions opts;
  opts.N = 3;
  opts.M = 1;
  opts.seed = 9;
  const VerifyReport alone = run_verify("classical", opts);
  const VerifyReport all = run_verify("all", opts);
  std::vector<CheckResult> section;
  for (const CheckResult& c : all.checks)
    if (c.name.rfind("classical/", 0) == 0) section.push_back(c);
  ASSERT_EQ(section.size(), alone.checks.size());
  for (size_t i = 0; i < section.size(); ++i) {
    EXPECT_EQ(section[i].name, alone.checks[i].name);
    EXPECT_EQ(section[i].params, alone.checks[i].params);
    EXPECT_EQ(section[i].pass, alone.checks[i].pass);
  }
}

TEST(Verify, AllSuitesSmall) {
  VerifyOptions opts;
  opts.N = 3;
  opts.M = 1;
  opts.seed = 7;
  const VerifyReport report = run_verify("all", opts);
  EXPECT_TRUE(report.pass());
  // Every suite contributed checks.
  for (const std::string& name : verify_suite_names()) {
    bool found = false;
    for (const CheckResult& c : report.checks)
      if (c.name.rfind(name + "/", 0) == 0) found = true;
    EXPECT_TRUE(found) << name;
  }
}

TEST(Verify, SamplerDeterminism) {
  TupleSampler s1(123, false), s2(123, false);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(s1.rat(), s2.rat());
  TupleSampler s3(123, false);
  const ParamSet p1 = s3.param_set(4);
  TupleSampler s4(123, false);
  EXPECT_EQ(p1, s4.param_set(4));
}

TEST(Verify, NegativeSamplingStaysGeneric) {
  VerifyOptions opts;
  opts.N = 3;
  opts.M = 1;
  opts.seed = 11;
  opts.allow_negative = true;
  EXPECT_TRUE(run_verify("eigen", opts).pass());
  EXPECT_TRUE(run_verify("symmetric", opts).pass());
}

}  // namespace
}  // namespace awconn
