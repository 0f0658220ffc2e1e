#include <gtest/gtest.h>

#include "qes/error.hpp"
#include "qes/verification.hpp"

using namespace qes;

TEST(Verify, NamesInCriterionOrder) {
  const auto& names = verify::check_names();
  ASSERT_EQ(names.size(), 10u);
  EXPECT_EQ(names.front(), "reference-matrices");
  EXPECT_EQ(names[4], "closure");
  EXPECT_EQ(names.back(), "eigensolver");
}

TEST(Verify, OnlyRunsOneCheck) {
  verify::Options opt;
  opt.only = "counting";
  const auto results = verify::run(opt);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0].name, "counting");
  EXPECT_EQ(results[0].criterion, 4);
  EXPECT_TRUE(results[0].passed) << results[0].summary;
}

TEST(Verify, UnknownCheckIsRejected) {
  verify::Options opt;
  opt.only = "no-such-check";
  EXPECT_THROW(verify::run(opt), InvalidParams);
}

TEST(Verify, WrongExponentBreaksClosure) {
  verify::Options opt;
  opt.only = "closure";
  opt.injected_exponent = Rational(1, 3);
  const auto results = verify::run(opt);
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].passed);
  EXPECT_NE(results[0].witnesses.dump().find("NonCancellingPole"), std::string::npos) << results[0].witnesses.dump();
}

TEST(Verify, ReportJsonShape) {
  verify::Options opt;
  opt.only = "raising";
  const auto json = verify::report_json(verify::run(opt));
  EXPECT_TRUE(json.at("passed").get<bool>());
  ASSERT_EQ(json.at("checks").size(), 1u);
  EXPECT_EQ(json.at("checks")[0].at("name"), "raising");
}
