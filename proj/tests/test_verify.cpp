#include <string>
#include <vector>

#include "doctest.h"
#include "volterra/errors.hpp"
#include "volterra/report.hpp"
#include "volterra/verify.hpp"

using namespace volterra;

TEST_CASE("level tokens") {
  CHECK(parse_verify_level("fast") == VerifyLevel::Fast);
  CHECK(parse_verify_level("full") == VerifyLevel::Full);
  CHECK_THROWS_AS(parse_verify_level("medium"), UsageError);
  CHECK(std::string(verify_level_name(VerifyLevel::Fast)) == "fast");
  CHECK(std::string(verify_level_name(VerifyLevel::Acceptance)) == "acceptance");
  CHECK(std::string(verify_level_name(VerifyLevel::Full)) == "full");
}

TEST_CASE("criterion grouping of check names") {
  ReportDoc doc;
  doc.command = "verify";
  add_abs_check(doc, "c03-alpha", 1.0, 1.0, 0.0);
  add_abs_check(doc, "c03-beta", 1.0, 2.0, 0.0);   // fails
  add_abs_check(doc, "c11-gamma", 0.0, 0.0, 0.0);
  add_abs_check(doc, "stray-name", 0.0, 0.0, 0.0);  // unrecognized prefix

  const auto groups = summarize_criteria(doc);
  REQUIRE(groups.size() == kCriteriaCount + 1);  // stray group prepended
  CHECK(groups[0].index == 0);
  CHECK(groups[0].checks == 1);
  const auto& g3 = groups[3];
  CHECK(g3.index == 3);
  CHECK(g3.checks == 2);
  CHECK(g3.failures == 1);
  CHECK(groups[11].index == 11);
  CHECK(groups[11].checks == 1);
  CHECK(groups[11].failures == 0);
  CHECK_FALSE(g3.title.empty());
}

TEST_CASE("fast verification run passes every criterion") {
  const ReportDoc doc = run_verification(VerifyLevel::Fast);
  CHECK(doc.command == "verify");
  CHECK(doc.overall());
  CHECK_NOTHROW(validate_report(doc));

  bool level_recorded = false;
  for (const auto& [k, v] : doc.inputs)
    if (k == "level" && v == "fast") level_recorded = true;
  CHECK(level_recorded);

  const auto groups = summarize_criteria(doc);
  REQUIRE(groups.size() == kCriteriaCount);  // no stray names
  const std::vector<int> expected_counts = {14, 16, 2,  18, 39, 66,
                                            12, 16, 29, 5,  6};
  for (int i = 0; i < kCriteriaCount; ++i) {
    CAPTURE(i);
    CHECK(groups[i].index == i + 1);
    CHECK(groups[i].checks == expected_counts[i]);
    CHECK(groups[i].failures == 0);
    CHECK_FALSE(groups[i].title.empty());
  }
}
