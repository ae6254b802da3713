#include <cmath>

#include "doctest.h"
#include "volterra/errors.hpp"
#include "volterra/report.hpp"

using namespace volterra;

namespace {

ReportDoc sample_doc() {
  ReportDoc doc;
  doc.command = "eigs";
  add_input(doc, "part", "re");
  add_input(doc, "n", "3");
  add_result(doc, "lambda[0]", 0.5);
  add_result(doc, "lambda[1]", -1.0 / 3.0);
  add_abs_check(doc, "top-value", 0.5, 0.5, 1e-10);
  return doc;
}

}  // namespace

TEST_CASE("check helpers set pass flags by their own rules") {
  ReportDoc doc;
  add_abs_check(doc, "hit", 1.0, 1.0 + 5e-11, 1e-10);
  add_abs_check(doc, "edge", 1.0, 1.25, 0.25);  // boundary counts, exactly representable
  add_abs_check(doc, "miss", 1.0, 1.0 + 2e-10, 1e-10);
  CHECK(doc.checks[0].pass);
  CHECK(doc.checks[1].pass);
  CHECK_FALSE(doc.checks[2].pass);
  CHECK_FALSE(doc.overall());

  ReportDoc rel;
  add_rel_check(rel, "hit", 100.0, 100.5, 1e-2);
  add_rel_check(rel, "miss", 100.0, 102.0, 1e-2);
  CHECK(rel.checks[0].pass);
  CHECK_FALSE(rel.checks[1].pass);

  ReportDoc sides;
  add_lower_check(sides, "above", 1.0, 0.9999999, 1e-6);
  add_lower_check(sides, "below", 1.0, 0.99, 1e-6);
  add_upper_check(sides, "under", 1.0, 1.0000005, 1e-6);
  add_upper_check(sides, "over", 1.0, 1.01, 1e-6);
  CHECK(sides.checks[0].pass);
  CHECK_FALSE(sides.checks[1].pass);
  CHECK(sides.checks[2].pass);
  CHECK_FALSE(sides.checks[3].pass);

  ReportDoc empty;
  CHECK(empty.overall());  // vacuous truth
}

TEST_CASE("twelve significant digit formatting") {
  CHECK(format_sig12(0.5) == "0.5");
  CHECK(format_sig12(0.125) == "0.125");
  CHECK(format_sig12(1.0 / 3.0) == "0.333333333333");
  CHECK(format_sig12(1e-15) == "1e-15");
  CHECK(format_sig12(-2.0) == "-2");
  CHECK(format_sig12(1234567890123.0) == "1.23456789012e+12");
}

TEST_CASE("table rendering is deterministic and complete") {
  const ReportDoc doc = sample_doc();
  const std::string table = render_table(doc);
  CHECK(table == render_table(doc));  // byte identical on rerun

  const std::string expected =
      "command: eigs\n"
      "\n"
      "inputs:\n"
      "  part       re\n"
      "  n          3\n"
      "\n"
      "results:\n"
      "  lambda[0]  0.5\n"
      "  lambda[1]  -0.333333333333\n"
      "\n"
      "checks:\n"
      "  [PASS] top-value  expected 0.5  actual 0.5  tol 1e-10\n"
      "\n"
      "status: PASS\n";
  CHECK(table == expected);

  // no checks: no status line
  ReportDoc plain;
  plain.command = "norms";
  add_result(plain, "hs", 0.25);
  const std::string small = render_table(plain);
  CHECK(small.find("status") == std::string::npos);
  CHECK(small.find("checks") == std::string::npos);
}

TEST_CASE("csv rendering uses the fixed schema") {
  const std::string csv = render_csv(sample_doc());
  const std::string expected =
      "section,name,value,expected,tol,pass\n"
      "input,part,re,,,\n"
      "input,n,3,,,\n"
      "result,lambda[0],0.5,,,\n"
      "result,lambda[1],-0.333333333333,,,\n"
      "check,top-value,0.5,0.5,1e-10,true\n"
      "status,overall,,,,true\n";
  CHECK(csv == expected);
  CHECK(csv.find('\r') == std::string::npos);  // LF only

  // fields holding separators get quoted, embedded quotes doubled
  ReportDoc tricky;
  tricky.command = "norms";
  add_input(tricky, "note", "a,b");
  add_input(tricky, "quote", "say \"hi\"");
  const std::string out = render_csv(tricky);
  CHECK(out.find("input,note,\"a,b\",,,\n") != std::string::npos);
  CHECK(out.find("input,quote,\"say \"\"hi\"\"\",,,\n") != std::string::npos);
}

TEST_CASE("json output round-trips exactly") {
  ReportDoc doc = sample_doc();
  // values chosen to stress shortest round-trip float printing
  add_result(doc, "third", 1.0 / 3.0);
  add_result(doc, "root2", std::sqrt(2.0));
  add_result(doc, "small", 1.2345678901234567e-308);
  add_abs_check(doc, "failing", 1.0, 2.0, 1e-10);

  const std::string text = render_json(doc);
  const ReportDoc parsed = parse_json_report(text);
  CHECK(parsed == doc);
  CHECK(render_json(parsed) == text);

  // derived status field reflects the AND of pass flags
  CHECK(text.find("\"status\": false") != std::string::npos);

  ReportDoc empty;
  empty.command = "verify";
  CHECK(parse_json_report(render_json(empty)) == empty);
}

TEST_CASE("renderers reject non-finite numeric fields") {
  ReportDoc doc;
  doc.command = "norms";
  add_result(doc, "bad", std::nan(""));
  CHECK_THROWS_AS(render_json(doc), InternalError);

  ReportDoc doc2;
  doc2.command = "norms";
  doc2.checks.push_back({"loose", 1.0, 1.0, INFINITY, true});
  CHECK_THROWS_AS(render_csv(doc2), InternalError);
  CHECK_THROWS_AS(render_table(doc2), InternalError);
}
