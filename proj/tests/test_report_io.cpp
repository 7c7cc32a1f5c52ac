#include "doctest.h"

#include "covermotive/errors.hpp"
#include "covermotive/report_io.hpp"
#include "support.hpp"

using namespace covermotive;

TEST_CASE("group spec files") {
  const auto b = parse_group_spec_file(R"({"schema": 1, "builtin": {"kind": "cyclic", "params": [3]}})");
  CHECK(build_group(b).order() == 3);
  const auto c = parse_group_spec_file(R"({"schema": 1, "cayley": [[0,1],[1,0]]})");
  CHECK(build_group(c).order() == 2);
  const auto p = parse_group_spec_file(R"({"schema": 1, "permutations": [[1,0,2],[1,2,0]]})");
  CHECK(build_group(p).order() == 6);
  for (const auto& spec : {b, c, p}) CHECK(build_group(parse_group_spec_file(group_spec_to_json(spec))).table() == build_group(spec).table());

  for (const char* bad : {"{", "[]", R"({"builtin": {"kind": "cyclic", "params": [3]}})",
                          R"({"schema": 2, "cayley": [[0]]})", R"({"schema": 1})",
                          R"({"schema": 1, "cayley": [[0]], "permutations": [[0]]})",
                          R"({"schema": 1, "cayley": "x"})", R"({"schema": 1, "builtin": {"kind": "cyclic"}})"}) {
    CAPTURE(bad);
    try {
      parse_group_spec_file(bad);
      FAIL("accepted malformed input");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::MalformedSpec);
    }
  }
}

TEST_CASE("class reports round-trip") {
  const auto z2 = testsupport::group("cyclic:2");
  ReportOptions full;
  full.per_marking = true;
  full.verification = true;
  for (const auto& r : {report(z2, 4), report(z2, 4, full), report(testsupport::group("cyclic:3"), 5, full)}) {
    const auto text = class_report_to_json(r);
    CHECK(class_report_from_json(text) == r);
    CHECK(class_report_to_json(class_report_from_json(text)) == text);
  }
  ClassReport negative;
  negative.group = "Z/1";
  negative.order = 1;
  negative.n = 4;
  negative.cls = MotivePoly::q() - 2;
  negative.hodge_euler = "uv-2";
  CHECK(class_report_from_json(class_report_to_json(negative)) == negative);
  CHECK(class_report_to_json(negative).find("\"poincare\": null") != std::string::npos);
}

TEST_CASE("class report validation") {
  CHECK_THROWS_AS(class_report_from_json(R"({"schema": 1})"), Error);
  CHECK_THROWS_AS(class_report_from_json(
                      R"({"schema":1,"group":"Z/2","order":2,"n":4,"marking":null,"coefficients":[8],"hodge_euler":"8","poincare":null})"),
                  Error);
  CHECK_NOTHROW(class_report_from_json(
      R"({"schema":1,"group":"Z/2","order":2,"n":4,"marking":null,"coefficients":["8"],"hodge_euler":"8","poincare":null})"));
  CHECK_THROWS_AS(class_report_from_json(
                      R"({"schema":1,"group":"Z/2","order":2,"n":4,"marking":null,"coefficients":["8x"],"hodge_euler":"8","poincare":null})"),
                  Error);
}

TEST_CASE("markings") {
  CHECK(parse_marking("1,0,1") == ClassTuple{1, 0, 1});
  CHECK(marking_to_string({1, 0, 1}) == "1,0,1");
  CHECK_THROWS_AS(parse_marking(""), Error);
  CHECK_THROWS_AS(parse_marking("1,,2"), Error);
  CHECK_THROWS_AS(parse_marking("1,-2"), Error);
  CHECK_THROWS_AS(parse_marking("300"), Error);
}
