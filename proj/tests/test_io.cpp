#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbhopf/fixtures.hpp"
#include "rbhopf/json_io.hpp"

using namespace rbhopf;
using nlohmann::json;

TEST_CASE("lie algebra specs") {
  json j = json::parse(R"({
    "basis": ["x", "h", "y"],
    "brackets": [
      {"left": "h", "right": "x", "value": {"x": "2"}},
      {"left": "h", "right": "y", "value": {"y": "-2"}},
      {"left": "x", "right": "y", "value": {"h": "1"}}
    ]
  })");
  LieAlgebra l = lie_from_json(j);
  LieAlgebra ref = sl2();
  REQUIRE(l.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) CHECK(l.bracket(i, k) == ref.bracket(i, k));
  CHECK(l.check_lie_axioms().ok());

  SUBCASE("round trip") {
    LieAlgebra back = lie_from_json(lie_to_json(l));
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) CHECK(back.bracket(i, k) == l.bracket(i, k));
  }

  SUBCASE("rejections") {
    json dup = j;
    dup["brackets"].push_back({{"left", "x"}, {"right", "h"}, {"value", {{"x", "-2"}}}});
    CHECK_THROWS_AS(lie_from_json(dup), ParseError);
    json unknown = j;
    unknown["brackets"][0]["left"] = "z";
    CHECK_THROWS_AS(lie_from_json(unknown), ParseError);
    json bad_rat = j;
    bad_rat["brackets"][0]["value"]["x"] = "two";
    CHECK_THROWS_AS(lie_from_json(bad_rat), ParseError);
    CHECK_THROWS_AS(lie_from_json(json::parse(R"({"c": 1})")), ParseError);
  }
}

TEST_CASE("lie operator specs use the columns convention") {
  LieAlgebra l = sl2();
  json j = json::parse(R"({
    "convention": "columns",
    "matrix": [["0","0","0"],["0","-1/2","0"],["0","0","-1"]]
  })");
  LieOperator r = lie_operator_from_json(j, l);
  CHECK(r == sl2_standard_operator());
  CHECK(lie_operator_from_json(lie_operator_to_json(r), l) == r);
  json bad = j;
  bad["convention"] = "rows";
  CHECK_THROWS_AS(lie_operator_from_json(bad, l), ParseError);
  json short_row = j;
  short_row["matrix"][0] = {"0", "0"};
  CHECK_THROWS_AS(lie_operator_from_json(short_row, l), ParseError);
}

TEST_CASE("group and map specs") {
  FiniteGroup s3 = builtin_group("S3");
  json j = group_to_json(s3);
  CHECK(j["order"] == 6);
  FiniteGroup back = group_from_json(j);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back.mul(a, b) == s3.mul(a, b));

  json wrong_order = j;
  wrong_order["order"] = 7;
  CHECK_THROWS_AS(group_from_json(wrong_order), ParseError);

  GroupMap m;
  for (int g = 0; g < 6; ++g) m.image.push_back(s3.inv(g));
  CHECK(group_map_from_json(group_map_to_json(m), s3) == m);
  CHECK_THROWS_AS(group_map_from_json(json::parse(R"({"image": [0, 1]})"), s3), ParseError);
  CHECK_THROWS_AS(group_map_from_json(json::parse(R"({"image": [0,1,2,3,4,9]})"), s3),
                  ParseError);
}

TEST_CASE("tabulated operators") {
  GroupAlgebra h(builtin_group("S3"));
  auto [a3, flip] = s3_factorization();
  auto b = extend_group_rb(h, split_rb_group(h.group(), a3, flip));
  json j = tabulated_operator_to_json(h, b, "group:S3");
  CHECK(j["carrier"] == "group:S3");
  auto back = tabulated_operator_from_json(j, h);
  for (int g : h.basis()) CHECK(back.apply(g) == b.apply(g));

  json missing = j;
  missing["action"].erase("3");
  CHECK_THROWS_AS(tabulated_operator_from_json(missing, h), ParseError);
}

TEST_CASE("enumeration report shape and determinism") {
  FiniteGroup v4 = builtin_group("V4");
  json a = enumeration_to_json(enumerate_rb_group(v4, 8, 1));
  json b = enumeration_to_json(enumerate_rb_group(v4, 8, 3));
  CHECK(a["count"] == 16);
  CHECK(a["operators"].size() == 16);
  CHECK(a.dump() == b.dump());
}

TEST_CASE("report serialization shape") {
  Report r{"rb-weight", {Violation{{"x", "y"}, {{"x", "1"}}, {{"x", "2"}}}}};
  json j = report_json(r);
  CHECK(j["axiom"] == "rb-weight");
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["labels"] == json::array({"x", "y"}));
  CHECK(j["violations"][0]["lhs"]["x"] == "1");
  CHECK(j["violations"][0]["rhs"]["x"] == "2");
  CHECK_FALSE(all_ok({r}));
}

TEST_CASE("file loading errors") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
}
