#include <doctest.h>

#include "kalvar/report.hpp"

using namespace kalvar;

TEST_CASE("Betti JSON carries the schema fields") {
  const auto j = betti_json(resolution_normalization({1, 2, 4}), 1);
  CHECK(j["module_id"] == "normalization(1)");
  CHECK(j["d"] == 2);
  CHECK(j["n"] == 4);
  CHECK(j["s"] == 1);
  REQUIRE(j["entries"].is_array());
  REQUIRE_FALSE(j["entries"].empty());
  for (const auto& e : j["entries"])
    for (const char* key : {"i", "twist", "mult", "part", "lambda", "mu", "eta", "skew"}) CHECK(e.contains(key));
  CHECK(j["entries"][0]["part"] == "II");
}

TEST_CASE("Betti text and CSV") {
  const auto c = resolution_C(1, 2, 3);
  CHECK(betti_csv(c) == "i,twist,mult\n0,0,1\n1,3,1\n");
  const auto text = betti_text(c);
  CHECK(text.find("total: 1 1") != std::string::npos);
  CHECK(text.find("part=carried") != std::string::npos);
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("reports render verdicts and reasons") {
  CheckResult bad{"thing", true, ""};
  bad.fail("because");
  const auto r = plain_report("demo", {{"d", 2}}, {bad});
  CHECK_FALSE(r.passed());
  const auto j = r.to_json();
  CHECK(j["verdict"] == "fail");
  CHECK(j["checks"][0]["detail"] == "because");
  CHECK(r.to_text().find("FAIL thing: because") != std::string::npos);

  const auto m = minimality_as_report(minimality_report(2, 3, 3, PrimeFieldConfig{}));
  CHECK(m.passed());
  CHECK(m.to_csv().rfind("e,ideal_dim,new_gens,predicted\n", 0) == 0);
  CHECK(m.to_json()["per_degree"].size() == 3);
  // identical inputs, identical bytes
  CHECK(m.render(Format::Json) == minimality_as_report(minimality_report(2, 3, 3, PrimeFieldConfig{})).render(Format::Json));
}

TEST_CASE("generator rendering") {
  const auto text = render_generators(2, 4, minimal_generators(2, 4), Format::Table);
  CHECK(text.find("per degree: 2:1 3:3") != std::string::npos);
  const auto j = nlohmann::json::parse(render_generators(2, 4, minimal_generators(2, 4), Format::Json));
  CHECK(j["per_degree"].size() == 2);
}

TEST_CASE("polynomial matrices serialize as arrays of strings") {
  const RationalField q;
  const auto m = reduced_kalman_matrix(2, 3, q);
  const auto j = poly_matrix_json(m, 3);
  REQUIRE(j.size() == 2);
  CHECK(j[0][0] == "1*x[3][1]");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) CHECK(parse_poly(j[r][c].get<std::string>(), 9, 3, q) == m.at(r, c));
}
