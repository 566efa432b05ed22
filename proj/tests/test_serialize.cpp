#include <doctest.h>

#include <regex>

#include "chowring/app/random.hpp"
#include "chowring/errors.hpp"
#include "chowring/latex.hpp"
#include "chowring/serialize.hpp"

using namespace chowring;

namespace {

Polynomial P(const char* text) { return Polynomial::parse(text); }

bool balanced(const std::string& s) {
  int depth = 0;
  for (char ch : s) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (depth < 0) return false;
  }
  return depth == 0;
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("polynomial JSON form") {
  const auto j = polynomial_to_json(P("4*c3 + 2*c1*c3"));
  CHECK(j.dump() == R"([{"coeff":"4","exps":{"c3":1}},{"coeff":"2","exps":{"c1":1,"c3":1}}])");
  CHECK(polynomial_from_json(j) == P("4*c3 + 2*c1*c3"));
  CHECK(polynomial_to_json(Polynomial()).dump() == "[]");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"([{"coeff":4,"exps":{}}])")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"([{"coeff":"x","exps":{}}])")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"([{"coeff":"1","exps":{"q":1}}])")), ParseError);
}

TEST_CASE("text and JSON forms round-trip exactly") {
  app::RandomSource gen(53);
  const std::vector<Variable> vars{Variable::chern(1), Variable::chern(2), Variable::chern(5),
                                   Variable::hyperplane(), Variable::xi(), Variable::root(3)};
  for (int i = 0; i < 200; ++i) {
    Polynomial p = gen.polynomial(vars, 9, 6, 1000000);
    if (i % 7 == 0) p = p.scale(Integer("123456789012345678901234567890"));
    CHECK(Polynomial::parse(p.to_string()) == p);
    CHECK(Polynomial::parse(p.to_string()).to_string() == p.to_string());
    const std::string dumped = polynomial_to_json(p).dump();
    CHECK(polynomial_from_json(nlohmann::json::parse(dumped)) == p);
  }
}

TEST_CASE("presentation JSON layout") {
  const auto j = presentation_to_json(m01());
  CHECK(j.at("schema_version") == kReportSchemaVersion);
  CHECK(j.at("variables").size() == 3);
  CHECK(j.at("variables")[2].at("name") == "c3");
  CHECK(j.at("variables")[2].at("weight") == 3);
  CHECK(j.at("relations") == nlohmann::json::array({"4*c3", "2*c1*c3", "c1^2*c3"}));
  const auto& report = j.at("verification")[0].at("report");
  CHECK(report.at("bound") == 12);
  CHECK(report.at("degrees").size() == 13);
  CHECK(report.at("degrees")[3].at("lhs_hnf") == nlohmann::json::array({"4*c3"}));
  CHECK(report.at("degrees")[3].at("equal") == true);
}

TEST_CASE("LaTeX output") {
  CHECK(latex_polynomial(P("c1^2*c3 - 2*c1*c3 + 4")) == "c_{1}^{2}c_{3} - 2c_{1}c_{3} + 4");
  CHECK(latex_polynomial(P("-c1")) == "-c_{1}");
  CHECK(latex_quotient(chern_variables(3), {P("4*c3"), P("2*c1*c3"), P("c1^2*c3")}) ==
        "\\mathbb{Z}[c_{1}, c_{2}, c_{3}]/\\left(4c_{3}, 2c_{1}c_{3}, c_{1}^{2}c_{3}\\right)");
  for (const auto& p : {m01(), reduced_quadrics(4, 2), orthogonal(5, 3)}) {
    const std::string doc = latex_document(p);
    CHECK(balanced(doc));
    CHECK(count(doc, "\\left(") == count(doc, "\\right)"));
    CHECK(count(doc, "\\begin{") == count(doc, "\\end{"));
    CHECK(doc.find("\\documentclass") == 0);
    CHECK(doc.find("\\end{document}") != std::string::npos);
  }
}
