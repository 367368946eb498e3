#include <doctest.h>

#include "oppert/commands.h"
#include "oppert/errors.h"
#include "oppert/format.h"

using namespace oppert;

TEST_SUITE("format") {
  TEST_CASE("text rendering") {
    CHECK(to_text(OperatorExpr(Algebra::Hw)) == "0");
    CHECK(to_text(parse_operator(Algebra::Hw, "a+*a, 1")) == "1 + a†·a");
    CHECK(to_text(parse_operator(Algebra::Su2, "-1/2*kappa^-1*L0")) == "−(1/2)·κ⁻¹·L₀");
    CHECK(to_text(Scalar::power_of(2, Rational(-1, 2)) * Scalar::param("hbar", Rational(1, 2))) ==
          "(1/2)·√2·ħ^{1/2}");
  }

  TEST_CASE("latex rendering") {
    const auto series = iterate(zeeman_problem(4));
    CHECK(to_latex(series.total_w()) ==
          "\\left(\\frac{1}{2} \\kappa^{-1} - \\frac{1}{8} \\kappa^{-3}\\right) \\hat{L}_{0}");
    CHECK(to_latex(parse_operator(Algebra::Hw, "a+^2*a")) == "\\hat{a}^{\\dagger 2}\\hat{a}");
  }

  TEST_CASE("term parser") {
    CHECK(parse_operator(Algebra::Hw, "adag*a") == parse_operator(Algebra::Hw, "a†*a"));
    CHECK(parse_operator(Algebra::Hw, "0.5*a") == parse_operator(Algebra::Hw, "1/2*a"));
    CHECK(parse_scalar("2^(-1/2)*hbar^{1/2}") ==
          Scalar::power_of(2, Rational(-1, 2)) * Scalar::param("hbar", Rational(1, 2)));
    CHECK(parse_operator(Algebra::Su2, "-i*L+") == OperatorExpr::generator(Generator::Raise, Scalar(GaussianRational(0, -1))));
    CHECK_THROWS_AS(parse_operator(Algebra::Hw, "L+"), ParseError);
    CHECK_THROWS_AS(parse_operator(Algebra::Hw, "a*"), ParseError);
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_operator(Algebra::Hw, "a+, 2*?", {3, 5});
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 11);
    }
  }

  TEST_CASE("json round trip of every run output") {
    for (const char* name : {"stark", "zeeman"}) {
      const auto problem = preset_problem(name, 5);
      const auto series = iterate(problem);
      const auto doc = nlohmann::json::parse(render_run(problem, series, OutputFormat::Json));
      REQUIRE(doc["orders"].size() == series.orders.size());
      for (std::size_t i = 0; i < series.orders.size(); ++i) {
        CHECK(operator_from_json(doc["orders"][i]["A"]) == series.orders[i].a);
        CHECK(operator_from_json(doc["orders"][i]["W"]) == series.orders[i].w);
        CHECK(operator_from_json(doc["orders"][i]["G"]) == series.orders[i].g);
      }
      CHECK(operator_from_json(doc["W"]) == series.total_w());
      CHECK(operator_from_json(doc["G"]) == series.total_g());
      CHECK(operator_from_json(doc["problem"]["V"]) == problem.v);
    }
  }

  TEST_CASE("zeeman order 1 json has an empty W_1") {
    const auto problem = zeeman_problem(1);
    const auto doc = nlohmann::json::parse(render_run(problem, iterate(problem), OutputFormat::Json));
    CHECK(doc["orders"][0]["W"]["terms"].empty());
    CHECK(doc["W"]["terms"].empty());
  }

  TEST_CASE("run output is deterministic") {
    const auto problem = zeeman_problem(4);
    for (auto f : {OutputFormat::Text, OutputFormat::Json, OutputFormat::Latex}) {
      CHECK(render_run(problem, iterate(problem), f) == render_run(problem, iterate(problem), f));
    }
  }
}
