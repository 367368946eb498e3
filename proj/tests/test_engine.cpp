#include <doctest.h>

#include <algorithm>

#include "oppert/errors.h"
#include "oppert/format.h"
#include "oppert/models.h"

using namespace oppert;

TEST_SUITE("engine") {
  TEST_CASE("box terms for order 3") {
    const auto boxes = box_terms(3);
    const std::vector<BoxTerm> expected{
        {{1, 1}, BoxTarget::V, Rational(1, 2)},
        {{2}, BoxTarget::V, Rational(1)},
        {{1, 1, 1}, BoxTarget::H0, Rational(1, 6)},
        {{1, 2}, BoxTarget::H0, Rational(1, 2)},
        {{2, 1}, BoxTarget::H0, Rational(1, 2)},
    };
    CHECK(boxes.size() == expected.size());
    for (const auto& b : expected) CHECK(std::find(boxes.begin(), boxes.end(), b) != boxes.end());
  }

  TEST_CASE("box term counts follow compositions") {
    // order n: 2^(n-2) compositions of n-1, plus 2^(n-1) - 1 of n with k >= 2
    for (int n = 2; n <= 7; ++n) {
      CHECK(box_terms(n).size() == static_cast<std::size_t>((1 << (n - 2)) + (1 << (n - 1)) - 1));
    }
    CHECK(box_terms(1).size() == 1);
  }

  TEST_CASE("first order is V itself") {
    const auto problem = zeeman_problem(1);
    const auto series = iterate(problem);
    REQUIRE(series.orders.size() == 1);
    CHECK(series.orders[0].a == problem.v);
    CHECK(series.orders[0].w.is_zero());
  }

  TEST_CASE("defining relation holds order by order") {
    for (const char* name : {"stark", "zeeman"}) {
      const auto problem = preset_problem(name, 5);
      const auto series = iterate(problem);
      for (const auto& o : series.orders) {
        CAPTURE(name);
        CAPTURE(o.order);
        // A_n = W_n + Γ(G_n), W_n in the kernel
        CHECK(o.a == o.w + gamma(o.g, problem.gap));
        CHECK(pi_project(o.w) == o.w);
        CHECK(pi_project(o.g).is_zero());
      }
    }
  }

  TEST_CASE("stark stops at second order") {
    const auto series = iterate(stark_problem(5));
    CHECK(series.zero_orders() == std::vector<int>{3, 4, 5});
    CHECK(to_text(series.total_w()) == "−(1/2)·e²·𝓔²·m⁻¹·ω₀⁻²·1");
  }

  TEST_CASE("zeeman generator carries the 1/(2ħκ) prefactor") {
    // G = (1/2ħκ)(1 − 1/3κ²)(uL+ − u*L−) through fourth order
    const auto g = iterate(zeeman_problem(4)).total_g();
    const auto ladder = parse_operator(Algebra::Su2, "u*L+, -1*u_conj*L-");
    const ScalarSum prefactor = ScalarSum(Scalar(GaussianRational(Rational(1, 2))) * Scalar::param("hbar", -1) *
                                          Scalar::param("kappa", -1)) *
                                (ScalarSum(Scalar(1)) - ScalarSum(Scalar(GaussianRational(Rational(1, 3))) *
                                                                  Scalar::param("kappa", -2)));
    CHECK(g == ladder * prefactor);
  }

  TEST_CASE("problem validation") {
    const GapSpec gap(Algebra::Su2, Scalar::param("hbar") * Scalar::param("kappa"));
    CHECK_THROWS_AS(PerturbationProblem("x", gap, {}, parse_operator(Algebra::Su2, "L+"), 2),
                    ValidationError);
    CHECK_THROWS_AS(PerturbationProblem("x", gap, {}, parse_operator(Algebra::Su2, "L0"), 2),
                    ValidationError);
    CHECK_THROWS_AS(PerturbationProblem("x", gap, {}, parse_operator(Algebra::Su2, "L+, L-"), 0),
                    ValidationError);
    CHECK_THROWS_AS(PerturbationProblem("x", gap, {}, parse_operator(Algebra::Hw, "a+, a"), 2),
                    AlgebraMismatch);
  }
}
