#include <doctest.h>

#include <cmath>

#include "oppert/errors.h"
#include "oppert/format.h"
#include "oppert/models.h"

using namespace oppert;

TEST_SUITE("models") {
  TEST_CASE("diagonal expectations") {
    const auto lp_lm = parse_operator(Algebra::Su2, "L+*L-");
    // <1,1|L+L-|1,1> = 2ħ²
    CHECK(diagonal_expectation_exact(lp_lm, StateLabel::angular(1, 1)) ==
          ScalarSum(Scalar(2) * Scalar::param("hbar", 2)));
    const auto n2 = parse_operator(Algebra::Hw, "a+^2*a^2");
    CHECK(diagonal_expectation_exact(n2, StateLabel::oscillator(3)) == ScalarSum(Scalar(6)));
    CHECK(diagonal_expectation_exact(n2, StateLabel::oscillator(1)).is_zero());
    CHECK_THROWS_AS(diagonal_expectation_exact(parse_operator(Algebra::Hw, "a"), StateLabel::oscillator(1)),
                    ValidationError);
  }

  TEST_CASE("zeeman l=1 m=1 kappa=5 fourth order correction") {
    const auto problem = zeeman_problem(4);
    const auto series = iterate(problem);
    const ParamValues values{{"hbar", 1.0}, {"kappa", 5.0}, {"u", {0.6, 0.8}},
                             {"eps_R", 0.0}, {"alpha_over_r2", 0.0}};
    const auto rows = evaluate_spectrum(problem, series, {StateLabel::angular(1, 1)}, values);
    const double correction = rows[0].eps - rows[0].eps0;
    CHECK(correction == doctest::Approx(0.099).epsilon(1e-12));
    CHECK(std::abs(correction - (std::sqrt(26.0) - 5.0)) < 3e-5);
  }

  TEST_CASE("spectrum shifts") {
    const auto stark = stark_problem(4);
    const auto series = iterate(stark);
    const ParamValues values{{"hbar", 1.0}, {"m_mass", 1.0}, {"omega0", 1.0}, {"e_charge", 1.0},
                             {"field", 0.1}};
    const auto rows = evaluate_spectrum(stark, series, parse_states(Algebra::Hw, "0,1,2,3"), values);
    for (const auto& r : rows) {
      CHECK(r.eps0 == doctest::Approx(r.state.n + 0.5));
      CHECK(r.eps - r.eps0 == doctest::Approx(-0.005).epsilon(1e-14));
    }

    const auto zeeman = zeeman_problem(4);
    const auto zs = iterate(zeeman);
    const ParamValues zv{{"hbar", 1.0}, {"kappa", 5.0}, {"u", 1.0}, {"eps_R", 0.3},
                         {"alpha_over_r2", 0.2}};
    const auto zr = evaluate_spectrum(zeeman, zs, parse_states(Algebra::Su2, "1:1,1:-1"), zv);
    CHECK(zr[0].eps - zr[0].eps0 == doctest::Approx(-(zr[1].eps - zr[1].eps0)));
    CHECK(zr[0].eps0 == doctest::Approx(0.3 + 0.2 * 2 + 5.0));
  }

  TEST_CASE("unperturbed limit returns zero-order energies") {
    const auto stark = stark_problem(4);
    const auto series = iterate(stark);
    const ParamValues values{{"hbar", 1.0}, {"m_mass", 2.0}, {"omega0", 1.5}, {"e_charge", 1.0},
                             {"field", 0.0}};
    for (const auto& r : evaluate_spectrum(stark, series, parse_states(Algebra::Hw, "0,4"), values)) {
      CHECK(r.eps == r.eps0);
    }
  }

  TEST_CASE("state and value parsing") {
    CHECK(parse_states(Algebra::Su2, "2:-1") == std::vector{StateLabel::angular(2, -1)});
    CHECK_THROWS(parse_states(Algebra::Su2, "1:2"));
    CHECK_THROWS(parse_states(Algebra::Hw, "-1"));
    const auto v = parse_param_values("hbar=1, u=0.6+0.8i");
    CHECK(v.at("u") == std::complex<double>(0.6, 0.8));
    CHECK_THROWS_AS(check_param_values({{"u", 2.0}}), ValidationError);
    CHECK_THROWS_AS(check_param_values({{"kappa", -1.0}}), ValidationError);
  }

  TEST_CASE("missing values are reported by name") {
    const auto p = zeeman_problem(2);
    const auto s = iterate(p);
    CHECK_THROWS_AS(evaluate_spectrum(p, s, {StateLabel::angular(1, 0)}, {{"hbar", 1.0}}), MissingValue);
  }
}
