#include <doctest.h>

#include <cmath>

#include "oppert/errors.h"
#include "oppert/format.h"
#include "oppert/oracle.h"
#include "oppert/superops.h"
#include "oppert/verify.h"
#include "support.h"

using namespace oppert;

TEST_SUITE("oracle") {
  TEST_CASE("numeric generator matrices match the textbook ones") {
    const ParamValues values{{"hbar", 0.8}};
    testing_oracle::Rep rep{Algebra::Su2, 2, 0.8};
    const auto x = parse_operator(Algebra::Su2, "L+^2*L0*L-, 3*L0^2, L-");
    CHECK(testing_oracle::max_abs(matrix_rep(x, BasisSpec::angular(2), values) - rep.of(x, values)) < 1e-12);
    testing_oracle::Rep osc{Algebra::Hw, 7};
    const auto y = parse_operator(Algebra::Hw, "a+^2*a, a+*a, a^3");
    CHECK(testing_oracle::max_abs(matrix_rep(y, BasisSpec::oscillator(7), {}) - osc.of(y, {})) < 1e-12);
  }

  TEST_CASE("exact representation is a homomorphism on trusted columns") {
    const auto x = parse_operator(Algebra::Hw, "kappa*a+*a, a^2");
    const auto y = parse_operator(Algebra::Hw, "a+, 2*a");
    const BasisSpec basis = BasisSpec::oscillator(12);
    CHECK(check_product_against_matrices(x, y, basis).status == CheckStatus::Pass);
    const auto s = parse_operator(Algebra::Su2, "u*L+*L0, L-^2");
    CHECK(check_product_against_matrices(s, adjoint(s), BasisSpec::angular(2)).status == CheckStatus::Pass);
  }

  TEST_CASE("truncation guard skips oversized words") {
    const auto big = parse_operator(Algebra::Hw, "a+^6, a^6");
    CHECK_FALSE(truncation_ok(big, BasisSpec::oscillator(8)));
    CHECK(check_product_against_matrices(big, big, BasisSpec::oscillator(8)).status == CheckStatus::Skip);
    CHECK(truncation_ok(big, BasisSpec::oscillator(24)));
  }

  TEST_CASE("gamma is independent of the representation's l") {
    const GapSpec gap(Algebra::Su2, Scalar::param("hbar") * Scalar::param("kappa"));
    const auto x = parse_operator(Algebra::Su2, "L+^2*L0, u*L-, L+*L-, L0*L-^3");
    const ParamValues values{{"hbar", 1.0}, {"kappa", 3.0}, {"u", 1.0}};
    for (int l = 1; l <= 4; ++l) {
      testing_oracle::Rep rep{Algebra::Su2, l, 1.0};
      const auto n = 3.0 * rep.mid();
      const auto xm = rep.of(x, values);
      CHECK(testing_oracle::max_abs(rep.of(gamma(x, gap), values) - (n * xm - xm * n)) < 1e-10);
      CHECK(testing_oracle::max_abs(rep.of(pi_project(x), values) - rep.of(parse_operator(Algebra::Su2, "L+*L-"), values)) < 1e-12);
    }
  }

  TEST_CASE("eigensolver rejects non-Hermitian input") {
    ComplexMatrix m(2, 2);
    m << 1.0, 2.0, 0.0, 1.0;
    CHECK_THROWS_AS(eigensystem_hermitian(m), ValidationError);
  }

  TEST_CASE("eigenpairs satisfy the residual tolerance") {
    const auto h = matrix_rep(parse_operator(Algebra::Su2, "3*L0, L+, L-"), BasisSpec::angular(3), {{"hbar", 1.0}});
    const auto sys = eigensystem_hermitian(h);
    for (int k = 0; k < sys.values.size(); ++k) {
      const Eigen::VectorXcd v = sys.vectors.col(k);
      CHECK((h * v - sys.values(k) * v).norm() < kEigenResidualTolerance);
    }
    // 3 L0 + 2 Lx has eigenvalues m √13
    CHECK(sys.values(6) == doctest::Approx(3 * std::sqrt(13.0)));
  }

  TEST_CASE("exp of an anti-Hermitian matrix is unitary") {
    const auto g = matrix_rep(parse_operator(Algebra::Su2, "L+, -1*L-, i*L0"), BasisSpec::angular(2), {{"hbar", 1.0}});
    const auto u = exp_anti_hermitian(g);
    CHECK(testing_oracle::max_abs(u * u.adjoint() - ComplexMatrix::Identity(5, 5)) < 1e-12);
  }

  TEST_CASE("log slope fit") {
    CHECK(fit_log_slope({1, 2, 4}, {1, 8, 64}) == doctest::Approx(3.0));
    CHECK(std::isnan(fit_log_slope({1, 2}, {0, 1})));
  }
}
