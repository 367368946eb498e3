#include <doctest.h>

#include "oppert/errors.h"
#include "oppert/models.h"
#include "oppert/verify.h"

using namespace oppert;

TEST_SUITE("verify") {
  TEST_CASE("goldens pass on the real recursion") {
    CHECK(check_stark_generator(iterate(stark_problem(4))).status == CheckStatus::Pass);
    CHECK(check_stark_shift(iterate(stark_problem(4))).status == CheckStatus::Pass);
    CHECK(check_zeeman_orders(iterate(zeeman_problem(4))).status == CheckStatus::Pass);
  }

  TEST_CASE("flipping the sign of the inverse map is caught") {
    const InverseMap flipped = [](const OperatorExpr& x, const GapSpec& gap) { return -gamma_inverse(x, gap); };
    const auto result = check_stark_generator(iterate(stark_problem(4), flipped));
    CHECK(result.status == CheckStatus::Fail);
    CHECK(result.detail.find("expected") != std::string::npos);
  }

  TEST_CASE("superoperator and golden scopes pass") {
    for (const char* scope : {"superops", "goldens"}) {
      const auto report = run_verify(scope);
      CAPTURE(report.render());
      CHECK(report.failures() == 0);
    }
  }

  TEST_CASE("unknown scope") { CHECK_THROWS_AS(run_verify("everything"), ValidationError); }
}
