#pragma once

// Self-checks behind the `verify` command.
//
// Scopes:
//   superops   superoperator identities on random monomials
//   structure  Jacobi, adjoint involution, Hermiticity of W_n / G_n
//   goldens    exact closed forms for both presets
//   oracle     matrix-representation and eigenvalue cross-checks
//   all        everything above

#include <random>
#include <string>
#include <vector>

#include "oppert/engine.h"
#include "oppert/oracle.h"

namespace oppert {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;  // expected vs actual on failure, reason on skip
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  int failures() const;
  std::string render() const;
};

/// Random canonical expression with up to max_terms monomials of ladder
/// power <= max_power and small rational coefficients over a few symbols.
OperatorExpr random_expression(Algebra algebra, std::mt19937_64& rng, int max_terms = 3,
                               int max_power = 2);
Monomial random_monomial(Algebra algebra, std::mt19937_64& rng, int max_power);

std::vector<std::string> verify_scopes();
VerifyReport run_verify(const std::string& scope);

// Individual golden checks over a computed series; exposed so a series built
// with a modified recursion can be checked the same way.
CheckResult check_stark_generator(const SeriesResult& series);
CheckResult check_stark_shift(const SeriesResult& series);
CheckResult check_zeeman_orders(const SeriesResult& series);

/// Homomorphism check guarded by the truncation rule: Skip when the
/// expression's ladder powers exceed N/4.
CheckResult check_product_against_matrices(const OperatorExpr& lhs, const OperatorExpr& rhs,
                                          const BasisSpec& basis);

}  // namespace oppert
