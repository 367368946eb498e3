#pragma once

// Superoperators on normal-ordered monomials. With the gap part of H0 written
// as a grading operator N (ħω₀ a†a or κ L_z), every monomial X with powers
// (m, ., n) satisfies [N, X] = (m - n) * gap * X, so
//
//   pi_project     keeps the m == n terms (the commutant of N),
//   gamma          scales each term by (m - n) * gap,
//   gamma_inverse  scales by 1 / ((m - n) * gap) and sends m == n terms to 0.

#include "oppert/algebra.h"

namespace oppert {

struct GapSpec {
  Algebra algebra;
  Scalar gap_constant;

  GapSpec(Algebra algebra, Scalar gap_constant);

  /// The grading operator N_gap whose commutator realizes gamma.
  OperatorExpr grading_operator() const;
};

OperatorExpr pi_project(const OperatorExpr& expr);
OperatorExpr gamma(const OperatorExpr& expr, const GapSpec& gap);
OperatorExpr gamma_inverse(const OperatorExpr& expr, const GapSpec& gap);

}  // namespace oppert
