#include "oppert/superops.h"

#include "oppert/errors.h"

namespace oppert {

GapSpec::GapSpec(Algebra algebra_id, Scalar gap)
    : algebra(algebra_id), gap_constant(std::move(gap)) {
  if (gap_constant.is_zero()) throw ValidationError("gap constant must be nonzero");
  for (const auto& [name, e] : gap_constant.powers()) {
    if (name == "u" || name == "u_conj") {
      throw ValidationError("gap constant must be built from real parameters");
    }
  }
}

OperatorExpr GapSpec::grading_operator() const {
  if (algebra == Algebra::Hw) {
    // gap * a†a
    return OperatorExpr(Algebra::Hw, Monomial{1, 0, 1}, gap_constant);
  }
  // κ L_z = (ħκ / ħ) L0
  return OperatorExpr(Algebra::Su2, Monomial{0, 1, 0},
                      gap_constant * Scalar::param("hbar").reciprocal());
}

OperatorExpr pi_project(const OperatorExpr& expr) {
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) {
    if (w.shift() == 0) out.add_term(w, c);
  }
  return out;
}

OperatorExpr gamma(const OperatorExpr& expr, const GapSpec& gap) {
  if (expr.algebra() != gap.algebra) throw AlgebraMismatch("gap spec is for another algebra");
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) {
    if (w.shift() != 0) out.add_term(w, c * (Scalar(w.shift()) * gap.gap_constant));
  }
  return out;
}

OperatorExpr gamma_inverse(const OperatorExpr& expr, const GapSpec& gap) {
  if (expr.algebra() != gap.algebra) throw AlgebraMismatch("gap spec is for another algebra");
  const Scalar inverse_gap = gap.gap_constant.reciprocal();
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) {
    if (w.shift() == 0) continue;
    Scalar factor(GaussianRational(Rational(1) / w.shift()));
    out.add_term(w, c * (factor * inverse_gap));
  }
  return out;
}

}  // namespace oppert
