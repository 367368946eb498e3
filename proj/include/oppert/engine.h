#pragma once

// Order-by-order construction of the shift operator W and generator G.
//
// The transformed Hamiltonian exp(ad_G)(H0 + V), with G = sum_k G_k carrying
// order k, is expanded by order. Everything at order n except the lone
// [G_n, H0] term is collected into A_n, and then
//
//   W_n = Pi(A_n),   G_n = Gamma^{-1}(A_n - Pi(A_n)).
//
// A_n is a sum of box terms (n_1..n_k | target), each standing for
// (1/k!) ad_{G_{n_1}} ... ad_{G_{n_k}} applied to V (sum n_i = n - 1) or to
// H0 (sum n_i = n, k >= 2). Commutators with H0 never touch H0 itself:
// [G_m, H0] = -Gamma(G_m).

#include <functional>
#include <vector>

#include "oppert/superops.h"

namespace oppert {

struct PerturbationProblem {
  std::string name;
  Algebra algebra;
  GapSpec gap;
  /// Central (c-number) part of H0, e.g. ½ħω₀ or ε_R + (α/r²) L².
  ScalarSum h0_central;
  OperatorExpr v;
  int max_order;

  /// Throws ValidationError unless V is Hermitian with Pi(V) = 0.
  PerturbationProblem(std::string name, GapSpec gap, ScalarSum h0_central, OperatorExpr v,
                      int max_order);
};

enum class BoxTarget { H0, V };

struct BoxTerm {
  std::vector<int> indices;
  BoxTarget target;
  Rational weight;

  friend bool operator==(const BoxTerm&, const BoxTerm&) = default;
};

std::vector<BoxTerm> box_terms(int order);

/// g[k - 1] holds G_k. Requires g.size() >= order - 1.
OperatorExpr assemble_a(int order, const std::vector<OperatorExpr>& g,
                        const PerturbationProblem& problem);

struct SeriesOrder {
  int order;
  OperatorExpr a;
  OperatorExpr w;
  OperatorExpr g;

  bool is_zero() const { return a.is_zero() && w.is_zero() && g.is_zero(); }
};

struct SeriesResult {
  std::vector<SeriesOrder> orders;

  /// Orders n whose A_n vanished identically.
  std::vector<int> zero_orders() const;
  OperatorExpr total_w(int up_to = -1) const;
  OperatorExpr total_g(int up_to = -1) const;
};

using InverseMap = std::function<OperatorExpr(const OperatorExpr&, const GapSpec&)>;

SeriesResult iterate(const PerturbationProblem& problem);
/// Same recursion with a caller-supplied Gamma^{-1}.
SeriesResult iterate(const PerturbationProblem& problem, const InverseMap& inverse);

}  // namespace oppert
