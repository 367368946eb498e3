#include "oppert/engine.h"

#include "oppert/errors.h"

namespace oppert {

namespace {

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

Rational inverse_factorial(std::size_t k) {
  Rational r(1);
  for (std::size_t i = 2; i <= k; ++i) r /= static_cast<int>(i);
  return r;
}

}  // namespace

PerturbationProblem::PerturbationProblem(std::string problem_name, GapSpec gap_spec,
                                         ScalarSum central, OperatorExpr perturbation, int order)
    : name(std::move(problem_name)),
      algebra(gap_spec.algebra),
      gap(std::move(gap_spec)),
      h0_central(std::move(central)),
      v(std::move(perturbation)),
      max_order(order) {
  if (max_order < 1) throw ValidationError("max_order must be >= 1");
  if (v.algebra() != algebra) throw AlgebraMismatch("V and gap use different algebras");
  if (adjoint(v) != v) throw ValidationError("V is not Hermitian");
  if (!pi_project(v).is_zero()) throw ValidationError("Pi(V) != 0: V has a diagonal part");
}

std::vector<BoxTerm> box_terms(int order) {
  if (order < 1) throw Error("box_terms requires order >= 1");
  std::vector<BoxTerm> out;
  std::vector<int> prefix;

  std::vector<std::vector<int>> on_v;
  compositions(order - 1, prefix, on_v);
  for (auto& tuple : on_v) {
    Rational w = inverse_factorial(tuple.size());
    out.push_back({std::move(tuple), BoxTarget::V, w});
  }

  std::vector<std::vector<int>> on_h0;
  compositions(order, prefix, on_h0);
  for (auto& tuple : on_h0) {
    if (tuple.size() < 2) continue;
    Rational w = inverse_factorial(tuple.size());
    out.push_back({std::move(tuple), BoxTarget::H0, w});
  }
  return out;
}

OperatorExpr assemble_a(int order, const std::vector<OperatorExpr>& g,
                        const PerturbationProblem& problem) {
  if (static_cast<int>(g.size()) < order - 1) {
    throw Error("assemble_a needs G_1..G_{n-1}");
  }
  OperatorExpr total(problem.algebra);
  for (const BoxTerm& box : box_terms(order)) {
    std::size_t k = box.indices.size();
    OperatorExpr inner(problem.algebra);
    if (box.target == BoxTarget::V) {
      inner = problem.v;
    } else {
      // innermost ad_{G_m}(H0) = -Gamma(G_m)
      inner = -gamma(g[box.indices.back() - 1], problem.gap);
      --k;
    }
    for (std::size_t i = k; i-- > 0 && !inner.is_zero();) {
      const OperatorExpr& gi = g[box.indices[i] - 1];
      if (gi.is_zero()) {
        inner = OperatorExpr(problem.algebra);
        break;
      }
      inner = commutator(gi, inner);
    }
    if (!inner.is_zero()) total += inner * Scalar(GaussianRational(box.weight));
  }
  return total;
}

std::vector<int> SeriesResult::zero_orders() const {
  std::vector<int> out;
  for (const auto& o : orders) {
    if (o.a.is_zero()) out.push_back(o.order);
  }
  return out;
}

OperatorExpr SeriesResult::total_w(int up_to) const {
  if (orders.empty()) throw Error("empty series");
  OperatorExpr total(orders.front().w.algebra());
  for (const auto& o : orders) {
    if (up_to >= 0 && o.order > up_to) break;
    total += o.w;
  }
  return total;
}

OperatorExpr SeriesResult::total_g(int up_to) const {
  if (orders.empty()) throw Error("empty series");
  OperatorExpr total(orders.front().g.algebra());
  for (const auto& o : orders) {
    if (up_to >= 0 && o.order > up_to) break;
    total += o.g;
  }
  return total;
}

SeriesResult iterate(const PerturbationProblem& problem, const InverseMap& inverse) {
  SeriesResult result;
  std::vector<OperatorExpr> g;
  for (int n = 1; n <= problem.max_order; ++n) {
    OperatorExpr a = assemble_a(n, g, problem);
    OperatorExpr w = pi_project(a);
    OperatorExpr gn = inverse(a - w, problem.gap);
    g.push_back(gn);
    result.orders.push_back({n, std::move(a), std::move(w), std::move(gn)});
  }
  return result;
}

SeriesResult iterate(const PerturbationProblem& problem) {
  return iterate(problem, [](const OperatorExpr& x, const GapSpec& gap) {
    return gamma_inverse(x, gap);
  });
}

}  // namespace oppert
