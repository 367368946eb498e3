#pragma once

// Built-in problems and energies from a computed series.
//
//   stark:  H0 = (a†a + ½) ħω₀,            V = -e𝓔 sqrt(ħ / 2mω₀) (a† + a)
//   zeeman: H0 = ε_R + (α/r²) L² + κ L_z,  V = ½ u L+ + ½ u* L-,  |u| = 1
//
// Energies are ε(state) = ε⁰(state) + <state| Σ W_n |state>.

#include <string>
#include <vector>

#include "oppert/engine.h"

namespace oppert {

struct StateLabel {
  Algebra algebra;
  int n = 0;  // Hw
  int l = 0;  // Su2
  int m = 0;  // Su2

  static StateLabel oscillator(int n);
  static StateLabel angular(int l, int m);

  std::string to_string() const;
  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

/// Parses "0,1,2" (hw) or "1:1,1:-1" (su2).
std::vector<StateLabel> parse_states(Algebra algebra, std::string_view text);
/// Parses "hbar=1,kappa=5,u=0.6+0.8i".
ParamValues parse_param_values(std::string_view text);

PerturbationProblem stark_problem(int max_order);
PerturbationProblem zeeman_problem(int max_order);
PerturbationProblem preset_problem(const std::string& name, int max_order);

/// <state|expr|state> for a diagonal expr, as an exact central sum; the
/// symbol L2 is replaced by l(l+1)ħ². Throws ValidationError if expr has
/// off-diagonal terms.
ScalarSum diagonal_expectation_exact(const OperatorExpr& expr, const StateLabel& state);
std::complex<double> diagonal_expectation(const OperatorExpr& expr, const StateLabel& state,
                                          const ParamValues& values);

/// Zero-order energy: central part plus (n or m) times the gap.
std::complex<double> zero_order_energy(const PerturbationProblem& problem,
                                       const StateLabel& state, const ParamValues& values);

struct SpectrumRow {
  StateLabel state;
  double eps0;
  std::vector<double> corrections;  // <W_n> for n = 1..max_order
  double eps;
};

std::vector<SpectrumRow> evaluate_spectrum(const PerturbationProblem& problem,
                                           const SeriesResult& series,
                                           const std::vector<StateLabel>& states,
                                           const ParamValues& values);

/// Rejects values that break the declared parameter domains (positivity, |u| = 1).
void check_param_values(const ParamValues& values);

}  // namespace oppert
