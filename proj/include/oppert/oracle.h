#pragma once

// Finite matrix realizations used to cross-check the symbolic engine.
//
// Two representations are provided:
//
//  * exact: entries are ScalarSums (parameters stay symbolic). The basis is
//    rescaled so that every matrix element is a polynomial:
//        Hw:  a† e_j = e_{j+1},   a e_j = j e_{j-1}
//        Su2: L+ e_m = ħ e_{m+1}, L- e_m = ħ (l(l+1) - m(m-1)) e_{m-1},
//             L0 e_m = m ħ e_m
//    The rescaling is a similarity transform, so products and diagonal
//    entries agree with the orthonormal representation.
//
//  * numeric: orthonormal basis, parameters substituted, complex doubles.
//
// Su2 basis index i corresponds to m = l - i. Hw is truncated at dimension N;
// a† annihilates the top state.

#include <vector>

#include <Eigen/Dense>

#include "oppert/engine.h"
#include "oppert/models.h"

namespace oppert {

struct BasisSpec {
  Algebra algebra;
  int size;  // N for Hw, l for Su2

  static BasisSpec oscillator(int n);
  static BasisSpec angular(int l);

  int dimension() const { return algebra == Algebra::Hw ? size : 2 * size + 1; }
  /// Basis label of row/column i.
  StateLabel state(int i) const;
};

class ExactMatrix {
 public:
  explicit ExactMatrix(int dimension);
  static ExactMatrix identity(int dimension);

  int dimension() const { return dim_; }
  ScalarSum& operator()(int row, int col) { return data_[row * dim_ + col]; }
  const ScalarSum& operator()(int row, int col) const { return data_[row * dim_ + col]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int dim_;
  std::vector<ScalarSum> data_;
};

ExactMatrix exact_generator_matrix(Generator g, const BasisSpec& basis);
ExactMatrix exact_matrix_rep(const OperatorExpr& expr, const BasisSpec& basis);
/// Matrix product of the word's generator matrices, scaled by coeff.
ExactMatrix exact_word_product(const Scalar& coeff, std::span<const Generator> word,
                               const BasisSpec& basis);

/// Columns unaffected by truncation when applying words of the given length.
int trusted_columns(const BasisSpec& basis, int word_length);

/// Truncation guard: Hw expressions must keep ladder powers <= N/4.
bool truncation_ok(const OperatorExpr& expr, const BasisSpec& basis);

using ComplexMatrix = Eigen::MatrixXcd;

ComplexMatrix matrix_rep(const OperatorExpr& expr, const BasisSpec& basis,
                         const ParamValues& values);

constexpr double kHermitianTolerance = 1e-12;
constexpr double kEigenResidualTolerance = 1e-10;

struct EigenSystem {
  Eigen::VectorXd values;     // ascending
  ComplexMatrix vectors;      // columns
};

/// Throws ValidationError if mat is not Hermitian within kHermitianTolerance
/// relative to its largest entry.
EigenSystem eigensystem_hermitian(const ComplexMatrix& mat);
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& mat);

/// exp(G) for anti-Hermitian G, via the eigendecomposition of iG.
ComplexMatrix exp_anti_hermitian(const ComplexMatrix& g);

/// Matrix of H0 + lambda V. The central part is included only when
/// include_central is set (it needs values for its symbols).
ComplexMatrix hamiltonian_matrix(const PerturbationProblem& problem, const BasisSpec& basis,
                                 const ParamValues& values, double lambda,
                                 bool include_central = false);

/// Largest |M_ij|, i != j, over the leading block of the given size.
double max_off_diagonal(const ComplexMatrix& m, int block);

struct SimilarityReport {
  int order;
  int block;  // leading rows/columns inspected
  std::vector<double> lambdas;
  std::vector<double> residuals;
  /// Least-squares slope of log(residual) against log(lambda); NaN when any
  /// residual is at round-off level.
  double exponent;
};

/// Transforms H0 + lambda V with exp(G_N(lambda)), G_N = sum_{n<=N} lambda^n G_n,
/// and records the off-diagonal residual for each lambda. Hw residuals are
/// measured on the leading half of the basis, away from the truncation edge.
SimilarityReport similarity_check(const PerturbationProblem& problem, const SeriesResult& series,
                                  const BasisSpec& basis, const ParamValues& values, int order,
                                  std::vector<double> lambdas = {1.0, 0.5, 0.25, 0.125});

/// Slope of log(y) against log(x).
double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace oppert
