#pragma once

// Test-side numeric oracle. Ladder matrices are built here from textbook
// matrix elements and multiplied out word by word, so nothing below goes
// through the library's own matrix representation.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "oppert/algebra.h"

namespace testing_oracle {

using Matrix = Eigen::MatrixXcd;

// Orthonormal oscillator basis |0>..|N-1>.
inline Matrix hw_annihilate(int n) {
  Matrix m = Matrix::Zero(n, n);
  for (int j = 1; j < n; ++j) m(j - 1, j) = std::sqrt(static_cast<double>(j));
  return m;
}

inline Matrix hw_create(int n) { return hw_annihilate(n).adjoint(); }

// Orthonormal |l, m> basis, row i <-> m = l - i.
inline Matrix su2_raise(int l, double hbar) {
  const int d = 2 * l + 1;
  Matrix m = Matrix::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    const int mm = l - i;
    m(i - 1, i) = hbar * std::sqrt(static_cast<double>(l * (l + 1) - mm * (mm + 1)));
  }
  return m;
}

inline Matrix su2_lower(int l, double hbar) { return su2_raise(l, hbar).adjoint(); }

inline Matrix su2_zero(int l, double hbar) {
  const int d = 2 * l + 1;
  Matrix m = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = hbar * (l - i);
  return m;
}

struct Rep {
  oppert::Algebra algebra;
  int size;  // N for Hw, l for Su2
  double hbar = 1.0;

  int dimension() const { return algebra == oppert::Algebra::Hw ? size : 2 * size + 1; }

  Matrix up() const { return algebra == oppert::Algebra::Hw ? hw_create(size) : su2_raise(size, hbar); }
  Matrix down() const {
    return algebra == oppert::Algebra::Hw ? hw_annihilate(size) : su2_lower(size, hbar);
  }
  Matrix mid() const { return su2_zero(size, hbar); }

  Matrix monomial(const oppert::Monomial& w) const {
    Matrix out = Matrix::Identity(dimension(), dimension());
    for (int k = 0; k < w.raising; ++k) out = out * up();
    for (int k = 0; k < w.middle; ++k) out = out * mid();
    for (int k = 0; k < w.lowering; ++k) out = out * down();
    return out;
  }

  Matrix of(const oppert::OperatorExpr& expr, const oppert::ParamValues& values) const {
    Matrix out = Matrix::Zero(dimension(), dimension());
    for (const auto& [w, c] : expr.terms()) out += c.evaluate(values) * monomial(w);
    return out;
  }
};

inline double max_abs(const Matrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace testing_oracle
