#include "oppert/oracle.h"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "oppert/errors.h"

namespace oppert {

namespace {

const Scalar& hbar() {
  static const Scalar h = Scalar::param("hbar");
  return h;
}

// Index of basis state m for Su2 (row 0 is m = l).
int su2_index(int l, int m) { return l - m; }

}  // namespace

BasisSpec BasisSpec::oscillator(int n) {
  if (n < 2) throw ValidationError("oscillator truncation needs N >= 2");
  return {Algebra::Hw, n};
}

BasisSpec BasisSpec::angular(int l) {
  if (l < 0) throw ValidationError("angular basis needs l >= 0");
  return {Algebra::Su2, l};
}

StateLabel BasisSpec::state(int i) const {
  if (algebra == Algebra::Hw) return StateLabel::oscillator(i);
  return StateLabel::angular(size, size - i);
}

ExactMatrix::ExactMatrix(int dimension)
    : dim_(dimension), data_(static_cast<std::size_t>(dimension) * dimension) {}

ExactMatrix ExactMatrix::identity(int dimension) {
  ExactMatrix m(dimension);
  for (int i = 0; i < dimension; ++i) m(i, i) = ScalarSum(Scalar(1));
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
  ExactMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int k = 0; k < dim_; ++k) {
      const ScalarSum& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const ScalarSum& b = o(k, j);
        if (!b.is_zero()) out(i, j) += a * b;
      }
    }
  }
  return out;
}

ExactMatrix exact_generator_matrix(Generator g, const BasisSpec& basis) {
  if (algebra_of(g) != basis.algebra) throw AlgebraMismatch("generator and basis differ");
  const int dim = basis.dimension();
  ExactMatrix m(dim);
  if (basis.algebra == Algebra::Hw) {
    for (int j = 0; j < dim; ++j) {
      if (g == Generator::Create && j + 1 < dim) m(j + 1, j) = ScalarSum(Scalar(1));
      if (g == Generator::Annihilate && j > 0) m(j - 1, j) = ScalarSum(Scalar(j));
    }
    return m;
  }
  const int l = basis.size;
  for (int mm = -l; mm <= l; ++mm) {
    const int col = su2_index(l, mm);
    switch (g) {
      case Generator::Raise:
        if (mm < l) m(su2_index(l, mm + 1), col) = ScalarSum(hbar());
        break;
      case Generator::Lower:
        if (mm > -l) m(su2_index(l, mm - 1), col) = ScalarSum(Scalar(l * (l + 1) - mm * (mm - 1)) * hbar());
        break;
      case Generator::Zero:
        m(col, col) = ScalarSum(Scalar(mm) * hbar());
        break;
      default:
        break;
    }
  }
  return m;
}

ExactMatrix exact_matrix_rep(const OperatorExpr& expr, const BasisSpec& basis) {
  if (expr.algebra() != basis.algebra) throw AlgebraMismatch("expression and basis differ");
  const int dim = basis.dimension();
  ExactMatrix out(dim);
  for (const auto& [w, c] : expr.terms()) {
    if (basis.algebra == Algebra::Hw) {
      // a†^m a^n e_j = j!/(j-n)! e_{j-n+m}
      for (int j = w.lowering; j < dim; ++j) {
        const int target = j - w.lowering + w.raising;
        if (target >= dim) continue;
        Scalar factor(1);
        for (int t = 0; t < w.lowering; ++t) factor *= Scalar(j - t);
        out(target, j) += c * factor;
      }
      continue;
    }
    const int l = basis.size;
    for (int mm = -l; mm <= l; ++mm) {
      const int low = mm - w.lowering;
      const int high = low + w.raising;
      if (low < -l || high > l) continue;
      Scalar factor(1);
      for (int t = 0; t < w.lowering; ++t) {
        const int mt = mm - t;
        factor *= Scalar(l * (l + 1) - mt * (mt - 1)) * hbar();
      }
      for (int t = 0; t < w.middle; ++t) factor *= Scalar(low) * hbar();
      for (int t = 0; t < w.raising; ++t) factor *= hbar();
      if (!factor.is_zero()) out(su2_index(l, high), su2_index(l, mm)) += c * factor;
    }
  }
  return out;
}

ExactMatrix exact_word_product(const Scalar& coeff, std::span<const Generator> word,
                               const BasisSpec& basis) {
  ExactMatrix out = ExactMatrix::identity(basis.dimension());
  for (Generator g : word) out = out * exact_generator_matrix(g, basis);
  ExactMatrix scaled(basis.dimension());
  const ScalarSum c(coeff);
  for (int i = 0; i < basis.dimension(); ++i) {
    for (int j = 0; j < basis.dimension(); ++j) {
      if (!out(i, j).is_zero()) scaled(i, j) = out(i, j) * c;
    }
  }
  return scaled;
}

int trusted_columns(const BasisSpec& basis, int word_length) {
  if (basis.algebra == Algebra::Su2) return basis.dimension();
  return std::max(0, basis.dimension() - word_length);
}

bool truncation_ok(const OperatorExpr& expr, const BasisSpec& basis) {
  if (basis.algebra == Algebra::Su2) return true;
  return 4 * expr.max_ladder_power() <= basis.dimension();
}

ComplexMatrix matrix_rep(const OperatorExpr& expr, const BasisSpec& basis,
                         const ParamValues& values) {
  if (expr.algebra() != basis.algebra) throw AlgebraMismatch("expression and basis differ");
  const int dim = basis.dimension();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (const auto& [w, c] : expr.terms()) {
    const std::complex<double> coeff = c.evaluate(values);
    if (basis.algebra == Algebra::Hw) {
      for (int j = w.lowering; j < dim; ++j) {
        const int mid = j - w.lowering;
        const int target = mid + w.raising;
        if (target >= dim) continue;
        double amp = 1.0;
        for (int t = 0; t < w.lowering; ++t) amp *= std::sqrt(static_cast<double>(j - t));
        for (int t = 1; t <= w.raising; ++t) amp *= std::sqrt(static_cast<double>(mid + t));
        out(target, j) += coeff * amp;
      }
      continue;
    }
    const int l = basis.size;
    const double h = lookup_value(values, "hbar").real();
    for (int mm = -l; mm <= l; ++mm) {
      const int low = mm - w.lowering;
      const int high = low + w.raising;
      if (low < -l || high > l) continue;
      double amp = 1.0;
      for (int t = 0; t < w.lowering; ++t) {
        const int mt = mm - t;
        amp *= h * std::sqrt(static_cast<double>(l * (l + 1) - mt * (mt - 1)));
      }
      amp *= std::pow(low * h, w.middle);
      for (int t = 0; t < w.raising; ++t) {
        const int mt = low + t;
        amp *= h * std::sqrt(static_cast<double>(l * (l + 1) - mt * (mt + 1)));
      }
      out(su2_index(l, high), su2_index(l, mm)) += coeff * amp;
    }
  }
  return out;
}

EigenSystem eigensystem_hermitian(const ComplexMatrix& mat) {
  if (mat.rows() != mat.cols()) throw ValidationError("eigensolver needs a square matrix");
  const double scale = std::max(1.0, mat.cwiseAbs().maxCoeff());
  const double asymmetry = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTolerance * scale) {
    throw ValidationError("matrix is not Hermitian (deviation " + std::to_string(asymmetry) + ")");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat);
  if (solver.info() != Eigen::Success) throw Error("Hermitian eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& mat) {
  EigenSystem sys = eigensystem_hermitian(mat);
  return {sys.values.data(), sys.values.data() + sys.values.size()};
}

ComplexMatrix exp_anti_hermitian(const ComplexMatrix& g) {
  const std::complex<double> i(0.0, 1.0);
  EigenSystem sys = eigensystem_hermitian(i * g);
  // G = -i U D U†  =>  exp(G) = U exp(-i D) U†
  Eigen::VectorXcd phases(sys.values.size());
  for (Eigen::Index k = 0; k < sys.values.size(); ++k) phases(k) = std::exp(-i * sys.values(k));
  return sys.vectors * phases.asDiagonal() * sys.vectors.adjoint();
}

ComplexMatrix hamiltonian_matrix(const PerturbationProblem& problem, const BasisSpec& basis,
                                 const ParamValues& values, double lambda, bool include_central) {
  ComplexMatrix h = matrix_rep(problem.gap.grading_operator(), basis, values) +
                    lambda * matrix_rep(problem.v, basis, values);
  if (include_central) {
    for (int i = 0; i < basis.dimension(); ++i) {
      StateLabel s = basis.state(i);
      h(i, i) += zero_order_energy(problem, s, values) -
                 static_cast<double>(problem.algebra == Algebra::Hw ? s.n : s.m) *
                     ScalarSum(problem.gap.gap_constant).evaluate(values);
    }
  }
  return h;
}

double max_off_diagonal(const ComplexMatrix& m, int block) {
  double worst = 0.0;
  for (int i = 0; i < block; ++i) {
    for (int j = 0; j < block; ++j) {
      if (i != j) worst = std::max(worst, std::abs(m(i, j)));
    }
  }
  return worst;
}

double fit_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(x[k] > 0) || !(y[k] > 0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(x[k]);
    const double ly = std::log(y[k]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

SimilarityReport similarity_check(const PerturbationProblem& problem, const SeriesResult& series,
                                  const BasisSpec& basis, const ParamValues& values, int order,
                                  std::vector<double> lambdas) {
  if (basis.algebra != problem.algebra) throw AlgebraMismatch("basis and problem differ");
  SimilarityReport report{order, basis.algebra == Algebra::Hw ? basis.dimension() / 2
                                                              : basis.dimension(),
                          std::move(lambdas), {}, 0.0};
  std::vector<ComplexMatrix> g;
  for (const auto& o : series.orders) {
    if (o.order > order) break;
    g.push_back(matrix_rep(o.g, basis, values));
  }
  const ComplexMatrix h0 = matrix_rep(problem.gap.grading_operator(), basis, values);
  const ComplexMatrix v = matrix_rep(problem.v, basis, values);
  double scale = std::max(1.0, h0.cwiseAbs().maxCoeff());
  bool round_off = false;
  for (double lambda : report.lambdas) {
    ComplexMatrix gl = ComplexMatrix::Zero(basis.dimension(), basis.dimension());
    double power = 1.0;
    for (const auto& gn : g) {
      power *= lambda;
      gl += power * gn;
    }
    const ComplexMatrix u = exp_anti_hermitian(gl);
    const ComplexMatrix transformed = u * (h0 + lambda * v) * u.adjoint();
    const double r = max_off_diagonal(transformed, report.block);
    report.residuals.push_back(r);
    if (r <= 1e-13 * scale) round_off = true;
  }
  report.exponent = round_off ? std::numeric_limits<double>::quiet_NaN()
                              : fit_log_slope(report.lambdas, report.residuals);
  return report;
}

}  // namespace oppert
