#include "oppert/verify.h"

#include <cmath>
#include <functional>
#include <sstream>

#include "oppert/errors.h"
#include "oppert/format.h"
#include "oppert/models.h"

namespace oppert {

namespace {

constexpr std::uint64_t kSeed = 20240611;

CheckResult pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::Pass, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::Fail, std::move(detail)};
}

CheckResult compare(std::string name, const OperatorExpr& expected, const OperatorExpr& actual) {
  if (expected == actual) return pass(std::move(name));
  return fail(std::move(name), "expected " + to_text(expected) + ", got " + to_text(actual));
}

// Runs predicate on `count` random samples; reports the first counterexample.
CheckResult sampled(std::string name, int count,
                    const std::function<std::string(std::mt19937_64&)>& trial) {
  std::mt19937_64 rng(kSeed);
  int failures = 0;
  std::string first;
  for (int i = 0; i < count; ++i) {
    std::string problem = trial(rng);
    if (!problem.empty()) {
      if (failures++ == 0) first = problem;
    }
  }
  if (failures == 0) return pass(std::move(name), std::to_string(count) + " samples");
  return fail(std::move(name), std::to_string(failures) + "/" + std::to_string(count) +
                                   " samples failed; first: " + first);
}

GapSpec sample_gap(Algebra algebra) {
  return algebra == Algebra::Hw ? GapSpec(Algebra::Hw, Scalar::param("hbar") * Scalar::param("omega0"))
                                : GapSpec(Algebra::Su2, Scalar::param("hbar") * Scalar::param("kappa"));
}

std::string mismatch(const OperatorExpr& x, const OperatorExpr& lhs, const OperatorExpr& rhs) {
  if (lhs == rhs) return {};
  return "X = " + to_text(x) + ": " + to_text(lhs) + " != " + to_text(rhs);
}

Rational binomial_half(int j) {
  Rational r(1);
  for (int t = 0; t < j; ++t) r *= (Rational(1, 2) - t) / (t + 1);
  return r;
}

void add_superops(std::vector<CheckResult>& out) {
  for (Algebra algebra : {Algebra::Hw, Algebra::Su2}) {
    const std::string prefix = "superops/" + to_string(algebra) + "/";
    const GapSpec gap = sample_gap(algebra);
    const OperatorExpr grading = gap.grading_operator();
    auto monomial_expr = [algebra](std::mt19937_64& rng) {
      return random_expression(algebra, rng, 1, 4);
    };
    out.push_back(sampled(prefix + "pi_idempotent", 1000, [&](std::mt19937_64& rng) {
      OperatorExpr x = monomial_expr(rng);
      return mismatch(x, pi_project(pi_project(x)), pi_project(x));
    }));
    out.push_back(sampled(prefix + "gamma_gamma_inverse", 1000, [&](std::mt19937_64& rng) {
      OperatorExpr x = monomial_expr(rng);
      return mismatch(x, gamma(gamma_inverse(x, gap), gap), x - pi_project(x));
    }));
    out.push_back(sampled(prefix + "gamma_inverse_gamma", 1000, [&](std::mt19937_64& rng) {
      OperatorExpr x = monomial_expr(rng);
      return mismatch(x, gamma_inverse(gamma(x, gap), gap), x - pi_project(x));
    }));
    out.push_back(sampled(prefix + "pi_gamma_annihilate", 1000, [&](std::mt19937_64& rng) {
      OperatorExpr x = monomial_expr(rng);
      OperatorExpr zero(algebra);
      std::string r = mismatch(x, pi_project(gamma(x, gap)), zero);
      return r.empty() ? mismatch(x, gamma(pi_project(x), gap), zero) : r;
    }));
    out.push_back(sampled(prefix + "gamma_is_commutator", 1000, [&](std::mt19937_64& rng) {
      OperatorExpr x = monomial_expr(rng);
      return mismatch(x, gamma(x, gap), commutator(grading, x));
    }));
  }
}

void add_structure(std::vector<CheckResult>& out) {
  for (Algebra algebra : {Algebra::Hw, Algebra::Su2}) {
    const std::string prefix = "structure/" + to_string(algebra) + "/";
    out.push_back(sampled(prefix + "jacobi", 200, [algebra](std::mt19937_64& rng) {
      OperatorExpr x = random_expression(algebra, rng);
      OperatorExpr y = random_expression(algebra, rng);
      OperatorExpr z = random_expression(algebra, rng);
      OperatorExpr sum = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) +
                         commutator(z, commutator(x, y));
      return sum.is_zero() ? std::string() : "Jacobi sum " + to_text(sum);
    }));
    out.push_back(sampled(prefix + "antisymmetry", 200, [algebra](std::mt19937_64& rng) {
      OperatorExpr x = random_expression(algebra, rng);
      OperatorExpr y = random_expression(algebra, rng);
      return mismatch(x, commutator(x, y), -commutator(y, x));
    }));
    out.push_back(sampled(prefix + "adjoint_involution", 200, [algebra](std::mt19937_64& rng) {
      OperatorExpr x = random_expression(algebra, rng);
      return mismatch(x, adjoint(adjoint(x)), x);
    }));
    out.push_back(sampled(prefix + "adjoint_antihomomorphism", 200, [algebra](std::mt19937_64& rng) {
      OperatorExpr x = random_expression(algebra, rng);
      OperatorExpr y = random_expression(algebra, rng);
      return mismatch(x, adjoint(multiply(x, y)), multiply(adjoint(y), adjoint(x)));
    }));
  }
  for (const char* name : {"stark", "zeeman"}) {
    const PerturbationProblem problem = preset_problem(name, 6);
    const SeriesResult series = iterate(problem);
    const OperatorExpr grading = problem.gap.grading_operator();
    std::string hermitian, relation, diagonal;
    for (const auto& o : series.orders) {
      const std::string n = std::to_string(o.order);
      if (adjoint(o.w) != o.w) hermitian += " W_" + n;
      if (adjoint(o.g) != -o.g) hermitian += " G_" + n;
      if (gamma(o.g, problem.gap) != o.a - pi_project(o.a)) relation += " " + n;
      if (!commutator(grading, o.w).is_zero()) diagonal += " " + n;
    }
    const std::string prefix = std::string("structure/") + name + "/";
    out.push_back(hermitian.empty() ? pass(prefix + "hermiticity_through_6")
                                    : fail(prefix + "hermiticity_through_6", "violated by" + hermitian));
    out.push_back(relation.empty() ? pass(prefix + "defining_relation")
                                   : fail(prefix + "defining_relation", "orders" + relation));
    out.push_back(diagonal.empty() ? pass(prefix + "w_commutes_with_grading")
                                   : fail(prefix + "w_commutes_with_grading", "orders" + diagonal));
  }
}

void add_goldens(std::vector<CheckResult>& out) {
  const SeriesResult stark = iterate(stark_problem(6));
  out.push_back(check_stark_shift(stark));
  out.push_back(check_stark_generator(stark));

  const PerturbationProblem zeeman = zeeman_problem(6);
  const SeriesResult series = iterate(zeeman);
  out.push_back(check_zeeman_orders(series));

  std::string bad;
  for (const auto& o : series.orders) {
    OperatorExpr expected(Algebra::Su2);
    if (o.order % 2 == 0) {
      const int j = o.order / 2;
      Scalar c = Scalar(GaussianRational(binomial_half(j))) * Scalar::param("kappa", 1 - 2 * j);
      expected = OperatorExpr(Algebra::Su2, Monomial{0, 1, 0}, ScalarSum(c));
    }
    if (o.w != expected) {
      bad += " W_" + std::to_string(o.order) + ": expected " + to_text(expected) + ", got " +
             to_text(o.w) + ";";
    }
  }
  out.push_back(bad.empty() ? pass("goldens/zeeman/w_series_vs_binomial")
                            : fail("goldens/zeeman/w_series_vs_binomial", bad));
}

void add_oracle(std::vector<CheckResult>& out) {
  const Algebra algebras[] = {Algebra::Hw, Algebra::Su2};
  for (Algebra algebra : algebras) {
    const std::string prefix = "oracle/" + to_string(algebra) + "/";
    out.push_back(sampled(prefix + "normal_order_vs_matrix_product", 200,
                          [algebra](std::mt19937_64& rng) -> std::string {
      std::uniform_int_distribution<int> len(1, 6);
      std::vector<Generator> word(len(rng));
      const std::vector<Generator> gens =
          algebra == Algebra::Hw
              ? std::vector<Generator>{Generator::Create, Generator::Annihilate}
              : std::vector<Generator>{Generator::Raise, Generator::Zero, Generator::Lower};
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      for (auto& g : word) g = gens[pick(rng)];
      const BasisSpec basis = algebra == Algebra::Hw
                                  ? BasisSpec::oscillator(static_cast<int>(word.size()) + 6)
                                  : BasisSpec::angular(3);
      const ExactMatrix direct = exact_word_product(Scalar(1), word, basis);
      const ExactMatrix canonical = exact_matrix_rep(normal_order(algebra, Scalar(1), word), basis);
      const int cols = trusted_columns(basis, static_cast<int>(word.size()));
      for (int i = 0; i < basis.dimension(); ++i) {
        for (int j = 0; j < cols; ++j) {
          if (direct(i, j) != canonical(i, j)) return "entry mismatch for word of length " +
                                                      std::to_string(word.size());
        }
      }
      return {};
    }));
    out.push_back(sampled(prefix + "product_homomorphism", 100,
                          [algebra](std::mt19937_64& rng) -> std::string {
      OperatorExpr x = random_expression(algebra, rng);
      OperatorExpr y = random_expression(algebra, rng);
      const BasisSpec basis = algebra == Algebra::Hw ? BasisSpec::oscillator(16) : BasisSpec::angular(3);
      CheckResult r = check_product_against_matrices(x, y, basis);
      return r.status == CheckStatus::Fail ? r.detail : std::string();
    }));
  }

  {
    // Ladder power 6 in an N = 8 truncation is outside the trusted range.
    const std::vector<Generator> word(6, Generator::Create);
    OperatorExpr x = normal_order(Algebra::Hw, Scalar(1), word);
    CheckResult guard = check_product_against_matrices(x, adjoint(x), BasisSpec::oscillator(8));
    guard.name = "oracle/hw/truncation_guard";
    out.push_back(guard);
  }

  {
    const PerturbationProblem zeeman = zeeman_problem(6);
    const SeriesResult series = iterate(zeeman);
    ParamValues values{{"hbar", 1.0}, {"kappa", 5.0}, {"u", std::polar(1.0, 0.3)}};
    OperatorExpr g1 = series.orders[0].g;
    ComplexMatrix lhs = matrix_rep(commutator(g1, zeeman.v), BasisSpec::angular(2), values);
    ComplexMatrix rhs = matrix_rep(OperatorExpr::generator(Generator::Zero), BasisSpec::angular(2),
                                   values) / 5.0;
    double diff = (lhs - rhs).cwiseAbs().maxCoeff();
    out.push_back(diff <= 1e-12 ? pass("oracle/zeeman/commutator_g1_v")
                                : fail("oracle/zeeman/commutator_g1_v",
                                       "max deviation " + std::to_string(diff)));

    std::string bad;
    for (int l : {1, 2, 3}) {
      for (double kappa : {2.0, 5.0, 10.0}) {
        for (int order : {2, 4, 6}) {
          ParamValues vals{{"hbar", 1.0}, {"kappa", kappa}, {"u", std::polar(1.0, 0.7)}};
          auto exact = eigenvalues_hermitian(hamiltonian_matrix(zeeman, BasisSpec::angular(l), vals, 1.0));
          OperatorExpr w = series.total_w(order);
          for (int m = -l; m <= l; ++m) {
            double pert = m * kappa + diagonal_expectation(w, StateLabel::angular(l, m), vals).real();
            double ref = exact[m + l];
            double tol = m == 0 ? 1e-10 : 2.0 * std::pow(kappa, -(order + 1)) * std::abs(ref);
            if (std::abs(pert - ref) > tol) {
              bad += " l=" + std::to_string(l) + ",m=" + std::to_string(m) + ",kappa=" +
                     std::to_string(kappa) + ",N=" + std::to_string(order) + ";";
            }
          }
        }
      }
    }
    out.push_back(bad.empty() ? pass("oracle/zeeman/spectrum_vs_eigenvalues")
                              : fail("oracle/zeeman/spectrum_vs_eigenvalues", bad));

    ParamValues sim{{"hbar", 1.0}, {"kappa", 10.0}, {"u", std::polar(1.0, 0.3)}};
    SimilarityReport report = similarity_check(zeeman, series, BasisSpec::angular(1), sim, 4);
    out.push_back(std::abs(report.exponent - 5.0) <= 0.3
                      ? pass("oracle/zeeman/similarity_exponent",
                             "fitted " + std::to_string(report.exponent))
                      : fail("oracle/zeeman/similarity_exponent",
                             "fitted " + std::to_string(report.exponent) + ", expected 5 +- 0.3"));
  }

  {
    const PerturbationProblem stark = stark_problem(2);
    const SeriesResult series = iterate(stark);
    ParamValues values{{"hbar", 1.0}, {"m_mass", 1.0}, {"omega0", 1.0}, {"e_charge", 1.0},
                       {"field", 0.05}};
    auto eig = eigenvalues_hermitian(
        hamiltonian_matrix(stark, BasisSpec::oscillator(60), values, 1.0, true));
    const double shift = eig.front() - 0.5;
    const double expected = -0.05 * 0.05 / 2.0;
    out.push_back(std::abs(shift - expected) <= 1e-8
                      ? pass("oracle/stark/ground_state")
                      : fail("oracle/stark/ground_state", "shift " + std::to_string(shift)));

    SimilarityReport report = similarity_check(stark, series, BasisSpec::oscillator(60), values, 2);
    double worst = 0.0;
    for (double r : report.residuals) worst = std::max(worst, r);
    out.push_back(worst <= 1e-10 ? pass("oracle/stark/similarity_closure")
                                 : fail("oracle/stark/similarity_closure",
                                        "residual " + std::to_string(worst)));
  }
}

}  // namespace

int VerifyReport::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == CheckStatus::Fail;
  return n;
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  int passed = 0, skipped = 0;
  for (const auto& c : checks) {
    const char* tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    os << tag << "  " << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
    passed += c.status == CheckStatus::Pass;
    skipped += c.status == CheckStatus::Skip;
  }
  os << passed << " passed, " << failures() << " failed, " << skipped << " skipped\n";
  return os.str();
}

Monomial random_monomial(Algebra algebra, std::mt19937_64& rng, int max_power) {
  std::uniform_int_distribution<int> power(0, max_power);
  Monomial w{power(rng), 0, power(rng)};
  if (algebra == Algebra::Su2) w.middle = power(rng);
  return w;
}

OperatorExpr random_expression(Algebra algebra, std::mt19937_64& rng, int max_terms, int max_power) {
  static const std::vector<GaussianRational> coeffs = {
      GaussianRational(1), GaussianRational(-1), GaussianRational(Rational(1, 2)),
      GaussianRational(Rational(-3, 2)), GaussianRational(2),
      GaussianRational(Rational(0), Rational(1, 3)), GaussianRational(Rational(1), Rational(-1))};
  static const std::vector<const char*> symbols = {nullptr, "hbar", "kappa", "u", "u_conj", "omega0"};
  std::uniform_int_distribution<int> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick_coeff(0, coeffs.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_symbol(0, symbols.size() - 1);
  OperatorExpr out(algebra);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    Scalar s(coeffs[pick_coeff(rng)]);
    if (const char* sym = symbols[pick_symbol(rng)]) s *= Scalar::param(sym);
    out.add_term(random_monomial(algebra, rng, max_power), ScalarSum(s));
  }
  return out;
}

std::vector<std::string> verify_scopes() {
  return {"all", "superops", "structure", "goldens", "oracle"};
}

VerifyReport run_verify(const std::string& scope) {
  VerifyReport report;
  const bool all = scope == "all";
  bool known = all;
  if (all || scope == "superops") { add_superops(report.checks); known = true; }
  if (all || scope == "structure") { add_structure(report.checks); known = true; }
  if (all || scope == "goldens") { add_goldens(report.checks); known = true; }
  if (all || scope == "oracle") { add_oracle(report.checks); known = true; }
  if (!known) throw ValidationError("unknown verify scope '" + scope + "'");
  return report;
}

CheckResult check_stark_shift(const SeriesResult& series) {
  const std::string name = "goldens/stark/shift_and_termination";
  // W = -½ e² 𝓔² / (m ω₀²)
  OperatorExpr expected = parse_operator(Algebra::Hw, "-1/2*e_charge^2*field^2*m_mass^-1*omega0^-2");
  CheckResult r = compare(name, expected, series.total_w());
  if (r.status == CheckStatus::Fail) return r;
  if (!series.orders.at(0).w.is_zero()) return fail(name, "W_1 = " + to_text(series.orders[0].w));
  if (series.orders.size() >= 2 && !series.orders[1].g.is_zero()) {
    return fail(name, "G_2 = " + to_text(series.orders[1].g));
  }
  for (const auto& o : series.orders) {
    if (o.order >= 3 && !o.a.is_zero()) {
      return fail(name, "A_" + std::to_string(o.order) + " = " + to_text(o.a));
    }
  }
  return pass(name);
}

CheckResult check_stark_generator(const SeriesResult& series) {
  // G = -(e𝓔/ħω₀) sqrt(ħ/2mω₀) (a† - a)
  const std::string c = "e_charge*field*hbar^(-1/2)*omega0^(-3/2)*m_mass^(-1/2)*2^(-1/2)";
  OperatorExpr expected = parse_operator(Algebra::Hw, "-" + c + "*a+, " + c + "*a");
  return compare("goldens/stark/generator", expected, series.total_g());
}

CheckResult check_zeeman_orders(const SeriesResult& series) {
  const std::string name = "goldens/zeeman/orders_1_to_4";
  if (series.orders.size() < 4) return fail(name, "series shorter than 4 orders");
  const Algebra su2 = Algebra::Su2;
  const OperatorExpr v = parse_operator(su2, "1/2*u*L+, 1/2*u_conj*L-");
  const OperatorExpr g1 = parse_operator(su2, "1/2*hbar^-1*kappa^-1*u*L+, -1/2*hbar^-1*kappa^-1*u_conj*L-");
  const OperatorExpr zero(su2);
  const OperatorExpr a2 = parse_operator(su2, "1/2*kappa^-1*L0");
  const OperatorExpr a3 = v * Scalar::param("kappa", -2) * Scalar(GaussianRational(Rational(-1, 3)));
  const OperatorExpr g3 = g1 * Scalar::param("kappa", -2) * Scalar(GaussianRational(Rational(-1, 3)));
  const OperatorExpr a4 = parse_operator(su2, "-1/8*kappa^-3*L0");
  struct Row {
    const char* label;
    const OperatorExpr& expected;
    const OperatorExpr& actual;
  };
  const auto& o = series.orders;
  const Row rows[] = {
      {"A_1", v, o[0].a},  {"W_1", zero, o[0].w}, {"G_1", g1, o[0].g},
      {"A_2", a2, o[1].a}, {"W_2", a2, o[1].w},   {"G_2", zero, o[1].g},
      {"A_3", a3, o[2].a}, {"W_3", zero, o[2].w}, {"G_3", g3, o[2].g},
      {"A_4", a4, o[3].a}, {"W_4", a4, o[3].w},   {"G_4", zero, o[3].g},
  };
  for (const Row& row : rows) {
    if (row.expected != row.actual) {
      return fail(name, std::string(row.label) + ": expected " + to_text(row.expected) + ", got " +
                            to_text(row.actual));
    }
  }
  return pass(name);
}

CheckResult check_product_against_matrices(const OperatorExpr& lhs, const OperatorExpr& rhs,
                                           const BasisSpec& basis) {
  const std::string name = "oracle/" + to_string(basis.algebra) + "/product_homomorphism";
  const OperatorExpr product = multiply(lhs, rhs);
  if (!truncation_ok(lhs, basis) || !truncation_ok(rhs, basis) || !truncation_ok(product, basis)) {
    return {name, CheckStatus::Skip,
            "ladder power " + std::to_string(std::max(lhs.max_ladder_power(), rhs.max_ladder_power())) +
                " exceeds N/4 for N = " + std::to_string(basis.dimension())};
  }
  const ExactMatrix expected = exact_matrix_rep(lhs, basis) * exact_matrix_rep(rhs, basis);
  const ExactMatrix actual = exact_matrix_rep(product, basis);
  const int cols = trusted_columns(basis, rhs.max_ladder_power());
  for (int i = 0; i < basis.dimension(); ++i) {
    for (int j = 0; j < cols; ++j) {
      if (expected(i, j) != actual(i, j)) {
        return fail(name, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs for " +
                              to_text(lhs) + " times " + to_text(rhs));
      }
    }
  }
  return pass(name);
}

}  // namespace oppert
