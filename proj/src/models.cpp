#include "oppert/models.h"

#include <charconv>
#include <cmath>

#include "oppert/errors.h"
#include "oppert/format.h"

namespace oppert {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

int parse_int(std::string_view s, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

double parse_double(std::string_view s) {
  std::string text(trim(s));
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("bad number '" + text + "'");
  }
  if (used != text.size()) throw ParseError("bad number '" + text + "'");
  return value;
}

std::complex<double> parse_complex(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty value");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  std::string_view body = s.substr(0, s.size() - 1);
  // split at the last sign that is not a leading sign or an exponent sign
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      cut = i;
      break;
    }
  }
  auto imag_part = [](std::string_view t) {
    t = trim(t);
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (cut == std::string_view::npos) return {0.0, imag_part(body)};
  return {parse_double(body.substr(0, cut)), imag_part(body.substr(cut))};
}

// Replace L2 by l(l+1)ħ² in every scalar term.
ScalarSum substitute_casimir(const ScalarSum& sum, const StateLabel& state) {
  ScalarSum out;
  for (const auto& [powers, c] : sum.terms()) {
    auto it = powers.find("L2");
    if (it == powers.end()) {
      out += ScalarSum(Scalar(c, powers));
      continue;
    }
    if (state.algebra != Algebra::Su2) throw ValidationError("L2 only has values on su2 states");
    ParamPowers rest = powers;
    Rational e = rest["L2"];
    rest.erase("L2");
    if (boost::multiprecision::denominator(e) != 1) {
      throw ValidationError("L2 must appear with an integer power");
    }
    const int value = state.l * (state.l + 1);
    if (value == 0) {
      if (e < 0) throw ValidationError("L2 inverse is undefined for l = 0");
      continue;
    }
    Scalar s = Scalar(c, rest) * Scalar::power_of(Rational(value), e) *
               Scalar::param("hbar", 2 * e);
    out += ScalarSum(s);
  }
  return out;
}

}  // namespace

StateLabel StateLabel::oscillator(int n) {
  if (n < 0) throw ValidationError("oscillator level must be >= 0");
  return {Algebra::Hw, n, 0, 0};
}

StateLabel StateLabel::angular(int l, int m) {
  if (l < 0 || std::abs(m) > l) throw ValidationError("angular state needs l >= 0 and |m| <= l");
  return {Algebra::Su2, 0, l, m};
}

std::string StateLabel::to_string() const {
  if (algebra == Algebra::Hw) return "n=" + std::to_string(n);
  return "l=" + std::to_string(l) + ",m=" + std::to_string(m);
}

std::vector<StateLabel> parse_states(Algebra algebra, std::string_view text) {
  std::vector<StateLabel> out;
  for (auto item : split(text, ',')) {
    if (item.empty()) throw ParseError("empty state label");
    if (algebra == Algebra::Hw) {
      out.push_back(StateLabel::oscillator(parse_int(item, "oscillator level")));
    } else {
      auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("su2 states are written l:m, got '" + std::string(item) + "'");
      }
      out.push_back(StateLabel::angular(parse_int(trim(item.substr(0, colon)), "l"),
                                        parse_int(trim(item.substr(colon + 1)), "m")));
    }
  }
  return out;
}

ParamValues parse_param_values(std::string_view text) {
  ParamValues out;
  if (trim(text).empty()) return out;
  for (auto item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("parameter values are written name=value, got '" + std::string(item) + "'");
    }
    std::string name(trim(item.substr(0, eq)));
    if (name.empty()) throw ParseError("empty parameter name");
    out[name] = parse_complex(item.substr(eq + 1));
  }
  return out;
}

void check_param_values(const ParamValues& values) {
  for (const char* name : {"hbar", "m_mass", "omega0", "kappa"}) {
    auto it = values.find(name);
    if (it == values.end()) continue;
    if (it->second.imag() != 0.0 || it->second.real() <= 0.0) {
      throw ValidationError(std::string(name) + " must be a positive real number");
    }
  }
  if (auto it = values.find("u"); it != values.end()) {
    if (std::abs(std::abs(it->second) - 1.0) > 1e-12) throw ValidationError("|u| must be 1");
  }
}

PerturbationProblem stark_problem(int max_order) {
  // -e𝓔 sqrt(ħ / 2mω₀)
  Scalar c = -Scalar::param("e_charge") * Scalar::param("field") *
             Scalar::param("hbar", Rational(1, 2)) * Scalar::power_of(2, Rational(-1, 2)) *
             Scalar::param("m_mass", Rational(-1, 2)) * Scalar::param("omega0", Rational(-1, 2));
  OperatorExpr v = OperatorExpr::generator(Generator::Create, c) +
                   OperatorExpr::generator(Generator::Annihilate, c);
  GapSpec gap(Algebra::Hw, Scalar::param("hbar") * Scalar::param("omega0"));
  ScalarSum central(Scalar(GaussianRational(Rational(1, 2))) * gap.gap_constant);
  return PerturbationProblem("stark", std::move(gap), std::move(central), std::move(v), max_order);
}

PerturbationProblem zeeman_problem(int max_order) {
  const Scalar half(GaussianRational(Rational(1, 2)));
  OperatorExpr v = OperatorExpr::generator(Generator::Raise, half * Scalar::param("u")) +
                   OperatorExpr::generator(Generator::Lower, half * Scalar::param("u_conj"));
  GapSpec gap(Algebra::Su2, Scalar::param("hbar") * Scalar::param("kappa"));
  ScalarSum central = ScalarSum(Scalar::param("eps_R")) +
                      ScalarSum(Scalar::param("alpha_over_r2") * Scalar::param("L2"));
  return PerturbationProblem("zeeman", std::move(gap), std::move(central), std::move(v), max_order);
}

PerturbationProblem preset_problem(const std::string& name, int max_order) {
  if (name == "stark") return stark_problem(max_order);
  if (name == "zeeman") return zeeman_problem(max_order);
  throw ValidationError("unknown preset '" + name + "' (expected stark or zeeman)");
}

ScalarSum diagonal_expectation_exact(const OperatorExpr& expr, const StateLabel& state) {
  if (expr.algebra() != state.algebra) throw AlgebraMismatch("state and operator algebras differ");
  ScalarSum total;
  for (const auto& [w, c] : expr.terms()) {
    if (w.shift() != 0) throw ValidationError("diagonal_expectation needs a diagonal operator");
    const int k = w.raising;
    Scalar factor(1);
    if (state.algebra == Algebra::Hw) {
      if (k > state.n) continue;
      for (int j = 0; j < k; ++j) factor *= Scalar(state.n - j);
    } else {
      const int ll = state.l * (state.l + 1);
      for (int j = 0; j < k; ++j) {
        const int m = state.m - j;
        factor *= Scalar(ll - m * (m - 1)) * Scalar::param("hbar", 2);
      }
      for (int j = 0; j < w.middle; ++j) factor *= Scalar(state.m - k) * Scalar::param("hbar");
    }
    if (!factor.is_zero()) total += c * factor;
  }
  return substitute_casimir(total, state);
}

std::complex<double> diagonal_expectation(const OperatorExpr& expr, const StateLabel& state,
                                          const ParamValues& values) {
  return diagonal_expectation_exact(expr, state).evaluate(values);
}

std::complex<double> zero_order_energy(const PerturbationProblem& problem,
                                       const StateLabel& state, const ParamValues& values) {
  if (problem.algebra != state.algebra) throw AlgebraMismatch("state and problem algebras differ");
  const int level = state.algebra == Algebra::Hw ? state.n : state.m;
  ScalarSum e0 = substitute_casimir(problem.h0_central, state) +
                 ScalarSum(Scalar(level) * problem.gap.gap_constant);
  return e0.evaluate(values);
}

std::vector<SpectrumRow> evaluate_spectrum(const PerturbationProblem& problem,
                                           const SeriesResult& series,
                                           const std::vector<StateLabel>& states,
                                           const ParamValues& values) {
  check_param_values(values);
  std::vector<SpectrumRow> rows;
  for (const auto& state : states) {
    SpectrumRow row{state, zero_order_energy(problem, state, values).real(), {}, 0.0};
    row.eps = row.eps0;
    for (const auto& o : series.orders) {
      double d = diagonal_expectation(o.w, state, values).real();
      row.corrections.push_back(d);
      row.eps += d;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace oppert
