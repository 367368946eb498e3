#include "oppert/commands.h"

#include <cstdio>
#include <sstream>

#include "oppert/errors.h"
#include "oppert/format.h"

namespace oppert {

namespace {

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string convention(Algebra algebra) {
  return algebra == Algebra::Hw ? "[a, a†] = 1" : "[L₀, L±] = ±ħL±, [L₊, L₋] = 2ħL₀";
}

std::string render_text(const PerturbationProblem& problem, const SeriesResult& series) {
  std::ostringstream os;
  os << "problem: " << problem.name << " (" << to_string(problem.algebra) << "), max order "
     << problem.max_order << "\n";
  os << "convention: " << convention(problem.algebra) << "\n";
  os << "gap: " << to_text(problem.gap.gap_constant) << "\n";
  os << "V = " << to_text(problem.v) << "\n";
  for (const auto& o : series.orders) {
    const std::string n = std::to_string(o.order);
    os << "\norder " << n << "\n";
    os << "  A_" << n << " = " << to_text(o.a) << "\n";
    os << "  W_" << n << " = " << to_text(o.w) << "\n";
    os << "  G_" << n << " = " << to_text(o.g) << "\n";
  }
  os << "\nW = " << to_text(series.total_w()) << "\n";
  os << "G = " << to_text(series.total_g()) << "\n";
  os << "zero orders:";
  const auto zeros = series.zero_orders();
  if (zeros.empty()) os << " none";
  for (std::size_t i = 0; i < zeros.size(); ++i) os << (i ? ", " : " ") << zeros[i];
  os << "\n";
  return os.str();
}

std::string render_latex(const PerturbationProblem& problem, const SeriesResult& series) {
  std::ostringstream os;
  os << "% " << problem.name << " (" << to_string(problem.algebra) << "), max order "
     << problem.max_order << "\n";
  os << "\\begin{align*}\n";
  for (const auto& o : series.orders) {
    const std::string n = std::to_string(o.order);
    os << "\\hat{A}_{" << n << "} &= " << to_latex(o.a) << " \\\\\n";
    os << "\\hat{W}_{" << n << "} &= " << to_latex(o.w) << " \\\\\n";
    os << "\\hat{G}_{" << n << "} &= " << to_latex(o.g) << " \\\\\n";
  }
  os << "\\hat{W} &= " << to_latex(series.total_w()) << " \\\\\n";
  os << "\\hat{G} &= " << to_latex(series.total_g()) << "\n";
  os << "\\end{align*}\n";
  return os.str();
}

std::string render_json(const PerturbationProblem& problem, const SeriesResult& series) {
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& o : series.orders) {
    orders.push_back({{"order", o.order},
                      {"zero", o.a.is_zero()},
                      {"A", to_json(o.a)},
                      {"W", to_json(o.w)},
                      {"G", to_json(o.g)}});
  }
  nlohmann::json doc = {
      {"problem",
       {{"name", problem.name},
        {"algebra", to_string(problem.algebra)},
        {"max_order", problem.max_order},
        {"gap", to_text(problem.gap.gap_constant)},
        {"V", to_json(problem.v)}}},
      {"orders", std::move(orders)},
      {"W", to_json(series.total_w())},
      {"G", to_json(series.total_g())},
      {"zero_orders", series.zero_orders()},
  };
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render_run(const PerturbationProblem& problem, const SeriesResult& series,
                       OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return render_text(problem, series);
    case OutputFormat::Json: return render_json(problem, series);
    case OutputFormat::Latex: return render_latex(problem, series);
  }
  return {};
}

std::string render_spectrum(const PerturbationProblem& problem, const SeriesResult& series,
                            const std::vector<StateLabel>& states, const ParamValues& values,
                            OutputFormat format) {
  if (states.empty()) throw ValidationError("spectrum needs at least one state");
  const auto rows = evaluate_spectrum(problem, series, states, values);
  if (format == OutputFormat::Json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
      out.push_back({{"state", row.state.to_string()},
                     {"eps0", row.eps0},
                     {"corrections", row.corrections},
                     {"eps", row.eps}});
    }
    return out.dump(2) + "\n";
  }
  if (format != OutputFormat::Text) throw ValidationError("spectrum supports text or json output");
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-12s %20s", "state", "eps0");
  os << buf;
  for (const auto& o : series.orders) {
    std::snprintf(buf, sizeof buf, " %20s", ("<W_" + std::to_string(o.order) + ">").c_str());
    os << buf;
  }
  std::snprintf(buf, sizeof buf, " %20s\n", "eps");
  os << buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-12s %20s", row.state.to_string().c_str(), number(row.eps0).c_str());
    os << buf;
    for (double c : row.corrections) {
      std::snprintf(buf, sizeof buf, " %20s", number(c).c_str());
      os << buf;
    }
    std::snprintf(buf, sizeof buf, " %20s\n", number(row.eps).c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace oppert
