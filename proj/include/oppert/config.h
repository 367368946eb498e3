#pragma once

// Problem configuration documents.
//
// One "key = value" pair per line; '#' starts a comment. Keys:
//
//   preset   stark | zeeman           (exclusive with algebra/gap/central/v)
//   algebra  hw | su2
//   gap      single scalar term, e.g. hbar*kappa
//   central  comma-separated scalar terms (optional), e.g. eps_R, alpha_over_r2*L2
//   v        comma-separated operator terms; may repeat, terms accumulate
//   symbols  extra parameter names, comma separated
//   order    positive integer (default 4)
//   format   text | json | latex (default text)
//   params   name=value list, e.g. hbar=1, kappa=5, u=0.6+0.8i
//   states   0,1,2 (hw) or 1:1, 1:-1 (su2)

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oppert/models.h"

namespace oppert {

enum class OutputFormat { Text, Json, Latex };

OutputFormat parse_format(std::string_view text);
std::string to_string(OutputFormat format);

/// Parameter names understood without a `symbols` declaration.
const std::set<std::string>& known_symbols();

struct ProblemConfig {
  std::optional<std::string> preset;
  std::optional<PerturbationProblem> custom;
  int max_order = 4;
  OutputFormat format = OutputFormat::Text;
  ParamValues values;
  std::optional<std::string> states_text;

  PerturbationProblem problem() const;
  std::vector<StateLabel> states() const;
};

ProblemConfig preset_config(const std::string& name, int max_order);
ProblemConfig parse_config(std::string_view text);

}  // namespace oppert
