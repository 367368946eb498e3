#include "oppert/config.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "oppert/errors.h"
#include "oppert/format.h"

namespace oppert {

namespace {

struct Entry {
  std::string value;
  SourcePos pos;  // position of the value's first character
};

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

void check_symbols(const ParamPowers& powers, const std::set<std::string>& allowed,
                   const SourcePos& pos) {
  for (const auto& [name, e] : powers) {
    if (is_prime_base(name) || allowed.count(name)) continue;
    throw ValidationError("unknown parameter '" + name + "' at line " + std::to_string(pos.line) +
                          " (declare it with `symbols = " + name + "`)");
  }
}

void check_symbols(const ScalarSum& sum, const std::set<std::string>& allowed,
                   const SourcePos& pos) {
  for (const auto& [powers, c] : sum.terms()) check_symbols(powers, allowed, pos);
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::Text;
  if (text == "json") return OutputFormat::Json;
  if (text == "latex") return OutputFormat::Latex;
  throw ParseError("unknown format '" + std::string(text) + "' (expected text, json or latex)");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Latex: return "latex";
  }
  return "text";
}

const std::set<std::string>& known_symbols() {
  static const std::set<std::string> names = {
      "hbar", "m_mass", "omega0", "e_charge", "field", "kappa",
      "u",    "u_conj", "eps_R",  "alpha_over_r2", "L2"};
  return names;
}

PerturbationProblem ProblemConfig::problem() const {
  if (custom) {
    PerturbationProblem p = *custom;
    p.max_order = max_order;
    return p;
  }
  return preset_problem(preset.value_or("stark"), max_order);
}

std::vector<StateLabel> ProblemConfig::states() const {
  if (!states_text) return {};
  const Algebra algebra = custom ? custom->algebra
                                 : (preset.value_or("stark") == "zeeman" ? Algebra::Su2 : Algebra::Hw);
  return parse_states(algebra, *states_text);
}

ProblemConfig preset_config(const std::string& name, int max_order) {
  preset_problem(name, 1);  // validates the name
  if (max_order < 1) throw ValidationError("order must be >= 1");
  ProblemConfig config;
  config.preset = name;
  config.max_order = max_order;
  return config;
}

ProblemConfig parse_config(std::string_view text) {
  static const std::set<std::string> keys = {"preset", "algebra", "gap",    "central", "v",
                                             "symbols", "order",  "format", "params",  "states"};
  std::map<std::string, Entry> single;
  std::vector<Entry> v_lines;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t key_start = i;
    while (i < line.size() && is_key_char(line[i])) ++i;
    if (i == key_start) {
      throw ParseError("expected a key", line_no, static_cast<int>(key_start) + 1);
    }
    std::string key(line.substr(key_start, i - key_start));
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size() || line[i] != '=') {
      throw ParseError("expected '=' after '" + key + "'", line_no, static_cast<int>(i) + 1);
    }
    ++i;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::string_view value = line.substr(i);
    while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) {
      value.remove_suffix(1);
    }
    if (!keys.count(key)) {
      throw ParseError("unknown key '" + key + "'", line_no, static_cast<int>(key_start) + 1);
    }
    if (value.empty()) {
      throw ParseError("missing value for '" + key + "'", line_no, static_cast<int>(i) + 1);
    }
    Entry entry{std::string(value), {line_no, static_cast<int>(i) + 1}};
    if (key == "v") {
      v_lines.push_back(std::move(entry));
    } else if (!single.emplace(key, entry).second) {
      throw ParseError("duplicate key '" + key + "'", line_no, static_cast<int>(key_start) + 1);
    }
    if (end == text.size()) break;
  }

  ProblemConfig config;
  auto get = [&](const std::string& key) -> const Entry* {
    auto it = single.find(key);
    return it == single.end() ? nullptr : &it->second;
  };

  if (const Entry* e = get("order")) {
    try {
      std::size_t used = 0;
      config.max_order = std::stoi(e->value, &used);
      if (used != e->value.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("order must be an integer", e->pos.line, e->pos.column);
    }
    if (config.max_order < 1) throw ValidationError("order must be >= 1");
  }
  if (const Entry* e = get("format")) {
    try {
      config.format = parse_format(e->value);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), e->pos.line, e->pos.column);
    }
  }

  std::set<std::string> allowed = known_symbols();
  if (const Entry* e = get("symbols")) {
    std::size_t pos = 0;
    while (pos <= e->value.size()) {
      std::size_t comma = e->value.find(',', pos);
      if (comma == std::string::npos) comma = e->value.size();
      std::string name = e->value.substr(pos, comma - pos);
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())) ||
          !std::all_of(name.begin(), name.end(), is_key_char)) {
        throw ParseError("bad symbol name '" + name + "'", e->pos.line,
                         e->pos.column + static_cast<int>(pos));
      }
      allowed.insert(name);
      pos = comma + 1;
    }
  }

  const bool explicit_keys = get("algebra") || get("gap") || get("central") || !v_lines.empty();
  if (const Entry* e = get("preset")) {
    if (explicit_keys) {
      throw ValidationError("preset cannot be combined with algebra/gap/central/v");
    }
    if (e->value != "stark" && e->value != "zeeman") {
      throw ParseError("unknown preset '" + e->value + "'", e->pos.line, e->pos.column);
    }
    config.preset = e->value;
  } else {
    const Entry* alg = get("algebra");
    const Entry* gap = get("gap");
    if (!alg || !gap || v_lines.empty()) {
      throw ValidationError("config needs either `preset` or all of `algebra`, `gap` and `v`");
    }
    Algebra algebra;
    try {
      algebra = parse_algebra(alg->value);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), alg->pos.line, alg->pos.column);
    }
    Scalar gap_constant = parse_scalar(gap->value, gap->pos);
    check_symbols(gap_constant.powers(), allowed, gap->pos);

    ScalarSum central;
    if (const Entry* c = get("central")) {
      central = parse_scalar_sum(c->value, c->pos);
      check_symbols(central, allowed, c->pos);
    }
    OperatorExpr v(algebra);
    for (const Entry& line : v_lines) {
      OperatorExpr part = parse_operator(algebra, line.value, line.pos);
      for (const auto& [w, c] : part.terms()) check_symbols(c, allowed, line.pos);
      v += part;
    }
    config.custom.emplace("custom", GapSpec(algebra, gap_constant), central, v, config.max_order);
  }

  if (const Entry* e = get("params")) {
    try {
      config.values = parse_param_values(e->value);
    } catch (const ParseError& err) {
      throw ParseError(err.what(), e->pos.line, e->pos.column);
    }
    for (const auto& [name, value] : config.values) {
      if (!allowed.count(name)) throw ValidationError("unknown parameter '" + name + "' in params");
    }
    check_param_values(config.values);
  }
  if (const Entry* e = get("states")) {
    config.states_text = e->value;
    try {
      config.states();
    } catch (const ParseError& err) {
      throw ParseError(err.what(), e->pos.line, e->pos.column);
    }
  }
  return config;
}

}  // namespace oppert
