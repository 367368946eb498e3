#include "oppert/format.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "oppert/errors.h"

namespace oppert {

namespace {

constexpr const char* kMinus = "−";

const std::map<std::string, std::string>& display_names() {
  static const std::map<std::string, std::string> names = {
      {"hbar", "ħ"},          {"m_mass", "m"},      {"omega0", "ω₀"},
      {"e_charge", "e"},      {"field", "𝓔"},       {"kappa", "κ"},
      {"u", "u"},             {"u_conj", "u*"},     {"eps_R", "ε_R"},
      {"alpha_over_r2", "(α/r²)"}, {"L2", "L²"},
  };
  return names;
}

const std::map<std::string, std::string>& latex_names() {
  static const std::map<std::string, std::string> names = {
      {"hbar", "\\hbar"},     {"m_mass", "m"},        {"omega0", "\\omega_0"},
      {"e_charge", "e"},      {"field", "\\mathcal{E}"}, {"kappa", "\\kappa"},
      {"u", "u"},             {"u_conj", "u^{*}"},    {"eps_R", "\\varepsilon_R"},
      {"alpha_over_r2", "\\left(\\frac{\\alpha}{r^2}\\right)"}, {"L2", "\\hat{L}^2"},
  };
  return names;
}

std::string superscript(const Integer& value) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = value < 0 ? "⁻" : "";
  Integer magnitude = value < 0 ? Integer(-value) : value;
  for (char ch : magnitude.str()) out += digits[ch - '0'];
  return out;
}

std::string text_power(const std::string& symbol, const Rational& e) {
  std::string base = display_name(symbol);
  if (e == 1) return base;
  if (boost::multiprecision::denominator(e) == 1) {
    return base + superscript(boost::multiprecision::numerator(e));
  }
  if (e == Rational(1, 2) && is_prime_base(symbol)) return "√" + symbol;
  return base + "^{" + format_rational(e) + "}";
}

// Magnitude text of a coefficient; sets negative when a leading minus applies.
std::string coefficient_text(const GaussianRational& c, bool has_factors, bool& negative) {
  negative = false;
  auto wrap = [](const Rational& q) {
    std::string s = format_rational(q);
    return boost::multiprecision::denominator(q) == 1 ? s : "(" + s + ")";
  };
  if (c.im == 0) {
    negative = c.re < 0;
    Rational mag = negative ? Rational(-c.re) : c.re;
    if (mag == 1 && has_factors) return "";
    return wrap(mag);
  }
  if (c.re == 0) {
    negative = c.im < 0;
    Rational mag = negative ? Rational(-c.im) : c.im;
    return mag == 1 ? "i" : wrap(mag) + "i";
  }
  std::string im = c.im < 0 ? "-" + format_rational(-c.im) : "+" + format_rational(c.im);
  return "(" + format_rational(c.re) + im + "i)";
}

std::string monomial_text(Algebra algebra, const Monomial& w) {
  if (w.is_identity()) return "1";
  std::vector<std::string> parts;
  auto push = [&](const char* g, int k) {
    if (k == 0) return;
    parts.push_back(k == 1 ? std::string(g) : g + superscript(k));
  };
  if (algebra == Algebra::Hw) {
    push("a†", w.raising);
    push("a", w.lowering);
  } else {
    push("L₊", w.raising);
    push("L₀", w.middle);
    push("L₋", w.lowering);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "·" : "") + parts[i];
  return out;
}

std::string monomial_latex(Algebra algebra, const Monomial& w) {
  if (w.is_identity()) return "\\hat{1}";
  auto power = [](int k) { return k == 1 ? std::string() : "^{" + std::to_string(k) + "}"; };
  std::string out;
  if (algebra == Algebra::Hw) {
    if (w.raising) {
      out += w.raising == 1 ? "\\hat{a}^{\\dagger}"
                            : "\\hat{a}^{\\dagger " + std::to_string(w.raising) + "}";
    }
    if (w.lowering) out += "\\hat{a}" + power(w.lowering);
  } else {
    if (w.raising) out += "\\hat{L}_{+}" + power(w.raising);
    if (w.middle) out += "\\hat{L}_{0}" + power(w.middle);
    if (w.lowering) out += "\\hat{L}_{-}" + power(w.lowering);
  }
  return out;
}

std::string latex_rational(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return "\\frac{" + boost::multiprecision::numerator(q).str() + "}{" +
         boost::multiprecision::denominator(q).str() + "}";
}

// Signed LaTeX for one scalar term; the leading sign is returned separately.
std::string scalar_latex(const GaussianRational& c, const ParamPowers& powers, bool& negative) {
  std::string params;
  for (const auto& [name, e] : powers) {
    auto it = latex_names().find(name);
    std::string base = it != latex_names().end() ? it->second : name;
    if (e == 1) {
      params += base;
    } else if (boost::multiprecision::denominator(e) == 1) {
      params += base + "^{" + boost::multiprecision::numerator(e).str() + "}";
    } else {
      params += base + "^{" + format_rational(e) + "}";
    }
    params += " ";
  }
  if (!params.empty()) params.pop_back();
  negative = false;
  std::string coeff;
  if (c.im == 0) {
    negative = c.re < 0;
    Rational mag = negative ? Rational(-c.re) : c.re;
    if (!(mag == 1 && !params.empty())) coeff = latex_rational(mag);
  } else if (c.re == 0) {
    negative = c.im < 0;
    Rational mag = negative ? Rational(-c.im) : c.im;
    coeff = (mag == 1 ? std::string() : latex_rational(mag)) + "i";
  } else {
    coeff = "\\left(" + latex_rational(c.re) + (c.im < 0 ? " - " : " + ") +
            latex_rational(c.im < 0 ? Rational(-c.im) : c.im) + "i\\right)";
  }
  if (!coeff.empty() && !params.empty()) return coeff + " " + params;
  return coeff + params;
}

// ---------------------------------------------------------------------------
// Term parser.

class TermParser {
 public:
  TermParser(std::string_view text, SourcePos at) : text_(text), at_(at) {}

  struct Term {
    Scalar coeff{1};
    std::vector<Generator> word;
  };

  std::vector<Term> parse_terms() {
    std::vector<Term> out;
    skip_space();
    if (done()) fail("empty expression");
    for (;;) {
      out.push_back(parse_term());
      skip_space();
      if (done()) break;
      if (peek() != ',') fail(std::string("unexpected '") + peek() + "'");
      ++pos_;
    }
    return out;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, at_.line, at_.column + static_cast<int>(pos_));
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  // int ['.' digits] ['/' int]
  Rational parse_number() {
    Rational value(parse_integer());
    if (peek() == '.') {
      ++pos_;
      std::size_t start = pos_;
      Integer frac = parse_integer();
      Integer scale = 1;
      for (std::size_t i = start; i < pos_; ++i) scale *= 10;
      value += Rational(frac) / Rational(scale);
    }
    if (peek() == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      Integer den = parse_integer();
      if (den == 0) fail("zero denominator");
      value /= Rational(den);
    }
    return value;
  }

  Rational parse_signed_fraction() {
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    Rational value(parse_integer());
    if (peek() == '/') {
      ++pos_;
      Integer den = parse_integer();
      if (den == 0) fail("zero denominator");
      value /= Rational(den);
    }
    skip_space();
    return negative ? Rational(-value) : value;
  }

  Rational parse_exponent() {
    if (peek() == '(' || peek() == '{') {
      char close = peek() == '(' ? ')' : '}';
      ++pos_;
      Rational e = parse_signed_fraction();
      if (peek() != close) fail(std::string("expected '") + close + "'");
      ++pos_;
      return e;
    }
    if (peek() == '-') {
      ++pos_;
      return Rational(-parse_integer());
    }
    return Rational(parse_integer());
  }

  std::string parse_identifier() {
    std::size_t start = pos_;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int parse_generator_power() {
    if (peek() != '^') return 1;
    ++pos_;
    Integer k = parse_integer();
    if (k < 1 || k > 64) fail("generator power out of range");
    return k.convert_to<int>();
  }

  void parse_factor(Term& term) {
    skip_space();
    if (done()) fail("expected factor");
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '(') {
      Rational value;
      if (ch == '(') {
        ++pos_;
        skip_space();
        value = parse_number();
        skip_space();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        value = parse_number();
      }
      if (peek() == '^') {
        ++pos_;
        if (value <= 0) fail("only positive numbers may carry exponents");
        term.coeff *= Scalar::power_of(value, parse_exponent());
      } else {
        term.coeff *= Scalar(GaussianRational(value));
      }
      return;
    }
    if (!(std::isalpha(static_cast<unsigned char>(ch)) || ch == '_')) {
      fail(std::string("unexpected '") + ch + "'");
    }
    std::string ident = parse_identifier();
    std::optional<Generator> g;
    if (ident == "a") {
      if (peek() == '+') {
        ++pos_;
        g = Generator::Create;
      } else if (starts_with("†")) {
        pos_ += std::string_view("†").size();
        g = Generator::Create;
      } else {
        g = Generator::Annihilate;
      }
    } else if (ident == "adag") {
      g = Generator::Create;
    } else if (ident == "L0") {
      g = Generator::Zero;
    } else if (ident == "L" && (peek() == '+' || peek() == '-')) {
      g = peek() == '+' ? Generator::Raise : Generator::Lower;
      ++pos_;
    }
    if (g) {
      term.word.insert(term.word.end(), parse_generator_power(), *g);
      return;
    }
    if (ident == "i") {
      term.coeff *= Scalar(GaussianRational::i());
      return;
    }
    Rational e(1);
    if (peek() == '^') {
      ++pos_;
      e = parse_exponent();
    }
    term.coeff *= Scalar::param(ident, e);
  }

  Term parse_term() {
    Term term;
    skip_space();
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') term.coeff = -term.coeff;
      ++pos_;
      skip_space();
    }
    parse_factor(term);
    skip_space();
    while (peek() == '*') {
      ++pos_;
      parse_factor(term);
      skip_space();
    }
    return term;
  }

  std::string_view text_;
  SourcePos at_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string display_name(const std::string& symbol) {
  auto it = display_names().find(symbol);
  return it != display_names().end() ? it->second : symbol;
}

std::string format_rational(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

std::string to_text(const Scalar& s) {
  bool negative = false;
  std::string out = coefficient_text(s.coeff(), !s.powers().empty(), negative);
  for (const auto& [name, e] : s.powers()) {
    out += (out.empty() ? "" : "·") + text_power(name, e);
  }
  return (negative ? std::string(kMinus) : std::string()) + out;
}

std::string to_text(const OperatorExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, sum] : expr.terms()) {
    for (const auto& [powers, c] : sum.terms()) {
      bool negative = false;
      std::string term = coefficient_text(c, true, negative);
      for (const auto& [name, e] : powers) {
        term += (term.empty() ? "" : "·") + text_power(name, e);
      }
      term += (term.empty() ? "" : "·") + monomial_text(expr.algebra(), w);
      if (first) {
        out += (negative ? kMinus : "") + term;
      } else {
        out += std::string(negative ? " " : " + ") + (negative ? std::string(kMinus) + " " : "") + term;
      }
      first = false;
    }
  }
  return out;
}

std::string to_latex(const OperatorExpr& expr) {
  if (expr.is_zero()) return "\\hat{0}";
  std::string out;
  bool first = true;
  for (const auto& [w, sum] : expr.terms()) {
    std::string ops = monomial_latex(expr.algebra(), w);
    if (sum.size() == 1) {
      const auto& [powers, c] = *sum.terms().begin();
      bool negative = false;
      std::string s = scalar_latex(c, powers, negative);
      if (s == "1" && !w.is_identity()) s.clear();
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      out += s.empty() ? ops : s + " " + ops;
    } else {
      std::string inner;
      bool inner_first = true;
      // Leading powers first, so a series in 1/κ reads in its natural order.
      std::vector<std::pair<const ParamPowers*, const GaussianRational*>> ordered;
      for (const auto& [powers, c] : sum.terms()) ordered.emplace_back(&powers, &c);
      std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        Rational dx = 0, dy = 0;
        for (const auto& [name, e] : *x.first) dx += e;
        for (const auto& [name, e] : *y.first) dy += e;
        return dx > dy;
      });
      for (const auto& [powers_ptr, c_ptr] : ordered) {
        const ParamPowers& powers = *powers_ptr;
        const GaussianRational& c = *c_ptr;
        bool negative = false;
        std::string s = scalar_latex(c, powers, negative);
        inner += inner_first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        inner += s;
        inner_first = false;
      }
      out += first ? "" : " + ";
      out += "\\left(" + inner + "\\right) " + ops;
    }
    first = false;
  }
  return out;
}

nlohmann::json to_json(const OperatorExpr& expr) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, sum] : expr.terms()) {
    for (const auto& [powers, c] : sum.terms()) {
      nlohmann::json params = nlohmann::json::object();
      for (const auto& [name, e] : powers) params[name] = format_rational(e);
      nlohmann::json term;
      term["powers"] = expr.algebra() == Algebra::Hw
                           ? nlohmann::json::array({w.raising, w.lowering})
                           : nlohmann::json::array({w.raising, w.middle, w.lowering});
      term["re"] = format_rational(c.re);
      term["im"] = format_rational(c.im);
      term["params"] = std::move(params);
      terms.push_back(std::move(term));
    }
  }
  return {{"algebra", to_string(expr.algebra())}, {"terms", std::move(terms)}};
}

OperatorExpr operator_from_json(const nlohmann::json& j) {
  try {
    Algebra algebra = parse_algebra(j.at("algebra").get<std::string>());
    OperatorExpr out(algebra);
    for (const auto& term : j.at("terms")) {
      const auto& p = term.at("powers");
      Monomial w;
      if (algebra == Algebra::Hw) {
        if (p.size() != 2) throw ParseError("hw powers need 2 entries");
        w = {p[0].get<int>(), 0, p[1].get<int>()};
      } else {
        if (p.size() != 3) throw ParseError("su2 powers need 3 entries");
        w = {p[0].get<int>(), p[1].get<int>(), p[2].get<int>()};
      }
      if (w.raising < 0 || w.middle < 0 || w.lowering < 0) throw ParseError("negative power");
      GaussianRational c(parse_rational(term.at("re").get<std::string>()),
                         parse_rational(term.at("im").get<std::string>()));
      Scalar s(c);
      for (const auto& [name, e] : term.at("params").items()) {
        s *= Scalar::param(name, parse_rational(e.get<std::string>()));
      }
      out.add_term(w, ScalarSum(s));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad operator json: ") + e.what());
  }
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(Integer(s.substr(0, slash))) / Rational(den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational: '" + s + "'");
  }
}

Scalar parse_scalar(std::string_view text, SourcePos at) {
  auto terms = TermParser(text, at).parse_terms();
  if (terms.size() != 1) throw ParseError("expected a single scalar term", at.line, at.column);
  if (!terms.front().word.empty()) {
    throw ParseError("operator generators are not allowed in a scalar", at.line, at.column);
  }
  return terms.front().coeff;
}

ScalarSum parse_scalar_sum(std::string_view text, SourcePos at) {
  ScalarSum out;
  for (const auto& term : TermParser(text, at).parse_terms()) {
    if (!term.word.empty()) {
      throw ParseError("operator generators are not allowed in a scalar", at.line, at.column);
    }
    out += ScalarSum(term.coeff);
  }
  return out;
}

OperatorExpr parse_operator(Algebra algebra, std::string_view text, SourcePos at) {
  OperatorExpr out(algebra);
  for (const auto& term : TermParser(text, at).parse_terms()) {
    try {
      out += normal_order(algebra, term.coeff, term.word);
    } catch (const AlgebraMismatch& e) {
      throw ParseError(std::string(e.what()) + " (expected " + to_string(algebra) + ")",
                       at.line, at.column);
    }
  }
  return out;
}

Algebra parse_algebra(std::string_view text) {
  if (text == "hw") return Algebra::Hw;
  if (text == "su2") return Algebra::Su2;
  throw ParseError("unknown algebra '" + std::string(text) + "' (expected hw or su2)");
}

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(line > 0 ? what + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)
                     : what),
      line_(line),
      column_(column) {}

}  // namespace oppert
