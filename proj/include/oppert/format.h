#pragma once

// Rendering and parsing of scalars and operator expressions.
//
// Text form (Unicode, one term per summand, canonical order):
//     −(1/2)·e²·𝓔²·m⁻¹·ω₀⁻²·1
//     (1/2)·ħ⁻¹·κ⁻¹·u·L₊ − (1/2)·ħ⁻¹·κ⁻¹·u*·L₋
//
// Input term syntax (config files, --params values excluded):
//     term   := [+|-] factor ('*' factor)*
//     factor := rational | decimal | 'i' | symbol ['^' exp] | int '^' exp
//             | generator ['^' int]
//     exp    := int | '-' int | '(' [-]int['/'int] ')' | '{' [-]int['/'int] '}'
//     generator := a+ | adag | a | L+ | L0 | L-
// Terms are comma separated. Generators keep their written order and are
// normal ordered on parse; all other factors commute.

#include <string>
#include <string_view>

#include <json.hpp>

#include "oppert/algebra.h"

namespace oppert {

std::string display_name(const std::string& symbol);
std::string format_rational(const Rational& q);

std::string to_text(const Scalar& s);
std::string to_text(const OperatorExpr& expr);
std::string to_latex(const OperatorExpr& expr);

nlohmann::json to_json(const OperatorExpr& expr);
OperatorExpr operator_from_json(const nlohmann::json& j);

/// Position of a fragment inside a larger document, for error reporting.
struct SourcePos {
  int line = 1;
  int column = 1;
};

Rational parse_rational(std::string_view text);
Scalar parse_scalar(std::string_view text, SourcePos at = {});
ScalarSum parse_scalar_sum(std::string_view text, SourcePos at = {});
OperatorExpr parse_operator(Algebra algebra, std::string_view text, SourcePos at = {});
Algebra parse_algebra(std::string_view text);

}  // namespace oppert
