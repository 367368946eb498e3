#pragma once

// Operator expressions over a single ladder algebra, kept in normal order.
//
//   Hw  (Heisenberg-Weyl): generators a†, a with [a, a†] = 1.
//   Su2 (angular momentum, spherical basis): L+, L0, L- with
//       [L0, L±] = ±ħ L±,  [L+, L-] = 2ħ L0.
//
// Normal order is a†^m a^n for Hw and L+^m L0^p L-^n for Su2. Every
// OperatorExpr is canonical: structural equality is operator equality.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "oppert/scalar.h"

namespace oppert {

enum class Algebra { Hw, Su2 };

std::string to_string(Algebra algebra);

enum class Generator { Create, Annihilate, Raise, Zero, Lower };

Algebra algebra_of(Generator g);
Generator dagger(Generator g);

/// Powers of a normal-ordered word. Hw uses (raising, lowering) with middle = 0.
struct Monomial {
  int raising = 0;
  int middle = 0;
  int lowering = 0;

  bool is_identity() const { return raising == 0 && middle == 0 && lowering == 0; }
  /// Net shift of the grading operator's eigenvalue (m - n).
  int shift() const { return raising - lowering; }
  int degree() const { return raising + middle + lowering; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class OperatorExpr {
 public:
  using TermMap = std::map<Monomial, ScalarSum>;

  explicit OperatorExpr(Algebra algebra) : algebra_(algebra) {}
  OperatorExpr(Algebra algebra, const Monomial& monomial, const ScalarSum& coeff);

  static OperatorExpr identity(Algebra algebra, const ScalarSum& coeff = Scalar(1));
  static OperatorExpr generator(Generator g, const Scalar& coeff = Scalar(1));

  Algebra algebra() const { return algebra_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of (monomial, parameter-power) terms.
  std::size_t term_count() const;
  /// Coefficient of a monomial; zero if absent.
  ScalarSum coefficient(const Monomial& monomial) const;
  int max_degree() const;
  int max_ladder_power() const;

  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr& operator*=(const ScalarSum& s);
  OperatorExpr operator-() const;

  friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
  friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
  friend OperatorExpr operator*(OperatorExpr a, const ScalarSum& s) { return a *= s; }
  friend OperatorExpr operator*(const ScalarSum& s, OperatorExpr a) { return a *= s; }
  friend OperatorExpr operator*(OperatorExpr a, const Scalar& s) { return a *= ScalarSum(s); }
  friend OperatorExpr operator*(const Scalar& s, OperatorExpr a) { return a *= ScalarSum(s); }
  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

  void add_term(const Monomial& monomial, const ScalarSum& coeff);

 private:
  void check_same_algebra(const OperatorExpr& o) const;

  Algebra algebra_;
  TermMap terms_;
};

/// Canonical form of coeff * g1 g2 ... gk.
OperatorExpr normal_order(const Scalar& coeff, std::span<const Generator> word);
OperatorExpr normal_order(Algebra algebra, const Scalar& coeff, std::span<const Generator> word);

OperatorExpr multiply(const OperatorExpr& lhs, const OperatorExpr& rhs);
OperatorExpr commutator(const OperatorExpr& lhs, const OperatorExpr& rhs);
OperatorExpr adjoint(const OperatorExpr& expr);
/// Re-canonicalizes; a no-op on values built through this API.
OperatorExpr simplify(const OperatorExpr& expr);

/// Generator word of a monomial in normal order.
std::vector<Generator> word_of(Algebra algebra, const Monomial& monomial);

}  // namespace oppert
