#include "oppert/algebra.h"

#include <algorithm>

#include "oppert/errors.h"

namespace oppert {

namespace {

const Scalar& hbar() {
  static const Scalar h = Scalar::param("hbar");
  return h;
}

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Appends term * g (right multiplication by a single generator) to out.
void multiply_generator(const Monomial& w, const ScalarSum& c, Generator g, OperatorExpr& out) {
  switch (g) {
    case Generator::Annihilate:
      out.add_term({w.raising, 0, w.lowering + 1}, c);
      return;
    case Generator::Create:
      // a†^m a^n a† = a†^{m+1} a^n + n a†^m a^{n-1}
      out.add_term({w.raising + 1, 0, w.lowering}, c);
      if (w.lowering > 0) out.add_term({w.raising, 0, w.lowering - 1}, c * Scalar(w.lowering));
      return;
    case Generator::Lower:
      out.add_term({w.raising, w.middle, w.lowering + 1}, c);
      return;
    case Generator::Zero: {
      // L-^n L0 = (L0 + nħ) L-^n
      out.add_term({w.raising, w.middle + 1, w.lowering}, c);
      if (w.lowering > 0) {
        out.add_term({w.raising, w.middle, w.lowering}, c * (Scalar(w.lowering) * hbar()));
      }
      return;
    }
    case Generator::Raise: {
      // L0^p L+ = L+ (L0 + ħ)^p
      // L-^n L+ = L+ L-^n - 2nħ L0 L-^{n-1} - n(n-1)ħ² L-^{n-1}
      const int p = w.middle;
      const int n = w.lowering;
      Scalar hk(1);
      for (int k = 0; k <= p; ++k) {
        out.add_term({w.raising + 1, p - k, n}, c * (Scalar(GaussianRational(binomial(p, k))) * hk));
        hk *= hbar();
      }
      if (n > 0) {
        out.add_term({w.raising, p + 1, n - 1}, c * (Scalar(-2 * n) * hbar()));
        if (n > 1) {
          out.add_term({w.raising, p, n - 1}, c * (Scalar(-n * (n - 1)) * hbar() * hbar()));
        }
      }
      return;
    }
  }
}

OperatorExpr multiply_generator(const OperatorExpr& expr, Generator g) {
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) multiply_generator(w, c, g, out);
  return out;
}

}  // namespace

std::string to_string(Algebra algebra) { return algebra == Algebra::Hw ? "hw" : "su2"; }

Algebra algebra_of(Generator g) {
  return (g == Generator::Create || g == Generator::Annihilate) ? Algebra::Hw : Algebra::Su2;
}

Generator dagger(Generator g) {
  switch (g) {
    case Generator::Create: return Generator::Annihilate;
    case Generator::Annihilate: return Generator::Create;
    case Generator::Raise: return Generator::Lower;
    case Generator::Lower: return Generator::Raise;
    case Generator::Zero: return Generator::Zero;
  }
  return g;
}

OperatorExpr::OperatorExpr(Algebra algebra, const Monomial& monomial, const ScalarSum& coeff)
    : algebra_(algebra) {
  add_term(monomial, coeff);
}

OperatorExpr OperatorExpr::identity(Algebra algebra, const ScalarSum& coeff) {
  return OperatorExpr(algebra, Monomial{}, coeff);
}

OperatorExpr OperatorExpr::generator(Generator g, const Scalar& coeff) {
  return normal_order(coeff, std::span<const Generator>(&g, 1));
}

std::size_t OperatorExpr::term_count() const {
  std::size_t n = 0;
  for (const auto& [w, c] : terms_) n += c.size();
  return n;
}

ScalarSum OperatorExpr::coefficient(const Monomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? ScalarSum{} : it->second;
}

int OperatorExpr::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

int OperatorExpr::max_ladder_power() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max({d, w.raising, w.lowering});
  return d;
}

void OperatorExpr::add_term(const Monomial& monomial, const ScalarSum& coeff) {
  if (algebra_ == Algebra::Hw && monomial.middle != 0) {
    throw AlgebraMismatch("Heisenberg-Weyl monomials have no middle generator");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void OperatorExpr::check_same_algebra(const OperatorExpr& o) const {
  if (algebra_ != o.algebra_) {
    throw AlgebraMismatch("cannot combine " + to_string(algebra_) + " and " +
                          to_string(o.algebra_) + " expressions");
  }
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  check_same_algebra(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) {
  check_same_algebra(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

OperatorExpr& OperatorExpr::operator*=(const ScalarSum& s) {
  TermMap scaled;
  for (const auto& [w, c] : terms_) {
    ScalarSum product = c * s;
    if (!product.is_zero()) scaled.emplace(w, std::move(product));
  }
  terms_ = std::move(scaled);
  return *this;
}

OperatorExpr OperatorExpr::operator-() const {
  OperatorExpr out(algebra_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

std::vector<Generator> word_of(Algebra algebra, const Monomial& monomial) {
  std::vector<Generator> word;
  const bool hw = algebra == Algebra::Hw;
  word.insert(word.end(), monomial.raising, hw ? Generator::Create : Generator::Raise);
  word.insert(word.end(), monomial.middle, Generator::Zero);
  word.insert(word.end(), monomial.lowering, hw ? Generator::Annihilate : Generator::Lower);
  return word;
}

OperatorExpr normal_order(Algebra algebra, const Scalar& coeff, std::span<const Generator> word) {
  for (Generator g : word) {
    if (algebra_of(g) != algebra) {
      throw AlgebraMismatch("generator word mixes algebras");
    }
  }
  OperatorExpr result = OperatorExpr::identity(algebra, coeff);
  for (Generator g : word) result = multiply_generator(result, g);
  return result;
}

OperatorExpr normal_order(const Scalar& coeff, std::span<const Generator> word) {
  if (word.empty()) {
    throw AlgebraMismatch("empty word does not determine an algebra");
  }
  return normal_order(algebra_of(word.front()), coeff, word);
}

OperatorExpr multiply(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  if (lhs.algebra() != rhs.algebra()) {
    throw AlgebraMismatch("cannot multiply " + to_string(lhs.algebra()) + " by " +
                          to_string(rhs.algebra()));
  }
  OperatorExpr result(lhs.algebra());
  for (const auto& [w, c] : rhs.terms()) {
    OperatorExpr partial = lhs;
    for (Generator g : word_of(rhs.algebra(), w)) partial = multiply_generator(partial, g);
    result += partial * c;
  }
  return result;
}

OperatorExpr commutator(const OperatorExpr& lhs, const OperatorExpr& rhs) {
  return multiply(lhs, rhs) - multiply(rhs, lhs);
}

OperatorExpr adjoint(const OperatorExpr& expr) {
  // (L+^m L0^p L-^n)† = L+^n L0^p L-^m is already normal ordered.
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) {
    out.add_term({w.lowering, w.middle, w.raising}, c.conj());
  }
  return out;
}

OperatorExpr simplify(const OperatorExpr& expr) {
  OperatorExpr out(expr.algebra());
  for (const auto& [w, c] : expr.terms()) {
    ScalarSum merged;
    for (const auto& [powers, coeff] : c.terms()) merged += ScalarSum(Scalar(coeff, powers));
    out.add_term(w, merged);
  }
  return out;
}

}  // namespace oppert
