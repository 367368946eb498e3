#include "oppert/scalar.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "oppert/errors.h"

namespace oppert {

namespace {

// Complex unit-modulus symbols and their conjugate spellings.
struct UnimodularPair {
  const char* symbol;
  const char* conjugate;
};
constexpr UnimodularPair kUnimodular[] = {{"u", "u_conj"}};

Integer floor_of(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer result = num / den;
  if (num % den != 0 && num < 0) result -= 1;
  return result;
}

Rational int_power(const Rational& base, Integer exponent) {
  Rational result(1);
  Rational factor = base;
  if (exponent < 0) {
    factor = Rational(1) / base;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if ((exponent & 1) != 0) result *= factor;
    factor *= factor;
    exponent >>= 1;
  }
  return result;
}

std::map<Integer, int> factorize(Integer n) {
  std::map<Integer, int> out;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::string conjugate_symbol(const std::string& name) {
  for (const auto& pair : kUnimodular) {
    if (name == pair.symbol) return pair.conjugate;
    if (name == pair.conjugate) return pair.symbol;
  }
  return name;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (norm == 0) throw Error("division by zero coefficient");
  *this *= o.conj();
  re /= norm;
  im /= norm;
  return *this;
}

std::complex<double> GaussianRational::to_complex() const {
  return {to_double(re), to_double(im)};
}

bool is_prime_base(std::string_view symbol) {
  return !symbol.empty() && std::isdigit(static_cast<unsigned char>(symbol.front()));
}

Scalar::Scalar(GaussianRational coeff) : coeff_(std::move(coeff)) {}

Scalar::Scalar(GaussianRational coeff, ParamPowers powers)
    : coeff_(std::move(coeff)), powers_(std::move(powers)) {
  canonicalize();
}

Scalar Scalar::param(const std::string& name, const Rational& exponent) {
  if (is_prime_base(name)) {
    return power_of(Rational(Integer(name)), exponent);
  }
  return Scalar(GaussianRational(1), ParamPowers{{name, exponent}});
}

Scalar Scalar::power_of(const Rational& value, const Rational& exponent) {
  if (value <= 0) throw Error("power_of requires a positive base");
  ParamPowers powers;
  for (const auto& [p, k] : factorize(boost::multiprecision::numerator(value))) {
    powers[p.str()] += exponent * k;
  }
  for (const auto& [p, k] : factorize(boost::multiprecision::denominator(value))) {
    powers[p.str()] -= exponent * k;
  }
  return Scalar(GaussianRational(1), std::move(powers));
}

void Scalar::canonicalize() {
  if (coeff_.is_zero()) {
    powers_.clear();
    return;
  }
  for (const auto& pair : kUnimodular) {
    auto a = powers_.find(pair.symbol);
    auto b = powers_.find(pair.conjugate);
    if (a == powers_.end() || b == powers_.end()) continue;
    Rational net = a->second - b->second;
    a->second = net > 0 ? net : Rational(0);
    b->second = net < 0 ? Rational(-net) : Rational(0);
  }
  for (auto it = powers_.begin(); it != powers_.end();) {
    if (is_prime_base(it->first)) {
      Integer whole = floor_of(it->second);
      if (whole != 0) {
        coeff_ *= GaussianRational(int_power(Rational(Integer(it->first)), whole));
        it->second -= whole;
      }
    }
    if (it->second == 0) {
      it = powers_.erase(it);
    } else {
      ++it;
    }
  }
}

Scalar Scalar::conj() const {
  ParamPowers swapped;
  for (const auto& [name, e] : powers_) swapped[conjugate_symbol(name)] += e;
  return Scalar(coeff_.conj(), std::move(swapped));
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw Error("reciprocal of zero scalar");
  ParamPowers inverted;
  for (const auto& [name, e] : powers_) inverted[name] = -e;
  return Scalar(GaussianRational(1) / coeff_, std::move(inverted));
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.coeff_ = -out.coeff_;
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  coeff_ *= o.coeff_;
  for (const auto& [name, e] : o.powers_) powers_[name] += e;
  canonicalize();
  return *this;
}

std::complex<double> lookup_value(const ParamValues& values, const std::string& name) {
  if (auto it = values.find(name); it != values.end()) return it->second;
  for (const auto& pair : kUnimodular) {
    if (name == pair.conjugate) {
      if (auto it = values.find(pair.symbol); it != values.end()) return std::conj(it->second);
    }
  }
  throw MissingValue(name);
}

std::complex<double> Scalar::evaluate(const ParamValues& values) const {
  std::complex<double> result = coeff_.to_complex();
  if (coeff_.is_zero()) return result;
  for (const auto& [name, e] : powers_) {
    if (is_prime_base(name)) {
      result *= std::pow(std::stod(name), to_double(e));
      continue;
    }
    std::complex<double> base = lookup_value(values, name);
    if (boost::multiprecision::denominator(e) == 1) {
      result *= std::pow(base, boost::multiprecision::numerator(e).convert_to<int>());
    } else {
      result *= std::pow(base, to_double(e));
    }
  }
  return result;
}

ScalarSum::ScalarSum(const Scalar& s) {
  if (!s.is_zero()) terms_.emplace(s.powers(), s.coeff());
}

void ScalarSum::add(const ParamPowers& powers, const GaussianRational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(powers, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarSum& ScalarSum::operator+=(const ScalarSum& o) {
  for (const auto& [powers, c] : o.terms_) add(powers, c);
  return *this;
}

ScalarSum& ScalarSum::operator-=(const ScalarSum& o) {
  for (const auto& [powers, c] : o.terms_) add(powers, -c);
  return *this;
}

ScalarSum& ScalarSum::operator*=(const Scalar& s) {
  ScalarSum out;
  for (const auto& [powers, c] : terms_) {
    Scalar product = Scalar(c, powers) * s;
    out.add(product.powers(), product.coeff());
  }
  *this = std::move(out);
  return *this;
}

ScalarSum& ScalarSum::operator*=(const ScalarSum& o) {
  ScalarSum out;
  for (const auto& [pa, ca] : terms_) {
    for (const auto& [pb, cb] : o.terms_) {
      Scalar product = Scalar(ca, pa) * Scalar(cb, pb);
      out.add(product.powers(), product.coeff());
    }
  }
  *this = std::move(out);
  return *this;
}

ScalarSum ScalarSum::operator-() const {
  ScalarSum out;
  for (const auto& [powers, c] : terms_) out.terms_.emplace(powers, -c);
  return out;
}

ScalarSum ScalarSum::conj() const {
  ScalarSum out;
  for (const auto& [powers, c] : terms_) {
    Scalar s = Scalar(c, powers).conj();
    out.add(s.powers(), s.coeff());
  }
  return out;
}

std::complex<double> ScalarSum::evaluate(const ParamValues& values) const {
  std::complex<double> total{0.0, 0.0};
  for (const auto& [powers, c] : terms_) total += Scalar(c, powers).evaluate(values);
  return total;
}

}  // namespace oppert
