#pragma once

// Exact c-number coefficients.
//
// A Scalar is c * prod_i s_i^{e_i}: c is a Gaussian rational and the s_i are
// named parameters (hbar, kappa, ...) or primes, each raised to a rational
// exponent. Prime bases only ever carry exponents in (0, 1); the integer part
// is folded into c, so sqrt(hbar / 2) is stored as (1/2) * 2^{1/2} * hbar^{1/2}.
//
// The symbol "u" is unimodular: u * u_conj = 1, so u^a u_conj^b collapses to a
// single power of whichever dominates.

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace oppert {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(int real) : re(real) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  std::complex<double> to_complex() const;
};

/// Symbol -> exponent with no zero exponents. Prime bases are spelled as
/// decimal strings ("2", "3"); parameter names start with a letter.
using ParamPowers = std::map<std::string, Rational>;

bool is_prime_base(std::string_view symbol);

/// Named numeric values for parameters. Unimodular partners (u_conj) default
/// to the conjugate of their partner when not given.
using ParamValues = std::map<std::string, std::complex<double>>;

class Scalar {
 public:
  Scalar() = default;
  Scalar(GaussianRational coeff);
  Scalar(GaussianRational coeff, ParamPowers powers);
  Scalar(int value) : Scalar(GaussianRational(value)) {}

  static Scalar param(const std::string& name, const Rational& exponent = 1);
  /// value^exponent for a positive rational value, factored over primes.
  static Scalar power_of(const Rational& value, const Rational& exponent);

  const GaussianRational& coeff() const { return coeff_; }
  const ParamPowers& powers() const { return powers_; }
  bool is_zero() const { return coeff_.is_zero(); }

  Scalar conj() const;
  Scalar reciprocal() const;
  Scalar operator-() const;
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::complex<double> evaluate(const ParamValues& values) const;

 private:
  void canonicalize();

  GaussianRational coeff_;
  ParamPowers powers_;
};

/// Finite sum of Scalars with distinct parameter powers.
class ScalarSum {
 public:
  ScalarSum() = default;
  ScalarSum(const Scalar& s);

  const std::map<ParamPowers, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ScalarSum& operator+=(const ScalarSum& o);
  ScalarSum& operator-=(const ScalarSum& o);
  ScalarSum& operator*=(const ScalarSum& o);
  ScalarSum& operator*=(const Scalar& s);
  ScalarSum operator-() const;
  friend ScalarSum operator+(ScalarSum a, const ScalarSum& b) { return a += b; }
  friend ScalarSum operator-(ScalarSum a, const ScalarSum& b) { return a -= b; }
  friend ScalarSum operator*(ScalarSum a, const ScalarSum& b) { return a *= b; }
  friend ScalarSum operator*(ScalarSum a, const Scalar& b) { return a *= b; }
  friend bool operator==(const ScalarSum&, const ScalarSum&) = default;

  ScalarSum conj() const;
  std::complex<double> evaluate(const ParamValues& values) const;

 private:
  void add(const ParamPowers& powers, const GaussianRational& coeff);

  std::map<ParamPowers, GaussianRational> terms_;
};

std::complex<double> lookup_value(const ParamValues& values, const std::string& name);

}  // namespace oppert
