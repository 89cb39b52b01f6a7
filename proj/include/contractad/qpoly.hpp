#pragma once

#include "contractad/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace contractad {

// Polynomial in s = q^{1/2} with rational coefficients.  Exponents are stored
// in half units, so q^k lives at index 2k.  Trailing zeros are never stored;
// terms() exposes the sparse view.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  QPoly(const Rational& c);  // NOLINT

  static QPoly q();
  static QPoly q_pow(unsigned k);
  static QPoly half_pow(unsigned half_exp);
  static QPoly monomial(const Rational& c, unsigned half_exp);
  static QPoly from_terms(const std::map<unsigned, Rational>& half_terms);
  // 1 + q + ... + q^{k-1}
  static QPoly q_integer(unsigned k);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int half_degree() const { return static_cast<int>(c_.size()) - 1; }
  // requires is_integral()
  int degree() const;
  bool is_integral() const;
  bool is_constant() const { return c_.size() <= 1; }
  std::optional<Rational> constant_value() const;

  Rational half_coeff(unsigned half_exp) const;
  Rational coeff(unsigned exp) const { return half_coeff(2 * exp); }
  std::map<unsigned, Rational> terms() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& c);
  QPoly& operator/=(const Rational& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator/(QPoly a, const Rational& c) { return a /= c; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly pow(unsigned e) const;

  // Evaluation at a rational value of q.  Requires integral exponents.
  Rational eval(const Rational& at) const;
  // q -> c*q (integral exponents only)
  QPoly scale_q(const Rational& c) const;
  // Substitutes another polynomial for q (integral exponents only).
  QPoly substitute(const QPoly& value) const;

  // Exact division; nullopt when the remainder is non-zero.
  std::optional<QPoly> divide_exact(const QPoly& d) const;
  // Exact division that throws std::logic_error on a non-zero remainder.
  QPoly divide_or_throw(const QPoly& d, const char* what) const;

  bool is_palindromic(int degree) const;

  // "1 + 5*q + q^2", "-1/2*q^(3/2)"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// Parses the format produced by QPoly::to_string.
QPoly parse_qpoly(const std::string& text);

}  // namespace contractad
