#pragma once

#include "contractad/qpoly.hpp"

#include <string>
#include <vector>

namespace contractad {

enum class SeriesVar { t, z };

// Truncated power series sum_{k<=N} c_k x^k with QPoly coefficients.  Binary
// operations on operands of different orders truncate to the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(int order, SeriesVar var = SeriesVar::t);
  PowerSeries(std::vector<QPoly> coeffs, int order, SeriesVar var = SeriesVar::t);

  static PowerSeries variable(int order, SeriesVar var = SeriesVar::t);
  static PowerSeries constant(const QPoly& c, int order, SeriesVar var = SeriesVar::t);
  // c * x^k
  static PowerSeries monomial(const QPoly& c, int k, int order, SeriesVar var = SeriesVar::t);

  int order() const { return order_; }
  SeriesVar var() const { return var_; }
  const QPoly& operator[](int k) const { return c_.at(k); }
  QPoly& operator[](int k) { return c_.at(k); }
  const std::vector<QPoly>& coeffs() const { return c_; }

  PowerSeries truncate(int order) const;
  bool is_integral() const;

  PowerSeries operator-() const;
  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const QPoly& c, const PowerSeries& a);
  friend PowerSeries operator*(const PowerSeries& a, const QPoly& c) { return c * a; }
  // Compares up to the common order.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);
  friend bool operator!=(const PowerSeries& a, const PowerSeries& b) { return !(a == b); }

  // Every coefficient divided exactly by d; throws std::logic_error otherwise.
  PowerSeries divide_coeffs(const QPoly& d, const char* what) const;
  // Divides by x^k.  The top k coefficients become unknown, so the order drops by k.
  PowerSeries shift_down(int k) const;
  // 1/f, the constant term must be a non-zero rational.
  PowerSeries reciprocal() const;
  // Multiplies the k-th coefficient by w[k].
  PowerSeries hadamard(const std::vector<Rational>& w) const;

  std::string to_string() const;

 private:
  SeriesVar var_;
  int order_;
  std::vector<QPoly> c_;
};

// f(g(x)).  g must have zero constant term.
PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g);
// Compositional inverse.  f(0)=0 and f'(0)=1 are required; the result is
// checked against both f(g)=x and g(f)=x before returning.
PowerSeries series_reverse(const PowerSeries& f);

enum class Transcendental { exp, log1p, pow_param, scaled_arcsinh, scaled_artanh };

// exp(f); log(1+f); (1+f)^alpha = sum_k binom(alpha,k) f^k;
// (1/s) arcsinh(s f) and (1/s) artanh(s f) with s = q^{1/2}, expanded so that
// only integer powers of q appear.  All kinds require f(0) = 0.
PowerSeries series_transcendental(Transcendental kind, const PowerSeries& f,
                                  const QPoly& alpha = QPoly());

PowerSeries series_exp(const PowerSeries& f);
PowerSeries series_log1p(const PowerSeries& f);
PowerSeries series_pow_param(const PowerSeries& f, const QPoly& alpha);
PowerSeries series_scaled_arcsinh(const PowerSeries& f);
PowerSeries series_scaled_artanh(const PowerSeries& f);

// Taylor coefficients of arcsinh: (-1)^k (2k)! / (4^k (k!)^2 (2k+1)).
Rational arcsinh_coefficient(unsigned k);

}  // namespace contractad
