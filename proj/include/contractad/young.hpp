#pragma once

#include "contractad/hilbert.hpp"
#include "contractad/power_series.hpp"
#include "contractad/symfunc.hpp"

#include <string>
#include <vector>

namespace contractad {

// Element of Lambda[[z]] truncated by total degree: the term z^n m_la is kept
// when n + |la| <= D.  Coefficients are plain monomial coefficients, so the
// graphic value f(K_{(1^n) u la}) sits at n! la! coeff(n, la).
class YoungSeries {
 public:
  explicit YoungSeries(int D);
  static YoungSeries z(int D);
  static YoungSeries constant(const SymFunc& s, int D);

  int bound() const { return D_; }
  const SymFunc& zcoeff(int n) const { return c_.at(n); }
  void set_zcoeff(int n, const SymFunc& s);
  QPoly coeff(int n, const YoungDiagram& la) const { return c_.at(n).coeff(la); }
  void add(int n, const YoungDiagram& la, const QPoly& v);
  QPoly graphic_value(int n, const YoungDiagram& la) const;
  bool has_constant_term() const { return !c_[0].coeff({}).is_zero(); }

  YoungSeries truncate(int D) const;
  // x_i -> c x_i
  YoungSeries scale_variables(const QPoly& c) const;

  YoungSeries operator-() const;
  YoungSeries& operator+=(const YoungSeries& o);
  YoungSeries& operator-=(const YoungSeries& o);
  friend YoungSeries operator+(YoungSeries a, const YoungSeries& b) { return a += b; }
  friend YoungSeries operator-(YoungSeries a, const YoungSeries& b) { return a -= b; }
  friend YoungSeries operator*(const YoungSeries& a, const YoungSeries& b);
  friend YoungSeries operator*(const QPoly& c, const YoungSeries& a);
  friend bool operator==(const YoungSeries& a, const YoungSeries& b);
  friend bool operator!=(const YoungSeries& a, const YoungSeries& b) { return !(a == b); }

  // Every coefficient divided exactly by d.
  YoungSeries divide_coeffs(const QPoly& d, const char* what) const;

  std::string to_string() const;

 private:
  int D_;
  std::vector<SymFunc> c_;  // c_[n] has degree bound D - n
};

// F_Y(f) = sum f(K_{(1^n) u la}) z^n/n! m_la/la!, omitting n = 0 with l(la) <= 1.
YoungSeries young_of_graphic(const QFunction& f, int D);

// F(G(z)); G must have no constant term.
YoungSeries young_compose(const YoungSeries& F, const YoungSeries& G);
// H with F(H) = H(F) = z; F must be z plus terms of total degree >= 2.
YoungSeries young_reverse(const YoungSeries& F);
// kernel(F) for a univariate kernel series sum k_j x^j; F without constant term.
YoungSeries young_apply(const PowerSeries& kernel, const YoungSeries& F);

// z + sum_{n>=1} p_n/n!
YoungSeries young_z_plus_exp_p(int D);

enum class YoungTarget { chromatic, modular_complex_G, modular_real };
std::string young_target_name(YoungTarget t);

// chromatic:          (1 + z + sum p_n/n!)^q - 1 - sum q^n p_n/n!
// modular_complex_G:  q/(q-1) z - [chromatic]/(q(q-1)), the compositional
//                     inverse of the complex modular series
// modular_real:       exp(asinh_q(z + SINH_q)) - 1 - sum p_n/n!,
//                     SINH_q = sum q^n p_{2n+1}/(2n+1)!
YoungSeries young_closed_form(YoungTarget target, int D);

// Bivariate series in (z, t) truncated by n + k <= D; c[n][k] is the
// coefficient of z^n t^k.
class TwoColorSeries {
 public:
  explicit TwoColorSeries(int D);
  int bound() const { return D_; }
  const QPoly& operator()(int n, int k) const { return c_.at(n).at(k); }
  QPoly& operator()(int n, int k) { return c_.at(n).at(k); }
  // Coefficient of z^n as a series in t, truncated at t^{D-n}.
  PowerSeries z_coefficient(int n) const;

  friend TwoColorSeries operator+(const TwoColorSeries& a, const TwoColorSeries& b);
  friend TwoColorSeries operator-(const TwoColorSeries& a, const TwoColorSeries& b);
  friend TwoColorSeries operator*(const TwoColorSeries& a, const TwoColorSeries& b);
  friend TwoColorSeries operator*(const QPoly& c, const TwoColorSeries& a);
  friend bool operator==(const TwoColorSeries& a, const TwoColorSeries& b);

  TwoColorSeries divide_coeffs(const QPoly& d, const char* what) const;

 private:
  int D_;
  std::vector<std::vector<QPoly>> c_;
};

// x_1 = t, x_2 = x_3 = ... = 0, so p_n -> t^n and m_la -> 0 for l(la) >= 2.
TwoColorSeries two_color_specialize(const YoungSeries& F);
TwoColorSeries two_color_compose(const TwoColorSeries& F, const TwoColorSeries& G);
TwoColorSeries two_color_reverse(const TwoColorSeries& F);
// G_q(t, z) = q/(q-1) z - ((z + e^t)^q - e^{qt}) / (q(q-1)), built directly.
TwoColorSeries two_color_G(int D);

}  // namespace contractad
