#pragma once

#include "contractad/qpoly.hpp"

#include <climits>
#include <map>
#include <string>
#include <vector>

namespace contractad {

// Weakly decreasing positive parts.
using YoungDiagram = std::vector<int>;

int weight(const YoungDiagram& la);
// prod of lambda_i!
Integer diagram_factorial(const YoungDiagram& la);
// prod of m_i(lambda)! over part multiplicities
Integer multiplicity_factorial(const YoungDiagram& la);
std::vector<YoungDiagram> partitions_of(int n);
std::vector<YoungDiagram> partitions_up_to(int max_weight);
std::string diagram_string(const YoungDiagram& la);

// Symmetric polynomial with QPoly coefficients, stored by monomial
// coordinates: coeff(la) is the coefficient of m_la, which is also the
// coefficient of the sorted monomial x^la.  Terms of degree above the bound are
// dropped; kUnbounded keeps everything.  Having at least `bound` variables
// loses nothing, since every m_la of weight <= bound survives.
class SymFunc {
 public:
  static constexpr int kUnbounded = INT_MAX;

  SymFunc() = default;
  SymFunc(long c);  // NOLINT(google-explicit-constructor)
  SymFunc(const QPoly& c, int bound = kUnbounded);  // NOLINT

  static SymFunc m(const YoungDiagram& la, int bound = kUnbounded);
  static SymFunc p(int n, int bound = kUnbounded);
  static SymFunc p(const YoungDiagram& la, int bound = kUnbounded);

  int bound() const { return bound_; }
  bool is_zero() const { return terms_.empty(); }
  QPoly coeff(const YoungDiagram& la) const;
  const std::map<YoungDiagram, QPoly>& terms() const { return terms_; }
  int degree() const;  // -1 for zero

  SymFunc truncate(int bound) const;
  // Part of degree exactly d.
  SymFunc homogeneous(int d) const;

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  friend SymFunc operator*(const QPoly& c, const SymFunc& a);
  friend bool operator==(const SymFunc& a, const SymFunc& b);
  friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

  // x_i -> c x_i, i.e. the degree-d part is multiplied by c^d.
  SymFunc scale_variables(const QPoly& c) const;

  // Power-sum coordinates; from_p_basis inverts it.
  std::map<YoungDiagram, QPoly> to_p_basis() const;
  static SymFunc from_p_basis(const std::map<YoungDiagram, QPoly>& coords, int bound = kUnbounded);

  // Coefficient of x_1^{a_1} x_2^{a_2} ... for an arbitrary exponent vector.
  QPoly monomial_coeff(std::vector<int> exponents) const;

  std::string to_string() const;

 private:
  void add_term(const YoungDiagram& la, const QPoly& c);
  int bound_ = kUnbounded;
  std::map<YoungDiagram, QPoly> terms_;
};

}  // namespace contractad
