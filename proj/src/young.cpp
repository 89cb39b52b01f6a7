#include "contractad/young.hpp"

#include <sstream>
#include <stdexcept>

namespace contractad {

namespace {

const QPoly kQ = QPoly::q();

void check_bounds(const YoungSeries& a, const YoungSeries& b, const char* op) {
  if (a.bound() != b.bound())
    throw std::invalid_argument(std::string("YoungSeries ") + op + ": degree bounds differ (" +
                                std::to_string(a.bound()) + " vs " + std::to_string(b.bound()) + ")");
}

void check_bounds(const TwoColorSeries& a, const TwoColorSeries& b, const char* op) {
  if (a.bound() != b.bound())
    throw std::invalid_argument(std::string("TwoColorSeries ") + op + ": degree bounds differ");
}

// The terms of s as an element with degree bound b.
SymFunc rebound(const SymFunc& s, int b) {
  SymFunc r(QPoly(), b);
  for (const auto& [la, c] : s.terms())
    if (weight(la) <= b) r += c * SymFunc::m(la, b);
  return r;
}

}  // namespace

YoungSeries::YoungSeries(int D) : D_(D) {
  if (D < 0) throw std::invalid_argument("YoungSeries: negative degree bound");
  c_.reserve(D + 1);
  for (int n = 0; n <= D; ++n) c_.emplace_back(QPoly(), D - n);
}

YoungSeries YoungSeries::z(int D) {
  YoungSeries r(D);
  if (D >= 1) r.c_[1] = SymFunc(QPoly(1), D - 1);
  return r;
}

YoungSeries YoungSeries::constant(const SymFunc& s, int D) {
  YoungSeries r(D);
  r.c_[0] = rebound(s, D);
  return r;
}

void YoungSeries::set_zcoeff(int n, const SymFunc& s) {
  c_.at(n) = rebound(s, D_ - n);
}

void YoungSeries::add(int n, const YoungDiagram& la, const QPoly& v) {
  if (n + weight(la) > D_) return;
  c_.at(n) += v * SymFunc::m(la, D_ - n);
}

QPoly YoungSeries::graphic_value(int n, const YoungDiagram& la) const {
  return coeff(n, la) * QPoly(Rational(factorial(n) * diagram_factorial(la)));
}

YoungSeries YoungSeries::truncate(int D) const {
  if (D > D_) throw std::invalid_argument("YoungSeries::truncate: cannot raise the degree bound");
  YoungSeries r(D);
  for (int n = 0; n <= D; ++n) r.set_zcoeff(n, c_[n].truncate(D - n));
  return r;
}

YoungSeries YoungSeries::scale_variables(const QPoly& c) const {
  YoungSeries r(D_);
  for (int n = 0; n <= D_; ++n) r.c_[n] = c_[n].scale_variables(c);
  return r;
}

YoungSeries YoungSeries::operator-() const {
  YoungSeries r(D_);
  for (int n = 0; n <= D_; ++n) r.c_[n] = -c_[n];
  return r;
}

YoungSeries& YoungSeries::operator+=(const YoungSeries& o) {
  check_bounds(*this, o, "+");
  for (int n = 0; n <= D_; ++n) c_[n] += o.c_[n];
  return *this;
}

YoungSeries& YoungSeries::operator-=(const YoungSeries& o) {
  check_bounds(*this, o, "-");
  for (int n = 0; n <= D_; ++n) c_[n] -= o.c_[n];
  return *this;
}

YoungSeries operator*(const YoungSeries& a, const YoungSeries& b) {
  check_bounds(a, b, "*");
  const int D = a.D_;
  YoungSeries r(D);
  for (int i = 0; i <= D; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= D; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i].truncate(D - i - j) * b.c_[j].truncate(D - i - j);
    }
  }
  return r;
}

YoungSeries operator*(const QPoly& c, const YoungSeries& a) {
  YoungSeries r(a.D_);
  for (int n = 0; n <= a.D_; ++n) r.c_[n] = c * a.c_[n];
  return r;
}

bool operator==(const YoungSeries& a, const YoungSeries& b) {
  const int D = std::min(a.D_, b.D_);
  for (int n = 0; n <= D; ++n)
    if (a.c_[n].truncate(D - n) != b.c_[n].truncate(D - n)) return false;
  return true;
}

YoungSeries YoungSeries::divide_coeffs(const QPoly& d, const char* what) const {
  YoungSeries r(D_);
  for (int n = 0; n <= D_; ++n)
    for (const auto& [la, c] : c_[n].terms()) r.add(n, la, c.divide_or_throw(d, what));
  return r;
}

std::string YoungSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= D_; ++n)
    for (const auto& [la, c] : c_[n].terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.to_string() << ")";
      if (n) os << "*z^" << n;
      if (!la.empty()) os << "*m" << diagram_string(la);
    }
  if (first) os << "0";
  os << " + O(" << D_ + 1 << ")";
  return os.str();
}

YoungSeries young_of_graphic(const QFunction& f, int D) {
  YoungSeries r(D);
  for (int n = 0; n <= D; ++n)
    for (const YoungDiagram& la : partitions_up_to(D - n)) {
      if (n == 0 && la.size() <= 1) continue;
      YoungDiagram parts = la;
      parts.insert(parts.end(), n, 1);
      Graph g = parts.size() == 1 ? complete_graph(1) : complete_multipartite(parts);
      Rational norm(1, factorial(n) * diagram_factorial(la));
      r.add(n, la, f(g) * QPoly(norm));
    }
  return r;
}

YoungSeries young_compose(const YoungSeries& F, const YoungSeries& G) {
  check_bounds(F, G, "compose");
  if (G.has_constant_term()) throw std::invalid_argument("young_compose: inner series has a constant term");
  const int D = F.bound();
  YoungSeries acc = YoungSeries::constant(F.zcoeff(D), D);
  for (int n = D - 1; n >= 0; --n) acc = acc * G + YoungSeries::constant(F.zcoeff(n), D);
  return acc;
}

YoungSeries young_reverse(const YoungSeries& F) {
  const int D = F.bound();
  if (D < 1) throw std::invalid_argument("young_reverse: degree bound must be >= 1");
  if (F.has_constant_term() || F.coeff(0, {1}) != QPoly() || F.coeff(1, {}) != QPoly(1))
    throw std::invalid_argument("young_reverse: series must be z plus terms of total degree >= 2");
  const YoungSeries z = YoungSeries::z(D);
  const YoungSeries R = F - z;
  // H = z - R(H); each pass fixes one more total degree
  YoungSeries H = z;
  for (int it = 0; it < D; ++it) H = z - young_compose(R, H);
  if (young_compose(F, H) != z || young_compose(H, F) != z)
    throw std::logic_error("young_reverse: inverse failed verification");
  return H;
}

YoungSeries young_apply(const PowerSeries& kernel, const YoungSeries& F) {
  if (F.has_constant_term()) throw std::invalid_argument("young_apply: argument has a constant term");
  const int D = F.bound();
  if (kernel.order() < D) throw std::invalid_argument("young_apply: kernel order below the degree bound");
  YoungSeries acc = YoungSeries::constant(SymFunc(kernel[D], D), D);
  for (int j = D - 1; j >= 0; --j) acc = acc * F + YoungSeries::constant(SymFunc(kernel[j], D), D);
  return acc;
}

YoungSeries young_z_plus_exp_p(int D) {
  YoungSeries r = YoungSeries::z(D);
  for (int n = 1; n <= D; ++n) r.add(0, {n}, QPoly(Rational(1, factorial(n))));
  return r;
}

std::string young_target_name(YoungTarget t) {
  switch (t) {
    case YoungTarget::chromatic: return "chromatic";
    case YoungTarget::modular_complex_G: return "modular_complex_G";
    case YoungTarget::modular_real: return "modular_real";
  }
  return "?";
}

namespace {

YoungSeries young_chromatic(int D) {
  const PowerSeries x = PowerSeries::variable(D);
  YoungSeries r = young_apply(series_pow_param(x, kQ), young_z_plus_exp_p(D));
  r -= YoungSeries::constant(SymFunc(1), D);
  for (int n = 1; n <= D; ++n) r.add(0, {n}, -(kQ.pow(n) * QPoly(Rational(1, factorial(n)))));
  return r;
}

YoungSeries young_modular_G(int D) {
  YoungSeries num = young_chromatic(D) - kQ * YoungSeries::z(D);
  return YoungSeries::z(D) - num.divide_coeffs(kQ * (kQ - QPoly(1)), "modular G");
}

YoungSeries young_modular_real(int D) {
  YoungSeries arg = YoungSeries::z(D);
  for (int n = 0; 2 * n + 1 <= D; ++n) arg.add(0, {2 * n + 1}, kQ.pow(n) * QPoly(Rational(1, factorial(2 * n + 1))));
  const PowerSeries x = PowerSeries::variable(D);
  const PowerSeries kernel = series_exp(series_scaled_arcsinh(x));
  YoungSeries r = young_apply(kernel, arg);
  r -= YoungSeries::constant(SymFunc(1), D);
  for (int n = 1; n <= D; ++n) r.add(0, {n}, QPoly(Rational(-1, factorial(n))));
  return r;
}

}  // namespace

YoungSeries young_closed_form(YoungTarget target, int D) {
  if (D < 1) throw std::invalid_argument("young_closed_form: degree bound must be >= 1");
  switch (target) {
    case YoungTarget::chromatic: return young_chromatic(D);
    case YoungTarget::modular_complex_G: return young_modular_G(D);
    case YoungTarget::modular_real: return young_modular_real(D);
  }
  throw std::invalid_argument("young_closed_form: unknown target");
}

TwoColorSeries::TwoColorSeries(int D) : D_(D) {
  if (D < 0) throw std::invalid_argument("TwoColorSeries: negative degree bound");
  for (int n = 0; n <= D; ++n) c_.emplace_back(D - n + 1);
}

PowerSeries TwoColorSeries::z_coefficient(int n) const {
  PowerSeries s(D_ - n);
  for (int k = 0; k <= D_ - n; ++k) s[k] = c_.at(n)[k];
  return s;
}

TwoColorSeries operator+(const TwoColorSeries& a, const TwoColorSeries& b) {
  check_bounds(a, b, "+");
  TwoColorSeries r = a;
  for (int n = 0; n <= a.D_; ++n)
    for (int k = 0; n + k <= a.D_; ++k) r(n, k) += b(n, k);
  return r;
}

TwoColorSeries operator-(const TwoColorSeries& a, const TwoColorSeries& b) {
  return a + QPoly(-1) * b;
}

TwoColorSeries operator*(const TwoColorSeries& a, const TwoColorSeries& b) {
  check_bounds(a, b, "*");
  const int D = a.D_;
  TwoColorSeries r(D);
  for (int n1 = 0; n1 <= D; ++n1)
    for (int k1 = 0; n1 + k1 <= D; ++k1) {
      if (a(n1, k1).is_zero()) continue;
      for (int n2 = 0; n1 + k1 + n2 <= D; ++n2)
        for (int k2 = 0; n1 + k1 + n2 + k2 <= D; ++k2)
          if (!b(n2, k2).is_zero()) r(n1 + n2, k1 + k2) += a(n1, k1) * b(n2, k2);
    }
  return r;
}

TwoColorSeries operator*(const QPoly& c, const TwoColorSeries& a) {
  TwoColorSeries r = a;
  for (auto& row : r.c_)
    for (auto& x : row) x = c * x;
  return r;
}

bool operator==(const TwoColorSeries& a, const TwoColorSeries& b) {
  const int D = std::min(a.D_, b.D_);
  for (int n = 0; n <= D; ++n)
    for (int k = 0; n + k <= D; ++k)
      if (a(n, k) != b(n, k)) return false;
  return true;
}

TwoColorSeries TwoColorSeries::divide_coeffs(const QPoly& d, const char* what) const {
  TwoColorSeries r = *this;
  for (auto& row : r.c_)
    for (auto& x : row) x = x.divide_or_throw(d, what);
  return r;
}

TwoColorSeries two_color_specialize(const YoungSeries& F) {
  const int D = F.bound();
  TwoColorSeries r(D);
  for (int n = 0; n <= D; ++n)
    for (const auto& [la, c] : F.zcoeff(n).terms())
      if (la.size() <= 1) r(n, weight(la)) += c;
  return r;
}

TwoColorSeries two_color_compose(const TwoColorSeries& F, const TwoColorSeries& G) {
  check_bounds(F, G, "compose");
  const int D = F.bound();
  if (!G(0, 0).is_zero()) throw std::invalid_argument("two_color_compose: inner series has a constant term");
  auto row = [&](int n) {
    TwoColorSeries s(D);
    for (int k = 0; n + k <= D; ++k) s(0, k) = F(n, k);
    return s;
  };
  TwoColorSeries acc = row(D);
  for (int n = D - 1; n >= 0; --n) acc = acc * G + row(n);
  return acc;
}

TwoColorSeries two_color_reverse(const TwoColorSeries& F) {
  const int D = F.bound();
  if (D < 1) throw std::invalid_argument("two_color_reverse: degree bound must be >= 1");
  if (!F(0, 0).is_zero() || !F(0, 1).is_zero() || F(1, 0) != QPoly(1))
    throw std::invalid_argument("two_color_reverse: series must be z plus terms of total degree >= 2");
  TwoColorSeries z(D);
  z(1, 0) = QPoly(1);
  const TwoColorSeries R = F - z;
  TwoColorSeries H = z;
  for (int it = 0; it < D; ++it) H = z - two_color_compose(R, H);
  if (!(two_color_compose(F, H) == z) || !(two_color_compose(H, F) == z))
    throw std::logic_error("two_color_reverse: inverse failed verification");
  return H;
}

TwoColorSeries two_color_G(int D) {
  // (z + e^t)^q - e^{qt} = e^{qt} ((1 + z e^{-t})^q - 1)
  TwoColorSeries w(D), eqt(D);
  for (int k = 0; k + 1 <= D; ++k) w(1, k) = QPoly(Rational(k % 2 ? -1 : 1, factorial(k)));
  for (int k = 0; k <= D; ++k) eqt(0, k) = kQ.pow(k) * QPoly(Rational(1, factorial(k)));
  const PowerSeries kernel = series_pow_param(PowerSeries::variable(D), kQ);
  TwoColorSeries pw(D);
  for (int j = D; j >= 1; --j) {
    TwoColorSeries cst(D);
    cst(0, 0) = kernel[j];
    pw = (pw + cst) * w;
  }
  TwoColorSeries bracket = eqt * pw;
  TwoColorSeries z2(D);
  z2(1, 0) = kQ * kQ;
  return (z2 - bracket).divide_coeffs(kQ * (kQ - QPoly(1)), "G_q");
}

}  // namespace contractad
