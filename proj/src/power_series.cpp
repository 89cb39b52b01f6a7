#include "contractad/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace contractad {

PowerSeries::PowerSeries(int order, SeriesVar var) : var_(var), order_(order) {
  if (order < 0) throw std::invalid_argument("series truncation order must be >= 0");
  c_.resize(order + 1);
}

PowerSeries::PowerSeries(std::vector<QPoly> coeffs, int order, SeriesVar var)
    : var_(var), order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("series truncation order must be >= 0");
  c_.resize(order + 1);
}

PowerSeries PowerSeries::variable(int order, SeriesVar var) { return monomial(1, 1, order, var); }

PowerSeries PowerSeries::constant(const QPoly& c, int order, SeriesVar var) {
  return monomial(c, 0, order, var);
}

PowerSeries PowerSeries::monomial(const QPoly& c, int k, int order, SeriesVar var) {
  PowerSeries s(order, var);
  if (k <= order) s.c_[k] = c;
  return s;
}

PowerSeries PowerSeries::truncate(int order) const {
  if (order > order_) throw std::invalid_argument("cannot raise the truncation order of a series");
  return PowerSeries(std::vector<QPoly>(c_.begin(), c_.begin() + order + 1), order, var_);
}

bool PowerSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const QPoly& p) { return p.is_integral(); });
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  if (o.order_ < order_) *this = truncate(o.order_);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order_, b.order_);
  PowerSeries r(n, a.var_);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

PowerSeries operator*(const QPoly& c, const PowerSeries& a) {
  PowerSeries r(a);
  for (auto& x : r.c_) x = c * x;
  return r;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  int n = std::min(a.order_, b.order_);
  for (int k = 0; k <= n; ++k)
    if (a.c_[k] != b.c_[k]) return false;
  return true;
}

PowerSeries PowerSeries::divide_coeffs(const QPoly& d, const char* what) const {
  PowerSeries r(*this);
  for (auto& x : r.c_) x = x.divide_or_throw(d, what);
  return r;
}

PowerSeries PowerSeries::shift_down(int k) const {
  if (k > order_) throw std::invalid_argument("shift exceeds truncation order");
  for (int i = 0; i < k; ++i)
    if (!c_[i].is_zero()) throw std::logic_error("shift_down: series is not divisible by x^k");
  return PowerSeries(std::vector<QPoly>(c_.begin() + k, c_.end()), order_ - k, var_);
}

PowerSeries PowerSeries::reciprocal() const {
  auto c0 = c_[0].constant_value();
  if (!c0 || *c0 == 0)
    throw std::invalid_argument("reciprocal needs a non-zero rational constant term");
  Rational inv = 1 / *c0;
  PowerSeries r(order_, var_);
  r.c_[0] = QPoly(inv);
  for (int k = 1; k <= order_; ++k) {
    QPoly acc;
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -acc * inv;
  }
  return r;
}

PowerSeries PowerSeries::hadamard(const std::vector<Rational>& w) const {
  PowerSeries r(*this);
  for (int k = 0; k <= order_; ++k) r.c_[k] *= w.at(k);
  return r;
}

std::string PowerSeries::to_string() const {
  const char x = var_ == SeriesVar::t ? 't' : 'z';
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c_[k].to_string() << ')';
    if (k == 1) os << '*' << x;
    if (k > 1) os << '*' << x << '^' << k;
  }
  if (first) os << '0';
  os << " + O(" << x << '^' << order_ + 1 << ')';
  return os.str();
}

PowerSeries series_compose(const PowerSeries& f, const PowerSeries& g) {
  if (!g[0].is_zero())
    throw std::invalid_argument("series_compose: inner series has a non-zero constant term");
  int n = std::min(f.order(), g.order());
  PowerSeries gn = g.truncate(n);
  PowerSeries acc = PowerSeries::constant(f[n], n, g.var());
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * gn;
    acc[0] += f[k];
  }
  return acc;
}

PowerSeries series_reverse(const PowerSeries& f) {
  const int n = f.order();
  if (!f[0].is_zero()) throw std::invalid_argument("series_reverse: f(0) must be 0");
  if (n >= 1 && f[1] != QPoly(1))
    throw std::invalid_argument("series_reverse: linear coefficient must be 1");
  PowerSeries x = PowerSeries::variable(n, f.var());
  PowerSeries rest = f - x;
  // g = x - rest(g); each pass fixes one more coefficient.
  PowerSeries g = x;
  for (int it = 0; it < n; ++it) g = x - series_compose(rest, g);
  if (series_compose(f, g) != x || series_compose(g, f) != x)
    throw std::logic_error("series_reverse: round-trip check failed");
  return g;
}

Rational arcsinh_coefficient(unsigned k) {
  Rational c(factorial(2 * k), factorial(k) * factorial(k));
  c /= Rational(Integer(1) << (2 * k));
  c /= 2 * k + 1;
  if (k % 2) c = -c;
  c.canonicalize();
  return c;
}

namespace {

PowerSeries kernel(Transcendental kind, int n, const QPoly& alpha) {
  PowerSeries K(n);
  switch (kind) {
    case Transcendental::exp:
      for (int k = 0; k <= n; ++k) K[k] = QPoly(Rational(1, factorial(k)));
      break;
    case Transcendental::log1p:
      for (int k = 1; k <= n; ++k) K[k] = QPoly(make_rational(k % 2 ? 1 : -1, k));
      break;
    case Transcendental::pow_param: {
      QPoly b(1);
      K[0] = b;
      for (int k = 1; k <= n; ++k) {
        b = b * (alpha - QPoly(k - 1)) / Rational(k);
        K[k] = b;
      }
      break;
    }
    case Transcendental::scaled_arcsinh:
      for (int k = 0; 2 * k + 1 <= n; ++k)
        K[2 * k + 1] = QPoly::monomial(arcsinh_coefficient(k), 2 * k);
      break;
    case Transcendental::scaled_artanh:
      for (int k = 0; 2 * k + 1 <= n; ++k)
        K[2 * k + 1] = QPoly::monomial(make_rational(1, 2 * k + 1), 2 * k);
      break;
  }
  return K;
}

}  // namespace

PowerSeries series_transcendental(Transcendental kind, const PowerSeries& f, const QPoly& alpha) {
  if (!f[0].is_zero())
    throw std::invalid_argument("transcendental expansion needs a zero constant term");
  PowerSeries r = series_compose(kernel(kind, f.order(), alpha), f);
  if (kind == Transcendental::scaled_arcsinh || kind == Transcendental::scaled_artanh) {
    if (f.is_integral() && !r.is_integral())
      throw std::logic_error("scaled expansion produced half-integer powers of q");
  }
  return r;
}

PowerSeries series_exp(const PowerSeries& f) { return series_transcendental(Transcendental::exp, f); }
PowerSeries series_log1p(const PowerSeries& f) {
  return series_transcendental(Transcendental::log1p, f);
}
PowerSeries series_pow_param(const PowerSeries& f, const QPoly& alpha) {
  return series_transcendental(Transcendental::pow_param, f, alpha);
}
PowerSeries series_scaled_arcsinh(const PowerSeries& f) {
  return series_transcendental(Transcendental::scaled_arcsinh, f);
}
PowerSeries series_scaled_artanh(const PowerSeries& f) {
  return series_transcendental(Transcendental::scaled_artanh, f);
}

}  // namespace contractad
