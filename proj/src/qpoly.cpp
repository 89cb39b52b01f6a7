#include "contractad/qpoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace contractad {

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

// mpq_class(num, den) does not reduce, so incoming values are canonicalized
// once here and stay canonical under arithmetic.
QPoly::QPoly(const Rational& c) {
  if (c == 0) return;
  c_.push_back(c);
  c_.back().canonicalize();
}

QPoly QPoly::q() { return monomial(1, 2); }
QPoly QPoly::q_pow(unsigned k) { return monomial(1, 2 * k); }
QPoly QPoly::half_pow(unsigned half_exp) { return monomial(1, half_exp); }

QPoly QPoly::monomial(const Rational& c, unsigned half_exp) {
  QPoly p;
  if (c == 0) return p;
  p.c_.resize(half_exp + 1);
  p.c_[half_exp] = c;
  p.c_[half_exp].canonicalize();
  return p;
}

QPoly QPoly::from_terms(const std::map<unsigned, Rational>& half_terms) {
  QPoly p;
  for (const auto& [e, c] : half_terms) {
    if (p.c_.size() <= e) p.c_.resize(e + 1);
    p.c_[e] += c;
  }
  p.trim();
  return p;
}

QPoly QPoly::q_integer(unsigned k) {
  QPoly p;
  for (unsigned i = 0; i < k; ++i) p += q_pow(i);
  return p;
}

int QPoly::degree() const {
  if (!is_integral()) throw std::logic_error("degree() of a polynomial with half-integer exponents");
  return c_.empty() ? -1 : half_degree() / 2;
}

bool QPoly::is_integral() const {
  for (std::size_t i = 1; i < c_.size(); i += 2)
    if (c_[i] != 0) return false;
  return true;
}

std::optional<Rational> QPoly::constant_value() const {
  if (c_.size() > 1) return std::nullopt;
  return c_.empty() ? Rational(0) : c_[0];
}

Rational QPoly::half_coeff(unsigned half_exp) const {
  return half_exp < c_.size() ? c_[half_exp] : Rational(0);
}

std::map<unsigned, Rational> QPoly::terms() const {
  std::map<unsigned, Rational> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace(static_cast<unsigned>(i), c_[i]);
  return out;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
      r.c_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

QPoly& QPoly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("QPoly division by zero");
  for (auto& x : c_) x /= c;
  return *this;
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result(1), base(*this);
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Rational QPoly::eval(const Rational& at) const {
  if (!is_integral()) throw std::logic_error("eval() needs integral exponents");
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * at + c_[2 * i];
  return acc;
}

QPoly QPoly::scale_q(const Rational& c) const {
  if (!is_integral()) throw std::logic_error("scale_q() needs integral exponents");
  QPoly r(*this);
  Rational f = 1;
  for (std::size_t i = 0; i < r.c_.size(); i += 2) {
    r.c_[i] *= f;
    f *= c;
  }
  r.trim();
  return r;
}

QPoly QPoly::substitute(const QPoly& value) const {
  if (!is_integral()) throw std::logic_error("substitute() needs integral exponents");
  QPoly acc;
  for (int i = degree(); i >= 0; --i) acc = acc * value + QPoly(c_[2 * i]);
  return acc;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly division by the zero polynomial");
  QPoly rem(*this), quot;
  const int dh = d.half_degree();
  const Rational& lead = d.c_.back();
  if (rem.half_degree() >= dh) quot.c_.resize(rem.half_degree() - dh + 1);
  for (int i = rem.half_degree(); i >= dh; --i) {
    if (i >= static_cast<int>(rem.c_.size()) || rem.c_[i] == 0) continue;
    Rational f = rem.c_[i] / lead;
    quot.c_[i - dh] = f;
    for (int j = 0; j <= dh; ++j)
      if (d.c_[j] != 0) rem.c_[i - dh + j] -= f * d.c_[j];
  }
  rem.trim();
  if (!rem.is_zero()) return std::nullopt;
  quot.trim();
  return quot;
}

QPoly QPoly::divide_or_throw(const QPoly& d, const char* what) const {
  auto r = divide_exact(d);
  if (!r) throw std::logic_error(std::string("inexact polynomial division: ") + what);
  return *r;
}

bool QPoly::is_palindromic(int degree) const {
  if (!is_integral() || is_zero()) return false;
  if (this->degree() > degree) return false;
  for (int i = 0; i <= degree; ++i)
    if (coeff(i) != coeff(degree - i)) return false;
  return true;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    const Rational& c = c_[e];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (e % 2 == 1)
      os << "^(" << e << "/2)";
    else if (e != 2)
      os << '^' << e / 2;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

QPoly parse_qpoly(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  auto fail = [&]() { throw std::invalid_argument("cannot parse polynomial: '" + text + "'"); };

  std::map<unsigned, Rational> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
    Rational coef = 1;
    bool has_coef = j > i;
    if (has_coef) coef = parse_rational(s.substr(i, j - i));
    i = j;
    unsigned half = 0;
    if (i < s.size() && (s[i] == '*' || s[i] == 'q')) {
      if (s[i] == '*') {
        if (!has_coef) fail();
        ++i;
      }
      if (i >= s.size() || s[i] != 'q') fail();
      ++i;
      half = 2;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i < s.size() && s[i] == '(') {
          std::size_t close = s.find(')', i);
          if (close == std::string::npos) fail();
          std::string frac = s.substr(i + 1, close - i - 1);
          std::size_t slash = frac.find('/');
          if (slash == std::string::npos || frac.substr(slash + 1) != "2") fail();
          half = static_cast<unsigned>(std::stoul(frac.substr(0, slash)));
          i = close + 1;
        } else {
          std::size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) fail();
          half = 2 * static_cast<unsigned>(std::stoul(s.substr(i, k - i)));
          i = k;
        }
      }
    } else if (!has_coef) {
      fail();
    }
    terms[half] += sign * coef;
  }
  return QPoly::from_terms(terms);
}

}  // namespace contractad
