#include "contractad/rational.hpp"

#include <stdexcept>

namespace contractad {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

}  // namespace contractad
