#include <doctest.h>

#include "contractad/power_series.hpp"
#include "contractad/qpoly.hpp"

#include <random>

using namespace contractad;

namespace {

QPoly random_poly(std::mt19937& rng, bool half = true) {
  std::uniform_int_distribution<int> len(0, 5), num(-7, 7), den(1, 4);
  std::map<unsigned, Rational> terms;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    unsigned e = std::uniform_int_distribution<unsigned>(0, 6)(rng);
    if (!half) e &= ~1u;
    terms[e] += make_rational(num(rng), den(rng));
  }
  return QPoly::from_terms(terms);
}

PowerSeries series_of(std::initializer_list<long> cs, int order) {
  std::vector<QPoly> v;
  for (long c : cs) v.emplace_back(c);
  return PowerSeries(v, order);
}

const QPoly q = QPoly::q();

}  // namespace

TEST_CASE("rational values stay canonical") {
  Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(parse_rational("10/4") == make_rational(5, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  // a raw mpq_class(num, den) is not reduced until it enters a QPoly
  CHECK(QPoly(Rational(3, 3)) == QPoly(1));
  CHECK(QPoly::monomial(Rational(-2, 4), 2) == QPoly::monomial(make_rational(-1, 2), 2));
}

TEST_CASE("qpoly ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QPoly());
  }
}

TEST_CASE("qpoly formatting and parsing") {
  QPoly p = QPoly(1) + 5 * q + q * q;
  CHECK(p.to_string() == "1 + 5*q + q^2");
  CHECK((-QPoly::half_pow(3) * make_rational(1, 2)).to_string() == "-1/2*q^(3/2)");
  CHECK((QPoly(1) - q).to_string() == "1 - q");
  CHECK(QPoly().to_string() == "0");
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    QPoly a = random_poly(rng);
    CHECK(parse_qpoly(a.to_string()) == a);
  }
  CHECK_THROWS(parse_qpoly("1 + + q"));
  CHECK_THROWS(parse_qpoly("q^(3/4)"));
}

TEST_CASE("exact division by q-1") {
  const QPoly qm1 = q - QPoly(1);
  for (unsigned g = 1; g <= 12; ++g) {
    QPoly num = q - QPoly::q_pow(g - 1);
    auto quot = num.divide_exact(qm1);
    REQUIRE(quot.has_value());
    CHECK(*quot * qm1 == num);
  }
  CHECK_FALSE(q.divide_exact(qm1).has_value());
  CHECK_THROWS_AS(q.divide_or_throw(qm1, "test"), std::logic_error);
  // half-integer exponents divide in s = q^{1/2}
  QPoly s = QPoly::half_pow(1);
  CHECK((q - QPoly(1)).divide_exact(s - QPoly(1)) == s + QPoly(1));
}

TEST_CASE("evaluation and substitution") {
  QPoly chi = q * (q - QPoly(1)) * (q - QPoly(2));
  CHECK(chi.eval(3) == 6);
  CHECK(chi.eval(-1) == -6);
  CHECK(chi.scale_q(-1) == -q * (q + QPoly(1)) * (q + QPoly(2)));
  CHECK(chi.substitute(q + QPoly(1)) == (q + QPoly(1)) * q * (q - QPoly(1)));
  CHECK_THROWS(QPoly::half_pow(1).eval(1));
  CHECK((QPoly(1) + 5 * q + q * q).is_palindromic(2));
  CHECK_FALSE((QPoly(1) + q * q).is_palindromic(3));
}

TEST_CASE("series_compose") {
  const int N = 6;
  PowerSeries t = PowerSeries::variable(N);
  // t/(1-t) after t/(1+t) is the identity
  PowerSeries a = t * (PowerSeries::constant(1, N) - t).reciprocal();
  PowerSeries b = t * (PowerSeries::constant(1, N) + t).reciprocal();
  CHECK(series_compose(a, b) == t);
  CHECK(series_compose(t, a) == a);

  PowerSeries f = series_of({0, 1, 1}, N);
  // direct expansion: (t+t^2) + (t+t^2)^2 = t + 2t^2 + 2t^3 + t^4
  CHECK(series_compose(f, f) == series_of({0, 1, 2, 2, 1}, N));
  CHECK(series_compose(f, f).truncate(3) == series_of({0, 1, 2, 2}, 3));

  CHECK_THROWS_AS(series_compose(f, f + PowerSeries::constant(1, N)), std::invalid_argument);
  // mixed orders take the minimum
  CHECK(series_compose(f, f.truncate(3)).order() == 3);
  CHECK((f + f.truncate(2)).order() == 2);
}

TEST_CASE("series_reverse") {
  const int N = 8;
  PowerSeries t = PowerSeries::variable(N);
  PowerSeries g = series_reverse(t - t * t);
  for (int k = 1; k <= N; ++k) {
    Integer catalan = binomial(2 * (k - 1), k - 1) / k;
    CHECK(g[k] == QPoly(Rational(catalan)));
  }
  CHECK(series_reverse(t) == t);
  PowerSeries e = series_exp(t) - PowerSeries::constant(1, N);
  CHECK(series_reverse(series_log1p(t)) == e);
  CHECK_THROWS_AS(series_reverse(2 * t), std::invalid_argument);
  CHECK_THROWS_AS(series_reverse(t + PowerSeries::constant(1, N)), std::invalid_argument);

  // random series with q-dependent coefficients
  std::mt19937 rng(11);
  for (int i = 0; i < 10; ++i) {
    PowerSeries h = t;
    for (int k = 2; k <= N; ++k) h[k] = random_poly(rng, false);
    PowerSeries r = series_reverse(h);
    CHECK(series_compose(r, h) == t);
  }
}

TEST_CASE("transcendental expansions") {
  const int N = 7;
  PowerSeries t = PowerSeries::variable(N);
  PowerSeries p = series_pow_param(t.truncate(3), q);
  CHECK(p[0] == QPoly(1));
  CHECK(p[1] == q);
  CHECK(p[2] == q * (q - QPoly(1)) / Rational(2));
  CHECK(p[3] == q * (q - QPoly(1)) * (q - QPoly(2)) / Rational(6));

  CHECK(series_exp(PowerSeries(N)) == PowerSeries::constant(1, N));

  PowerSeries as = series_scaled_arcsinh(t);
  CHECK(as[1] == QPoly(1));
  CHECK(as[2] == QPoly());
  CHECK(as[3] == -q / Rational(6));
  CHECK(as[5] == q * q * make_rational(3, 40));
  CHECK(as.is_integral());
  CHECK(arcsinh_coefficient(3) == make_rational(-5, 112));

  std::mt19937 rng(5);
  for (int i = 0; i < 5; ++i) {
    PowerSeries f(N);
    for (int k = 1; k <= N; ++k) f[k] = random_poly(rng, false);
    CHECK(series_exp(series_log1p(f)) == PowerSeries::constant(1, N) + f);
    QPoly alpha = random_poly(rng, false);
    CHECK(series_pow_param(f, alpha) * series_pow_param(f, -alpha) == PowerSeries::constant(1, N));
  }
  // (1+t)^{1/2} squared
  PowerSeries s = series_pow_param(t, make_rational(1, 2));
  CHECK(s * s == PowerSeries::constant(1, N) + t);
  CHECK_THROWS_AS(series_exp(t + PowerSeries::constant(1, N)), std::invalid_argument);
}

TEST_CASE("reciprocal and shifts") {
  const int N = 5;
  PowerSeries t = PowerSeries::variable(N);
  PowerSeries one = PowerSeries::constant(1, N);
  PowerSeries inv = (one - t).reciprocal();
  for (int k = 0; k <= N; ++k) CHECK(inv[k] == QPoly(1));
  CHECK_THROWS(t.reciprocal());
  CHECK_THROWS((PowerSeries::constant(q, N)).reciprocal());
  PowerSeries sh = (t * t).shift_down(1);
  CHECK(sh.order() == N - 1);
  CHECK(sh == t.truncate(N - 1));
  CHECK_THROWS(t.shift_down(2));
  CHECK_THROWS((t + q * t * t).divide_coeffs(q, "test"));
}
