#include "contractad/family_series.hpp"

#include <stdexcept>

namespace contractad {

namespace {

const QPoly kQ = QPoly::q();

QPoly normalisation(FamilyTag f, int n) {
  switch (f) {
    case FamilyTag::P: return QPoly(1);
    case FamilyTag::C: return QPoly(make_rational(1, n));
    case FamilyTag::K:
    case FamilyTag::St: return QPoly(Rational(1, factorial(n)));
  }
  return QPoly(1);
}

PowerSeries one_plus(const PowerSeries& f) { return PowerSeries::constant(1, f.order()) + f; }

}  // namespace

std::string family_name(FamilyTag f) {
  switch (f) {
    case FamilyTag::P: return "path";
    case FamilyTag::C: return "cycle";
    case FamilyTag::K: return "complete";
    case FamilyTag::St: return "star";
  }
  return "?";
}

Graph family_member(FamilyTag f, int n) {
  switch (f) {
    case FamilyTag::P: return path_graph(n);
    case FamilyTag::C: return n <= 2 ? path_graph(n) : cycle_graph(n);
    case FamilyTag::K: return complete_graph(n);
    case FamilyTag::St: return star_graph(n);
  }
  throw std::invalid_argument("unknown family");
}

FamilySeries family_series(const QFunction& f, FamilyTag family, int N) {
  if (N < 1) throw std::invalid_argument("family_series: order must be >= 1");
  PowerSeries s(N);
  const int first = family == FamilyTag::St ? 0 : 1;
  for (int n = first; n <= N; ++n) s[n] = f(family_member(family, n)) * normalisation(family, n);
  return {family, s};
}

CompositionReport check_family_composition(const QFunction& f, const QFunction& g, FamilyTag family, int N) {
  const QPoly f1 = f(path_graph(1));
  if (family == FamilyTag::St && g(path_graph(1)) != QPoly(1))
    throw std::invalid_argument("star composition rule needs g(P_1) = 1, got " + g(path_graph(1)).to_string());
  PowerSeries lhs = family_series(convolve(f, g), family, N).series;
  PowerSeries rhs(N);
  switch (family) {
    case FamilyTag::P:
    case FamilyTag::K:
      rhs = series_compose(family_series(f, family, N).series, family_series(g, family, N).series);
      break;
    case FamilyTag::C: {
      PowerSeries gp = family_series(g, FamilyTag::P, N).series;
      rhs = series_compose(family_series(f, FamilyTag::C, N).series, gp) - f1 * gp +
            f1 * family_series(g, FamilyTag::C, N).series;
      break;
    }
    case FamilyTag::St:
      rhs = family_series(f, FamilyTag::St, N).series * family_series(g, FamilyTag::St, N).series;
      break;
  }
  return {lhs == rhs, lhs, rhs};
}

PowerSeries complete_graph_inverse_series(int N) {
  PowerSeries t = PowerSeries::variable(N);
  PowerSeries inner = (series_pow_param(t, kQ) - PowerSeries::constant(1, N)).divide_coeffs(kQ, "((1+t)^q-1)/q");
  return (kQ * t - inner).divide_coeffs(kQ - QPoly(1), "g(q,t)");
}

namespace {

PowerSeries complex_path(int N) {
  PowerSeries t = PowerSeries::variable(N);
  const QPoly a = QPoly(1) - kQ;
  PowerSeries lin = one_plus(a * t);
  PowerSeries disc = lin * lin - QPoly(4) * t;  // constant term 1
  PowerSeries root = series_pow_param(disc - PowerSeries::constant(1, N), make_rational(1, 2));
  PowerSeries num = PowerSeries::constant(1, N) - a * t - root;
  return num.divide_coeffs(QPoly(2) * kQ, "path closed form");
}

PowerSeries complex_star(int N) {
  PowerSeries s(N);
  for (int k = 1; k <= N; ++k) s[k] = (kQ - QPoly(1)).pow(k - 1) * QPoly(Rational(1, factorial(k)));
  return (PowerSeries::constant(1, N) - s).reciprocal();
}

PowerSeries complex_cycle(int N) {
  PowerSeries fp = complex_path(N);
  const QPoly qm1 = kQ - QPoly(1);
  PowerSeries a = series_log1p(-(qm1 * fp));
  PowerSeries b = series_log1p(fp);
  PowerSeries num = -a - qm1 * b;
  return PowerSeries::variable(N) + num.divide_coeffs(kQ * qm1, "cycle closed form");
}

// (sqrt(1+4qt^2) - 1)/(2qt)
PowerSeries real_L(int N) {
  PowerSeries t = PowerSeries::variable(N + 1);
  PowerSeries root = series_pow_param(QPoly(4) * kQ * t * t, make_rational(1, 2)) - PowerSeries::constant(1, N + 1);
  return root.shift_down(1).divide_coeffs(QPoly(2) * kQ, "L_q");
}

PowerSeries real_path(int N) {
  PowerSeries L = real_L(N);
  return L * (PowerSeries::constant(1, N) - L).reciprocal();
}

PowerSeries real_star(int N) {
  PowerSeries cosh(N);
  for (int k = 0; 2 * k <= N; ++k) cosh[2 * k] = QPoly::q_pow(k) * QPoly(Rational(1, factorial(2 * k)));
  return series_exp(PowerSeries::variable(N)) * cosh.reciprocal();
}

PowerSeries real_complete(int N) {
  return series_exp(series_scaled_arcsinh(PowerSeries::variable(N))) - PowerSeries::constant(1, N);
}

PowerSeries real_cycle(int N) {
  PowerSeries L = real_L(N);
  return PowerSeries::variable(N) - series_log1p(-L) - series_scaled_artanh(L);
}

}  // namespace

PowerSeries closed_form(Target target, FamilyTag family, int N) {
  if (N < 1) throw std::invalid_argument("closed_form: order must be >= 1");
  if (target == Target::complex) {
    switch (family) {
      case FamilyTag::P: return complex_path(N);
      case FamilyTag::C: return complex_cycle(N);
      case FamilyTag::K: return series_reverse(complete_graph_inverse_series(N));
      case FamilyTag::St: return complex_star(N);
    }
  } else {
    switch (family) {
      case FamilyTag::P: return real_path(N);
      case FamilyTag::C: return real_cycle(N);
      case FamilyTag::K: return real_complete(N);
      case FamilyTag::St: return real_star(N);
    }
  }
  throw std::invalid_argument("closed_form: unknown family");
}

}  // namespace contractad
