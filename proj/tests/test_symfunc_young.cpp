#include <doctest.h>

#include "contractad/chromatic.hpp"
#include "contractad/family_series.hpp"
#include "contractad/young.hpp"

#include <algorithm>

using namespace contractad;

namespace {

const QPoly q = QPoly::q();

// mu dominates la when all partial sums of mu are >= those of la.
bool dominates(const YoungDiagram& mu, const YoungDiagram& la) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(mu.size(), la.size()); ++i) {
    a += i < mu.size() ? mu[i] : 0;
    b += i < la.size() ? la[i] : 0;
    if (a < b) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("power sums and monomials") {
  for (const YoungDiagram& la : partitions_up_to(6)) {
    if (la.empty()) continue;
    SymFunc p = SymFunc::p(la);
    for (const auto& [mu, c] : p.terms()) CHECK(dominates(mu, la));
    CHECK(p.coeff(la) == QPoly(Rational(multiplicity_factorial(la))));
    auto coords = SymFunc::m(la).to_p_basis();
    CHECK(SymFunc::from_p_basis(coords) == SymFunc::m(la));
    for (const auto& [mu, c] : coords) CHECK(dominates(mu, la));
  }
  CHECK(SymFunc::p({1, 1}) == SymFunc::p(2) + QPoly(2) * SymFunc::m({1, 1}));
}

TEST_CASE("symmetry of monomial coefficients") {
  SymFunc f = SymFunc::p({2, 1}) * SymFunc::m({2, 2}) + q * SymFunc::p(3);
  std::vector<int> e = {3, 0, 2, 2, 0};
  QPoly ref = f.monomial_coeff(e);
  CHECK(!ref.is_zero());
  std::sort(e.begin(), e.end());
  do CHECK(f.monomial_coeff(e) == ref);
  while (std::next_permutation(e.begin(), e.end()));
  CHECK(f.scale_variables(q).coeff({3}) == q.pow(4));
}

TEST_CASE("Young series of 1 and its inverse") {
  const int D = 6;
  YoungSeries F = young_of_graphic(one(), D);
  YoungSeries expected = young_apply(series_exp(PowerSeries::variable(D)),
                                     YoungSeries::z(D) + YoungSeries::constant(SymFunc::p(1), D));
  expected -= YoungSeries::constant(SymFunc(1), D);
  for (int n = 1; n <= D; ++n) expected.add(0, {n}, QPoly(Rational(-1, factorial(n))));
  CHECK(F == expected);
  YoungSeries inv = young_apply(series_log1p(PowerSeries::variable(D)), young_z_plus_exp_p(D)) -
                    YoungSeries::constant(SymFunc::p(1), D);
  CHECK(young_reverse(F) == inv);
  CHECK(F.graphic_value(2, {2, 1}) == QPoly(1));
  CHECK_THROWS_AS(young_reverse(F + YoungSeries::constant(SymFunc::p(1), D)), std::invalid_argument);
}

TEST_CASE("Young composition rule") {
  const int D = 6;
  std::vector<QFunction> fs = {one(), one_x(q), mobius(), chromatic_gf()};
  for (const auto& f : fs)
    for (const auto& g : fs) {
      const QPoly c = g(path_graph(1));
      YoungSeries lhs = young_of_graphic(convolve(f, g), D);
      YoungSeries rhs = young_compose(young_of_graphic(f, D).scale_variables(c), young_of_graphic(g, D));
      CHECK_MESSAGE(lhs == rhs, f.name() << " * " << g.name());
    }
  // the unscaled rule fails as soon as g(P_1) != 1
  YoungSeries lhs = young_of_graphic(convolve(one(), chromatic_gf()), D);
  CHECK(lhs != young_compose(young_of_graphic(one(), D), young_of_graphic(chromatic_gf(), D)));
}

TEST_CASE("chromatic Young closed form") {
  const int D = 6;
  YoungSeries cf = young_closed_form(YoungTarget::chromatic, D);
  for (int n = 0; n <= D; ++n)
    for (const YoungDiagram& la : partitions_up_to(D - n)) {
      if (n == 0 && la.size() <= 1) continue;
      YoungDiagram parts = la;
      parts.insert(parts.end(), n, 1);
      Graph g = parts.size() == 1 ? complete_graph(1) : complete_multipartite(parts);
      CHECK(cf.graphic_value(n, la) == chromatic_delcon(g));
    }
}

TEST_CASE("modular Young series") {
  const int D = 6;
  YoungSeries mc = young_of_graphic(wonderful_complex_hilbert(), D);
  YoungSeries G = young_closed_form(YoungTarget::modular_complex_G, D);
  CHECK(young_compose(mc, G) == YoungSeries::z(D));
  CHECK(young_reverse(G) == mc);
  CHECK(young_closed_form(YoungTarget::modular_real, D) == young_of_graphic(wonderful_real_hilbert(), D));

  TwoColorSeries Gq = two_color_G(D);
  CHECK(Gq == two_color_specialize(G));
  TwoColorSeries Fq = two_color_reverse(Gq);
  CHECK(Fq == two_color_specialize(mc));
  CHECK(Fq.z_coefficient(1) == closed_form(Target::complex, FamilyTag::St, D - 1));
}
