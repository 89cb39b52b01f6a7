#include <doctest.h>

#include "contractad/chromatic.hpp"
#include "contractad/hilbert.hpp"

using namespace contractad;

namespace {

const QPoly q = QPoly::q();

const std::vector<Graph>& graphs_up_to_6() {
  static const std::vector<Graph> gs = connected_graphs_up_to(6);
  return gs;
}

const std::vector<Graph>& graphs_up_to_5() {
  static const std::vector<Graph> gs = connected_graphs_up_to(5);
  return gs;
}

}  // namespace

TEST_CASE("convolution basics") {
  QFunction oo = convolve(one(), one());
  CHECK(oo(path_graph(2)) == QPoly(2));
  // 1*1 counts graph partitions
  CHECK(oo(complete_graph(4)) == QPoly(15));

  QFunction f = random_graphic_function(1, false);
  for (const Graph& g : graphs_up_to_6()) {
    CHECK(convolve(epsilon(), f)(g) == f(g));
    CHECK(convolve(f, epsilon())(g) == f(g));
  }
  QPoly x = q + QPoly(2), y = QPoly(3) * q;
  for (const Graph& g : graphs_up_to_5())
    CHECK(pointwise_product(one_x(x), one_x(y))(g) == one_x(x * y)(g));
}

TEST_CASE("associativity on random triples") {
  for (std::uint64_t s = 0; s < 3; ++s) {
    QFunction f = random_graphic_function(10 + s, false);
    QFunction g = random_graphic_function(20 + s, false);
    QFunction h = random_graphic_function(30 + s, false);
    QFunction left = convolve(convolve(f, g), h);
    QFunction right = convolve(f, convolve(g, h));
    for (const Graph& gr : graphs_up_to_5()) CHECK(left(gr) == right(gr));
  }
}

TEST_CASE("technical identities for 1_q") {
  QFunction f = random_graphic_function(41, false);
  QFunction g = random_graphic_function(42, false);
  QFunction oq = one_x(q);
  QFunction lhs1 = pointwise_product(oq, convolve(f, g));
  QFunction rhs1 = convolve(pointwise_product(oq, f), pointwise_product(oq, g));
  QFunction lhs2 = convolve(f, scalar_multiple(q, g));
  QFunction rhs2 = scalar_multiple(q, convolve(pointwise_product(oq, f), g));
  for (const Graph& gr : graphs_up_to_5()) {
    CHECK(lhs1(gr) == rhs1(gr));
    CHECK(lhs2(gr) == rhs2(gr));
  }
}

TEST_CASE("star inverse") {
  QFunction mu = mobius();
  CHECK(mu(path_graph(4)) == QPoly(-1));
  CHECK(mu(complete_graph(4)) == QPoly(-6));
  CHECK(mu(cycle_graph(4)) == QPoly(-3));
  CHECK(mu(star_graph(3)) == QPoly(-1));
  CHECK_THROWS_AS(star_inverse(chromatic_gf()), std::invalid_argument);

  QFunction f = random_graphic_function(7, true);
  QFunction inv = star_inverse(f);
  QFunction eps = epsilon();
  for (const Graph& g : graphs_up_to_5()) {
    CHECK(convolve(f, inv)(g) == eps(g));
    CHECK(convolve(inv, f)(g) == eps(g));
  }
  CHECK_THROWS_AS(star_inverse(scalar_multiple(QPoly(2), one())), std::invalid_argument);
}

TEST_CASE("chromatic graphic function") {
  QFunction chi = chromatic_gf();
  CHECK(chi(path_graph(3)) == q * (q - QPoly(1)).pow(2));
  CHECK(chi(path_graph(1)) == q);
  CHECK(chi(cycle_graph(4)) == (q - QPoly(1)).pow(4) + (q - QPoly(1)));
  for (const Graph& g : graphs_up_to_5()) CHECK(chi.evaluate_direct(g) == chromatic_delcon(g));
}

TEST_CASE("multiplicative identity") {
  // X(xy) = X(x) * X(y) with y = q formal and enough rational x to interpolate
  for (int k = 0; k <= 5; ++k) {
    const QPoly x(Rational(k - 2, 3));
    QFunction lhs = chromatic_gf(x * q);
    QFunction rhs = convolve(chromatic_gf(x), chromatic_gf(q));
    for (const Graph& g : graphs_up_to_5()) CHECK(lhs(g) == rhs(g));
  }
}

TEST_CASE("gerst") {
  QFunction gerst = gerst_hilbert();
  CHECK(gerst(path_graph(2)) == QPoly(1) - q);
  CHECK(gerst(path_graph(1)) == QPoly(1));
  CHECK(gerst(complete_graph(3)) == QPoly(1) - QPoly(3) * q + QPoly(2) * q * q);
  for (const Graph& g : graphs_up_to_6())
    CHECK(gerst(g).eval(-1) == Rational(count_acyclic_orientations(g)));
}

TEST_CASE("complex wonderful compactification") {
  QFunction chi = wonderful_complex_hilbert();
  CHECK(chi(path_graph(3)) == QPoly(1) + q);
  CHECK(chi(complete_graph(4)) == QPoly(1) + QPoly(5) * q + q * q);
  CHECK(chi(path_graph(1)) == QPoly(1));
  for (int g = 1; g <= 8; ++g)
    CHECK(block_weight(g) == (q - QPoly::q_pow(g - 1)).divide_or_throw(q - QPoly(1), "block"));
  for (const Graph& g : graphs_up_to_6())
    if (g.n() >= 2) CHECK(chi(g).is_palindromic(g.n() - 2));
}

TEST_CASE("real wonderful compactification") {
  QFunction chi = wonderful_real_hilbert();
  CHECK(chi(complete_graph(3)) == QPoly(1) - q);
  CHECK(chi(path_graph(2)) == QPoly(1));
  CHECK(chi(path_graph(1)) == QPoly(1));
  for (const Graph& g : graphs_up_to_6()) CHECK(chi(g).is_integral());
}

TEST_CASE("hyper and grav") {
  QFunction hyper = hyper_weighted_hilbert();
  QFunction grav = grav_weighted_hilbert();
  CHECK(hyper(complete_graph(4)) == q + QPoly(5) * q * q + q.pow(3));
  CHECK(hyper(path_graph(1)) == QPoly(1));
  CHECK(grav(path_graph(2)) == -q);
  CHECK(grav(path_graph(1)) == QPoly(1));
  CHECK(grav(complete_graph(3)) == -q + QPoly(2) * q * q);
}

TEST_CASE("Koszul pairings") {
  QFunction lie_com = convolve(pointwise_product(one_x(q), mobius()), one_x(q));
  QFunction hyper_grav = convolve(hyper_weighted_hilbert(), grav_weighted_hilbert());
  QFunction eps = epsilon();
  for (const Graph& g : graphs_up_to_6()) {
    CHECK(lie_com(g) == eps(g));
    CHECK(hyper_grav(g) == eps(g));
  }
}

TEST_CASE("chromatic symmetric function of trees") {
  SymFunction x = chromatic_symfun_tree();
  CHECK(x(path_graph(1)) == SymFunc::p(1));
  CHECK(x(path_graph(2)) == SymFunc::p({1, 1}) - SymFunc::p(2));
  CHECK(x(path_graph(3)) == SymFunc::p({1, 1, 1}) - QPoly(2) * SymFunc::p({2, 1}) + SymFunc::p(3));
  CHECK_THROWS_AS(x(cycle_graph(4)), std::invalid_argument);
  for (const Graph& g : graphs_up_to_6())
    if (g.is_tree()) CHECK(x(g) == chromatic_symfun_direct(g));
  for (int n = 1; n <= 6; ++n) {
    SymFunc expected;
    for (const YoungDiagram& la : partitions_of(n)) {
      const int l = static_cast<int>(la.size());
      const Rational multinomial(factorial(l) / multiplicity_factorial(la));
      expected += QPoly((n - l) % 2 ? -multinomial : multinomial) * SymFunc::p(la);
    }
    CHECK(x(path_graph(n)) == expected);
  }
}
