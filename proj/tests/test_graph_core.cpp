#include <doctest.h>

#include "contractad/canonical.hpp"
#include "contractad/chromatic.hpp"
#include "contractad/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace contractad;

namespace {

// All set partitions of {0..n-1} via restricted growth strings, keeping those
// whose blocks are tubes.
std::set<std::vector<VertexSet>> brute_force_partitions(const Graph& g, bool odd_only) {
  const int n = g.n();
  std::set<std::vector<VertexSet>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<VertexSet> blocks(k, 0);
    for (int v = 0; v < n; ++v) blocks[rgs[v]] |= VertexSet{1} << v;
    bool ok = true;
    for (VertexSet b : blocks) {
      if (!g.is_connected(b)) ok = false;
      if (odd_only && popcount(b) % 2 == 0) ok = false;
    }
    if (ok) {
      std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
      out.insert(blocks);
    }
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int mx = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= mx) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
}

Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

const QPoly q = QPoly::q();

Integer bell(int n) {
  std::vector<std::vector<Integer>> a(n + 1);
  a[0] = {1};
  for (int i = 1; i <= n; ++i) {
    a[i].push_back(a[i - 1].back());
    for (int j = 0; j < i; ++j) a[i].push_back(a[i].back() + a[i - 1][j]);
  }
  return a[n][0];
}

}  // namespace

TEST_CASE("family graphs") {
  Graph p3 = path_graph(3);
  CHECK(p3.n() == 3);
  CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(canonical_key(complete_multipartite({2, 2})) == canonical_key(cycle_graph(4)));
  CHECK(canonical_key(complete_multipartite({3, 1})) == canonical_key(star_graph(3)));
  CHECK(star_graph(0).n() == 1);
  CHECK(complete_multipartite({1}).n() == 1);
  CHECK_THROWS_AS(complete_multipartite({3}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}

TEST_CASE("tubes and partitions") {
  auto tubes = enumerate_tubes(path_graph(3));
  CHECK(tubes.size() == 6);
  CHECK(std::find(tubes.begin(), tubes.end(), VertexSet{0b101}) == tubes.end());
  CHECK(enumerate_partitions(path_graph(3)).size() == 4);
  CHECK(enumerate_partitions(complete_graph(3), true).size() == 2);

  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_partitions(path_graph(n)).size() == (std::size_t{1} << (n - 1)));
    CHECK(Integer(enumerate_partitions(complete_graph(n)).size()) == bell(n));
    for (const Graph& g : {path_graph(n), complete_graph(n)}) {
      auto bf = brute_force_partitions(g, false);
      auto parts = enumerate_partitions(g);
      CHECK(std::set<Partition>(parts.begin(), parts.end()) == bf);
    }
  }
  std::mt19937 rng(1);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_connected(rng, 3 + i % 5, 0.4);
    for (bool odd : {false, true}) {
      auto parts = enumerate_partitions(g, odd);
      std::set<Partition> uniq(parts.begin(), parts.end());
      CHECK(uniq.size() == parts.size());
      CHECK(uniq == brute_force_partitions(g, odd));
    }
  }
}

TEST_CASE("contraction") {
  Graph c4 = cycle_graph(4);
  CHECK(canonical_key(contract_tube(c4, 0b0110)) == canonical_key(complete_graph(3)));
  // cross-block edge of K_{2,2}: vertices 0,1 in one part, 2,3 in the other
  Graph k22 = complete_multipartite({2, 2});
  CHECK(multipartite_parts(contract_tube(k22, 0b0101)) == std::vector<int>{1, 1, 1});
  for (const Graph& g : {c4, complete_graph(4), star_graph(3)}) {
    Partition singles;
    for (int v = 0; v < g.n(); ++v) singles.push_back(VertexSet{1} << v);
    CHECK(contract(g, singles) == g);
  }
  CHECK_THROWS_AS(contract(path_graph(3), {0b101, 0b010}), std::invalid_argument);
  CHECK_THROWS_AS(contract(path_graph(3), {0b011}), std::invalid_argument);
  CHECK_THROWS_AS(contract_tube(path_graph(3), 0b101), std::invalid_argument);

  std::mt19937 rng(2);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_connected(rng, 2 + i % 6, 0.5);
    for_each_partition(g, false, [&](const Partition& p) {
      Graph h = contract(g, p);
      CHECK(h.is_connected());
      for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
          CHECK(h.adjacent(a, b) == g.is_connected(p[a] | p[b]));
    });
  }
}

TEST_CASE("multipartite graphs are closed under contraction and restriction") {
  std::vector<std::vector<int>> shapes = {{2, 2}, {3, 1}, {2, 1, 1}, {3, 2}, {2, 2, 2}, {3, 2, 1}, {4, 1}};
  for (const auto& lam : shapes) {
    Graph g = complete_multipartite(lam);
    for (VertexSet t : enumerate_tubes(g)) CHECK(multipartite_parts(g.induced(t)).has_value());
    for_each_partition(g, false, [&](const Partition& p) { CHECK(multipartite_parts(contract(g, p)).has_value()); });
  }
  CHECK_FALSE(multipartite_parts(path_graph(4)).has_value());
  CHECK(multipartite_parts(path_graph(3)) == std::vector<int>{2, 1});
}

TEST_CASE("canonical keys") {
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_connected(rng, 3 + i % 8, 0.35);
    std::string k = canonical_key(g);
    for (int j = 0; j < 20; ++j) CHECK(canonical_key(random_relabel(g, rng)) == k);
  }
  // isomorphism class counts of connected graphs: 1, 1, 2, 6, 21, 112
  const std::size_t classes[] = {0, 1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) CHECK(connected_graphs(n).size() == classes[n]);
  CHECK(canonical_key(path_graph(20)) == "P20");
  CHECK(canonical_key(complete_graph(15)) == "K1,1,1,1,1,1,1,1,1,1,1,1,1,1,1");
  Graph big = path_graph(13);
  big.add_edge(0, 2);
  CHECK_THROWS_AS(canonical_key(big), std::length_error);
  CHECK_FALSE(try_canonical_key(big).has_value());
}

TEST_CASE("chromatic polynomial and colouring oracles") {
  CHECK(chromatic_delcon(complete_graph(3)) == q * (q - QPoly(1)) * (q - QPoly(2)));
  CHECK(chromatic_delcon(path_graph(1)) == q);
  CHECK(chromatic_delcon(cycle_graph(4)) == (q - QPoly(1)).pow(4) + (q - QPoly(1)));
  CHECK(chromatic_delcon(Graph(3)) == q.pow(3));
  std::mt19937 rng(4);
  for (int i = 0; i < 25; ++i) {
    Graph g = random_connected(rng, 2 + i % 6, 0.5);
    QPoly chi = chromatic_delcon(g);
    for (unsigned k = 0; k <= 4; ++k) CHECK(chi.eval(k) == Rational(count_proper_colorings(g, k)));
    CHECK(chromatic_delcon(random_relabel(g, rng)) == chi);
  }
  CHECK(count_acyclic_orientations(path_graph(3)) == 4);
  CHECK(count_acyclic_orientations(complete_graph(3)) == 6);
  CHECK(count_acyclic_orientations(cycle_graph(4)) == 14);
}

TEST_CASE("graph text and graph6 formats") {
  Graph g = parse_graph_text("n=4\n0 1\n1 2 # comment\n\n2 3\n");
  CHECK(g == path_graph(4));
  CHECK(parse_graph_text(to_graph_text(cycle_graph(5))) == cycle_graph(5));
  CHECK_THROWS_AS(parse_graph_text("n=3\n0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("n=3\n0 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("n=3\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("n=3\n0 1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("n=x\n"), std::invalid_argument);

  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("C~") == complete_graph(4));
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Graph h = random_connected(rng, 1 + i % 12, 0.3);
    CHECK(parse_graph6(to_graph6(h)) == h);
  }
  CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("Bh"), std::invalid_argument);
}
