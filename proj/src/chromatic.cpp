#include "contractad/chromatic.hpp"

#include "contractad/canonical.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace contractad {

namespace {

struct ChromaticMemo {
  std::shared_mutex mu;
  std::unordered_map<std::string, QPoly> map;
};

ChromaticMemo& memo() {
  static ChromaticMemo m;
  return m;
}

QPoly falling(int n) {
  QPoly r(1);
  for (int i = 0; i < n; ++i) r *= QPoly::q() - QPoly(i);
  return r;
}

QPoly delcon(const Graph& g) {
  const int n = g.n();
  const int m = g.edge_count();
  if (m == 0) return QPoly::q_pow(n);
  if (m == n * (n - 1) / 2) return falling(n);

  if (!g.is_connected()) {
    QPoly r(1);
    VertexSet rest = g.all();
    while (rest) {
      VertexSet comp = VertexSet{1} << lowest(rest), frontier = comp;
      while (frontier) {
        VertexSet next = g.neighbors_of_set(frontier) & ~comp;
        comp |= next;
        frontier = next;
      }
      r *= chromatic_delcon(g.induced(comp));
      rest &= ~comp;
    }
    return r;
  }
  if (m == n - 1) return QPoly::q() * (QPoly::q() - QPoly(1)).pow(n - 1);

  int u = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(u)) u = v;
  int w = -1;
  for (VertexSet t = g.neighbors(u); t; t &= t - 1) {
    int c = lowest(t);
    if (w < 0 || g.degree(c) > g.degree(w)) w = c;
  }
  Graph del = g;
  del.remove_edge(u, w);
  Graph con = contract_tube(g, (VertexSet{1} << u) | (VertexSet{1} << w));
  return chromatic_delcon(del) - chromatic_delcon(con);
}

}  // namespace

QPoly chromatic_delcon(const Graph& g) {
  auto key = try_canonical_key(g);
  if (!key) return delcon(g);
  ChromaticMemo& mm = memo();
  {
    std::shared_lock lock(mm.mu);
    auto it = mm.map.find(*key);
    if (it != mm.map.end()) return it->second;
  }
  QPoly value = delcon(g);
  std::unique_lock lock(mm.mu);
  mm.map.emplace(*key, value);  // values are deterministic, so racing inserts agree
  return value;
}

Integer count_acyclic_orientations(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw std::invalid_argument("count_acyclic_orientations: graph too large");
  std::vector<Integer> dp(std::size_t{1} << n);
  dp[0] = 1;
  for (VertexSet mask = 1; mask < (VertexSet{1} << n); ++mask) {
    Integer acc = 0;
    for (VertexSet s = mask; s; s = (s - 1) & mask) {
      if (g.neighbors_of_set(s) & s) continue;  // not independent
      if (popcount(s) % 2)
        acc += dp[mask & ~s];
      else
        acc -= dp[mask & ~s];
    }
    dp[mask] = acc;
  }
  Integer a = dp[g.all()];
  Rational check = chromatic_delcon(g).eval(-1);
  if (n % 2) check = -check;
  if (check != Rational(a)) throw std::logic_error("acyclic orientation count disagrees with chromatic polynomial");
  return a;
}

namespace {

void colour_rec(const Graph& g, int v, unsigned k, std::vector<unsigned>& col, Integer& count) {
  if (v == g.n()) {
    ++count;
    return;
  }
  for (unsigned c = 0; c < k; ++c) {
    bool ok = true;
    for (VertexSet t = g.neighbors(v) & ((VertexSet{1} << v) - 1); t; t &= t - 1)
      if (col[lowest(t)] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    col[v] = c;
    colour_rec(g, v + 1, k, col, count);
  }
}

}  // namespace

Integer count_proper_colorings(const Graph& g, unsigned k) {
  Integer count = 0;
  std::vector<unsigned> col(g.n());
  colour_rec(g, 0, k, col, count);
  return count;
}

}  // namespace contractad
