#include "contractad/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace contractad {

namespace {

std::optional<std::string> family_key(const Graph& g) {
  if (auto parts = multipartite_parts(g)) {
    std::string k = "K";
    for (std::size_t i = 0; i < parts->size(); ++i) k += (i ? "," : "") + std::to_string((*parts)[i]);
    return k;
  }
  if (!g.is_connected()) return std::nullopt;
  int max_deg = 0, min_deg = g.n();
  for (int v = 0; v < g.n(); ++v) {
    max_deg = std::max(max_deg, g.degree(v));
    min_deg = std::min(min_deg, g.degree(v));
  }
  if (max_deg <= 2 && g.edge_count() == g.n() - 1) return "P" + std::to_string(g.n());
  if (min_deg == 2 && max_deg == 2) return "C" + std::to_string(g.n());
  return std::nullopt;
}

// Ordered-partition refinement: colours are dense ranks, refined by the
// multiset of neighbour colours until stable.
void refine(const Graph& g, std::vector<int>& col) {
  const int n = g.n();
  int k = *std::max_element(col.begin(), col.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n, std::vector<int>(k + 1, 0));
    for (int v = 0; v < n; ++v) {
      sig[v][0] = col[v];
      for (VertexSet t = g.neighbors(v); t; t &= t - 1) ++sig[v][1 + col[lowest(t)]];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    std::vector<int> next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    col.swap(next);
    if (rank + 1 == k) return;
    k = rank + 1;
  }
}

struct Canonizer {
  const Graph& g;
  std::vector<VertexSet> best;
  std::vector<int> best_perm;

  void search(std::vector<int> col) {
    refine(g, col);
    const int n = g.n();
    std::vector<int> count(n, 0);
    for (int c : col) ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(col);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (col[v] != target) continue;
      std::vector<int> ind(n);
      for (int u = 0; u < n; ++u) ind[u] = 2 * col[u] + ((col[u] == target && u != v) ? 1 : 0);
      search(ind);
    }
  }

  void leaf(const std::vector<int>& perm) {
    const int n = g.n();
    std::vector<VertexSet> rows(n, 0);
    for (int u = 0; u < n; ++u)
      for (VertexSet t = g.neighbors(u); t; t &= t - 1) rows[perm[u]] |= VertexSet{1} << perm[lowest(t)];
    if (best.empty() || rows < best) {
      best = rows;
      best_perm = perm;
    }
  }
};

std::string generic_key(const Graph& g, std::vector<int>* labeling) {
  if (g.n() > kCanonicalCap)
    throw std::length_error("canonical_key: generic graph on " + std::to_string(g.n()) +
                            " vertices exceeds the cap of " + std::to_string(kCanonicalCap) +
                            "; use the path/cycle/complete/star/multipartite constructors for larger graphs");
  Canonizer c{g, {}, {}};
  if (g.n() > 0) c.search(std::vector<int>(g.n(), 0));
  if (labeling) *labeling = c.best_perm;
  static const char* hex = "0123456789abcdef";
  std::string k = "G" + std::to_string(g.n()) + ":";
  for (VertexSet r : c.best)
    for (int s = 28; s >= 0; s -= 4)
      if (s < ((g.n() + 3) / 4) * 4) k += hex[(r >> s) & 15u];
  return k;
}

struct KeyCache {
  std::shared_mutex mu;
  std::unordered_map<std::string, std::string> map;
};

KeyCache& cache() {
  static KeyCache c;
  return c;
}

constexpr std::size_t kKeyCacheLimit = 1u << 20;

}  // namespace

std::string canonical_key(const Graph& g) {
  const std::string code = g.code();
  KeyCache& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.map.find(code);
    if (it != c.map.end()) return it->second;
  }
  std::string key;
  if (auto fk = family_key(g))
    key = *fk;
  else
    key = generic_key(g, nullptr);
  std::unique_lock lock(c.mu);
  if (c.map.size() >= kKeyCacheLimit) c.map.clear();
  c.map.emplace(code, key);
  return key;
}

std::optional<std::string> try_canonical_key(const Graph& g) {
  try {
    return canonical_key(g);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

std::vector<int> canonical_labeling(const Graph& g) {
  std::vector<int> perm;
  generic_key(g, &perm);
  return perm;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("connected_graphs: n must be in 1..7");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::pair<std::string, Graph>> found;
  std::unordered_map<std::string, std::size_t> seen;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) < n - 1) continue;
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) g.add_edge(slots[i].first, slots[i].second);
    if (!g.is_connected()) continue;
    std::string key = canonical_key(g);
    if (seen.emplace(key, found.size()).second) found.emplace_back(key, g);
  }
  std::vector<Graph> out;
  for (auto& [k, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto part = connected_graphs(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace contractad
