#include "contractad/trees.hpp"

#include "contractad/chromatic.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace contractad {

namespace {

void check_cap(const Graph& g, const char* what) {
  if (g.n() > kTreeCap)
    throw std::length_error(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceed the tree cap of " +
                            std::to_string(kTreeCap));
  if (!g.is_connected()) throw std::invalid_argument(std::string(what) + ": graph must be connected");
}

Graph reorder(const Graph& g, const VertexOrder& order) {
  if (order.empty()) return g;
  if (static_cast<int>(order.size()) != g.n()) throw std::invalid_argument("vertex order has the wrong length");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < g.n(); ++i)
    if (sorted[i] != i) throw std::invalid_argument("vertex order is not a permutation");
  return g.relabel(order);
}

AdmissibleTree leaf(int v) { return {VertexSet{1} << v, {}}; }

bool adjacent_sets(const Graph& g, VertexSet a, VertexSet b) { return (g.neighbors_of_set(a) & b) != 0; }

// Partitions of s into tubes, blocks listed by increasing minimum.
void for_each_tube_partition(const Graph& g, VertexSet s, std::vector<VertexSet>& blocks,
                             const std::function<void(const std::vector<VertexSet>&)>& visit) {
  if (s == 0) {
    visit(blocks);
    return;
  }
  const VertexSet low = VertexSet{1} << lowest(s);
  const VertexSet rest = s & ~low;
  // subsets of rest, each joined with low
  for (VertexSet sub = rest;; sub = (sub - 1) & rest) {
    const VertexSet block = sub | low;
    if (g.is_connected(block)) {
      blocks.push_back(block);
      for_each_tube_partition(g, s & ~block, blocks, visit);
      blocks.pop_back();
    }
    if (sub == 0) break;
  }
}

class TreeBuilder {
 public:
  TreeBuilder(const Graph& g, TreeShape shape) : g_(g), shape_(shape) {}

  const std::vector<AdmissibleTree>& trees(VertexSet s, bool root) {
    const auto key = std::make_pair(s, root);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<AdmissibleTree> out;
    if (popcount(s) == 1) {
      out.push_back(leaf(lowest(s)));
    } else {
      const bool binary = shape_ == TreeShape::binary || (shape_ == TreeShape::grav && !root);
      std::vector<VertexSet> blocks;
      for_each_tube_partition(g_, s, blocks, [&](const std::vector<VertexSet>& p) {
        if (p.size() < 2 || (binary && p.size() != 2)) return;
        std::vector<const std::vector<AdmissibleTree>*> options;
        for (VertexSet b : p) options.push_back(&trees(b, false));
        std::vector<std::size_t> idx(p.size(), 0);
        while (true) {
          AdmissibleTree t{s, {}};
          for (std::size_t i = 0; i < p.size(); ++i) t.children.push_back((*options[i])[idx[i]]);
          out.push_back(std::move(t));
          std::size_t i = 0;
          while (i < p.size() && ++idx[i] == options[i]->size()) idx[i++] = 0;
          if (i == p.size()) break;
        }
      });
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  const Graph& g_;
  TreeShape shape_;
  std::map<std::pair<VertexSet, bool>, std::vector<AdmissibleTree>> memo_;
};

// Visits every internal vertex; stops early when visit returns false.
bool all_internal(const AdmissibleTree& t, const std::function<bool(const AdmissibleTree&)>& visit) {
  if (t.is_leaf()) return true;
  if (!visit(t)) return false;
  for (const auto& c : t.children)
    if (!all_internal(c, visit)) return false;
  return true;
}

bool is_binary_internal(const AdmissibleTree& t) { return t.children.size() == 2; }

bool grav_shape(const AdmissibleTree& t) {
  for (const auto& c : t.children)
    if (!all_internal(c, is_binary_internal)) return false;
  return true;
}

bool lie_normal(const Graph& g, const AdmissibleTree& t) {
  return all_internal(t, [&](const AdmissibleTree& v) {
    const AdmissibleTree& a = v.children[0];
    if (a.is_leaf()) return true;
    const VertexSet l1 = a.children[0].leaves, l2 = a.children[1].leaves, l3 = v.children[1].leaves;
    return g.is_connected(l1 | l3) && lowest(l2) > lowest(l3);
  });
}

bool hyper_normal(const Graph& g, const AdmissibleTree& t) {
  return all_internal(t, [&](const AdmissibleTree& v) {
    for (std::size_t j = 0; j < v.children.size(); ++j) {
      const AdmissibleTree& w = v.children[j];
      if (!is_binary_internal(w)) continue;
      if (j != 0) return false;
      const VertexSet t1 = w.children[0].leaves, t2 = w.children[1].leaves;
      for (std::size_t i = 1; i < v.children.size(); ++i) {
        const VertexSet ti = v.children[i].leaves;
        if (g.is_connected(ti | t1) && lowest(ti) < lowest(t2)) return false;
      }
    }
    return true;
  });
}

bool grav_normal(const Graph& g, const AdmissibleTree& t) {
  return all_internal(t, [&](const AdmissibleTree& v) {
    const AdmissibleTree& w = v.children[0];
    if (!is_binary_internal(w)) return true;
    const VertexSet t1 = w.children[0].leaves, t2 = w.children[1].leaves;
    // neighbour of t1 with the smallest minimum among t2 and the siblings of w
    VertexSet best = t2;
    for (std::size_t i = 1; i < v.children.size(); ++i) {
      const VertexSet ti = v.children[i].leaves;
      if (adjacent_sets(g, t1, ti) && lowest(ti) < lowest(best)) best = ti;
    }
    return best != t2;
  });
}

std::vector<Integer> graded_counts(const std::vector<AdmissibleTree>& trees,
                                   const std::function<bool(const AdmissibleTree&)>& normal) {
  std::vector<Integer> counts;
  for (const auto& t : trees) {
    if (!normal(t)) continue;
    const int r = t.internal_vertices();
    if (static_cast<int>(counts.size()) < r) counts.resize(r, Integer(0));
    ++counts[r - 1];
  }
  return counts;
}


// Sparse row over column indices, kept in decreasing column order.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Echelon basis with the largest column of each row as its pivot.
class Echelon {
 public:
  void insert(std::map<int, Rational, std::greater<int>> entries) {
    SparseRow row;
    for (auto& [c, v] : entries)
      if (v != 0) row.emplace_back(c, std::move(v));
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Rational lead = row.front().second;
        for (auto& e : row) e.second /= lead;
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }
  bool is_pivot(int c) const { return pivots_.count(c) != 0; }

 private:
  static SparseRow subtract(const SparseRow& a, const Rational& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first > a[i].first) {
        out.emplace_back(b[j].first, -f * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second - f * b[j].second;
        if (v != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }
  std::map<int, SparseRow> pivots_;
};

void preorder(const AdmissibleTree& t, std::vector<VertexSet>& out) {
  if (t.is_leaf()) return;
  out.push_back(t.leaves);
  for (const auto& c : t.children) preorder(c, out);
}

// Replaces the vertex v at `path` by a vertex whose child w collects the
// children of v listed in `group` (bitmask over child positions).
AdmissibleTree split(const AdmissibleTree& t, const std::vector<int>& path, std::size_t depth, unsigned group) {
  AdmissibleTree out = t;
  if (depth < path.size()) {
    out.children[path[depth]] = split(t.children[path[depth]], path, depth + 1, group);
    return out;
  }
  AdmissibleTree w{0, {}};
  out.children.clear();
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (group >> i & 1) {
      w.leaves |= t.children[i].leaves;
      w.children.push_back(t.children[i]);
    } else {
      out.children.push_back(t.children[i]);
    }
  }
  out.children.push_back(std::move(w));
  std::sort(out.children.begin(), out.children.end(),
            [](const AdmissibleTree& a, const AdmissibleTree& b) { return lowest(a.leaves) < lowest(b.leaves); });
  return out;
}

// Koszul sign of a split when every internal vertex is odd: internal vertices
// are read in preorder, and the inserted pair starts as (v, w) at v's slot.
int split_sign(const AdmissibleTree& before, const AdmissibleTree& after, VertexSet v, VertexSet w) {
  std::vector<VertexSet> old_order, new_order;
  preorder(before, old_order);
  preorder(after, new_order);
  std::vector<VertexSet> seq;
  for (VertexSet x : old_order) {
    seq.push_back(x);
    if (x == v) seq.push_back(w);
  }
  std::vector<std::size_t> perm;
  for (VertexSet x : new_order) perm.push_back(std::find(seq.begin(), seq.end(), x) - seq.begin());
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 ? -1 : 1;
}

void for_each_vertex(const AdmissibleTree& t, std::vector<int>& path,
                     const std::function<void(const AdmissibleTree&, const std::vector<int>&)>& visit) {
  if (t.is_leaf()) return;
  visit(t, path);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    for_each_vertex(t.children[i], path, visit);
    path.pop_back();
  }
}

// Relations at one vertex as lists of (child group, coefficient).
using VertexRelation = std::vector<std::pair<unsigned, int>>;

std::vector<VertexRelation> vertex_relations(const Graph& g, const AdmissibleTree& v, Presentation p) {
  const std::size_t k = v.children.size();
  std::vector<VertexRelation> out;
  if (k < 3) return out;
  auto union_of = [&](unsigned group) {
    VertexSet s = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (group >> i & 1) s |= v.children[i].leaves;
    return s;
  };
  const unsigned full = (1u << k) - 1;
  std::vector<unsigned> edges, tubes;
  for (unsigned group = 1; group < full; ++group) {
    if (popcount(group) < 2 || !g.is_connected(union_of(group))) continue;
    tubes.push_back(group);
    if (popcount(group) == 2) edges.push_back(group);
  }
  switch (p) {
    case Presentation::lie: {
      if (k != 3) return out;
      VertexRelation jacobi;
      // [[a,b],c] + [[b,c],a] + [[c,a],b] with children sorted and brackets
      // antisymmetric, dropping brackets of non-adjacent blocks
      for (auto [group, sign] : {std::pair{3u, 1}, std::pair{6u, -1}, std::pair{5u, -1}})
        if (std::find(edges.begin(), edges.end(), group) != edges.end()) jacobi.emplace_back(group, sign);
      out.push_back(std::move(jacobi));
      break;
    }
    case Presentation::hyper: {
      auto through = [&](unsigned e) {
        VertexRelation r;
        for (unsigned t : tubes)
          if ((t & e) == e) r.emplace_back(t, 1);
        return r;
      };
      const VertexRelation first = through(edges.front());
      for (std::size_t i = 1; i < edges.size(); ++i) {
        VertexRelation r = through(edges[i]);
        for (auto [t, c] : first) r.emplace_back(t, -c);
        out.push_back(std::move(r));
      }
      break;
    }
    case Presentation::grav: {
      VertexRelation edge_type;
      for (unsigned e : edges) edge_type.emplace_back(e, 1);
      out.push_back(std::move(edge_type));
      for (unsigned t : tubes) {
        if (popcount(t) < 3) continue;
        VertexRelation r;
        for (unsigned e : edges)
          if ((t & e) == e) r.emplace_back(e, 1);
        r.emplace_back(t, -1);
        out.push_back(std::move(r));
      }
      break;
    }
  }
  return out;
}

bool all_binary_but_one_ternary(const AdmissibleTree& t) {
  int ternary = 0;
  bool ok = all_internal(t, [&](const AdmissibleTree& v) {
    if (v.children.size() == 3) ++ternary;
    return v.children.size() <= 3;
  });
  return ok && ternary == 1;
}

bool tree_before(const AdmissibleTree& a, const AdmissibleTree& b) {
  const int ra = a.internal_vertices(), rb = b.internal_vertices();
  if (ra != rb) return ra < rb;
  return a.to_string() < b.to_string();
}
}  // namespace

int AdmissibleTree::internal_vertices() const {
  if (is_leaf()) return 0;
  int r = 1;
  for (const auto& c : children) r += c.internal_vertices();
  return r;
}

std::string AdmissibleTree::to_string() const {
  if (is_leaf()) return std::to_string(lowest(leaves));
  std::string s = "(";
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i) s += ",";
    s += children[i].to_string();
  }
  return s + ")";
}

bool is_admissible(const Graph& g, const AdmissibleTree& t) {
  if (!g.is_tube(t.leaves)) return false;
  if (t.is_leaf()) return popcount(t.leaves) == 1;
  VertexSet seen = 0;
  int prev_min = -1;
  for (const auto& c : t.children) {
    if ((c.leaves & seen) || lowest(c.leaves) <= prev_min) return false;
    seen |= c.leaves;
    prev_min = lowest(c.leaves);
    if (!is_admissible(g, c)) return false;
  }
  return seen == t.leaves && t.children.size() >= 2;
}

std::vector<AdmissibleTree> enumerate_admissible(const Graph& g, TreeShape shape) {
  check_cap(g, "enumerate_admissible");
  TreeBuilder b(g, shape);
  return b.trees(g.all(), true);
}

Integer count_nested_sets(const Graph& g) {
  check_cap(g, "count_nested_sets");
  std::vector<VertexSet> tubes;
  for (VertexSet s = 1; s < g.all(); ++s)
    if (popcount(s) >= 2 && g.is_connected(s)) tubes.push_back(s);
  Integer count = 0;
  std::vector<VertexSet> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    ++count;
    for (std::size_t i = from; i < tubes.size(); ++i) {
      const VertexSet t = tubes[i];
      bool ok = true;
      for (VertexSet c : chosen) {
        const VertexSet x = c & t;
        if (x != 0 && x != c && x != t) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(t);
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return count;
}

AdmissibleTree gccom_normal(const Graph& graph, const VertexOrder& order) {
  check_cap(graph, "gccom_normal");
  const Graph g = reorder(graph, order);
  std::vector<AdmissibleTree> blocks;
  for (int v = 0; v < g.n(); ++v) blocks.push_back(leaf(v));
  while (blocks.size() > 1) {
    // blocks stay sorted by minimum, so blocks[0] holds the minimal vertex
    std::size_t best = 0;
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (adjacent_sets(g, blocks[0].leaves, blocks[i].leaves)) {
        best = i;
        break;
      }
    if (best == 0) throw std::logic_error("gccom_normal: minimal block has no neighbour");
    AdmissibleTree merged{blocks[0].leaves | blocks[best].leaves, {blocks[0], blocks[best]}};
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(best));
    blocks[0] = std::move(merged);
  }
  AdmissibleTree t = std::move(blocks[0]);
  if (!is_admissible(g, t)) throw std::logic_error("gccom_normal: result is not admissible");
  for (const AdmissibleTree* v = &t; !v->is_leaf(); v = &v->children[0])
    if (v->children.size() != 2 || !v->children[1].is_leaf())
      throw std::logic_error("gccom_normal: result is not a left comb");
  return t;
}

std::vector<AdmissibleTree> normal_monomials(const Graph& graph, Presentation p, const VertexOrder& order) {
  check_cap(graph, "normal_monomials");
  const Graph g = reorder(graph, order);
  if (g.n() == 1) return {};
  const TreeShape shape = p == Presentation::lie ? TreeShape::binary : TreeShape::stable;
  std::vector<AdmissibleTree> columns = enumerate_admissible(g, shape);
  std::sort(columns.begin(), columns.end(), tree_before);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index.emplace(columns[i].to_string(), static_cast<int>(i));

  // relations sit one weight below the trees they span
  std::vector<AdmissibleTree> sources;
  if (p == Presentation::lie) {
    for (auto& t : enumerate_admissible(g, TreeShape::stable))
      if (all_binary_but_one_ternary(t)) sources.push_back(std::move(t));
  } else {
    sources = enumerate_admissible(g, TreeShape::stable);
  }
  Echelon echelon;
  for (const AdmissibleTree& t : sources) {
    std::vector<int> path;
    for_each_vertex(t, path, [&](const AdmissibleTree& v, const std::vector<int>& at) {
      for (const VertexRelation& rel : vertex_relations(g, v, p)) {
        std::map<int, Rational, std::greater<int>> row;
        for (auto [group, c] : rel) {
          AdmissibleTree s = split(t, at, 0, group);
          int sign = c;
          if (p == Presentation::grav) {
            VertexSet w = 0;
            for (std::size_t i = 0; i < v.children.size(); ++i)
              if (group >> i & 1) w |= v.children[i].leaves;
            sign *= split_sign(t, s, v.leaves, w);
          }
          row[index.at(s.to_string())] += sign;
        }
        echelon.insert(std::move(row));
      }
    });
  }
  std::vector<AdmissibleTree> normal;
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (!echelon.is_pivot(static_cast<int>(i))) normal.push_back(std::move(columns[i]));
  return normal;
}

Integer gclie_normal_count(const Graph& g, const VertexOrder& order) {
  if (g.n() == 1) return 1;  // the unit
  return Integer(normal_monomials(g, Presentation::lie, order).size());
}

std::vector<Integer> gchyper_normal_counts(const Graph& g, const VertexOrder& order) {
  return graded_counts(normal_monomials(g, Presentation::hyper, order), [](const AdmissibleTree&) { return true; });
}

std::vector<Integer> gcgrav_normal_counts(const Graph& g, const VertexOrder& order) {
  return graded_counts(normal_monomials(g, Presentation::grav, order), [](const AdmissibleTree&) { return true; });
}

bool quadratic_normal(const Graph& g, Presentation p, const AdmissibleTree& t) {
  switch (p) {
    case Presentation::lie:
      return all_internal(t, is_binary_internal) && lie_normal(g, t);
    case Presentation::hyper:
      return hyper_normal(g, t);
    case Presentation::grav:
      return grav_shape(t) && grav_normal(g, t);
  }
  return false;
}

std::vector<Integer> quadratic_normal_counts(const Graph& graph, Presentation p, const VertexOrder& order) {
  check_cap(graph, "quadratic_normal_counts");
  const Graph g = reorder(graph, order);
  if (g.n() == 1) return {};
  const TreeShape shape =
      p == Presentation::lie ? TreeShape::binary : p == Presentation::hyper ? TreeShape::stable : TreeShape::grav;
  return graded_counts(enumerate_admissible(g, shape),
                       [&](const AdmissibleTree& t) { return quadratic_normal(g, p, t); });
}

Integer gcass_dimension(const Graph& g) {
  check_cap(g, "gcass_dimension");
  const int n = g.n();
  auto encode = [n](const std::vector<int>& p) {
    std::uint64_t c = 0;
    for (int x : p) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(x);
    return c;
  };
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::unordered_set<std::uint64_t> seen;
  Integer classes = 0;
  do {
    if (!seen.insert(encode(perm)).second) continue;
    ++classes;
    std::deque<std::vector<int>> queue{perm};
    while (!queue.empty()) {
      std::vector<int> p = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i + 1 < n; ++i) {
        if (g.adjacent(p[i], p[i + 1])) continue;
        std::swap(p[i], p[i + 1]);
        if (seen.insert(encode(p)).second) queue.push_back(p);
        std::swap(p[i], p[i + 1]);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (classes != count_acyclic_orientations(g))
    throw std::logic_error("gcass_dimension: class count differs from the acyclic-orientation count");
  return classes;
}

}  // namespace contractad
