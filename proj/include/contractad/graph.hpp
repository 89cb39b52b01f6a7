#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contractad {

using VertexSet = std::uint32_t;
constexpr int kMaxVertices = 32;

inline int popcount(VertexSet s) { return __builtin_popcount(s); }
inline int lowest(VertexSet s) { return __builtin_ctz(s); }

// Simple undirected graph on vertices 0..n-1, stored as adjacency bitmasks.
// Connectivity is not enforced here; contractad-facing entry points check it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  VertexSet all() const { return n_ == 32 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet neighbors_of_set(VertexSet s) const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  int degree(int v) const { return popcount(adj_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  // Throws std::invalid_argument on loops, duplicates and out-of-range labels.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool is_connected() const { return n_ > 0 && is_connected(all()); }
  // Connectivity of the induced subgraph on s (s non-empty).
  bool is_connected(VertexSet s) const;
  bool is_tube(VertexSet s) const { return s != 0 && (s & ~all()) == 0 && is_connected(s); }
  bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

  // Induced subgraph, vertices renumbered in increasing order.
  Graph induced(VertexSet s) const;
  // Vertex v becomes perm[v].
  Graph relabel(const std::vector<int>& perm) const;

  // Label-dependent encoding, usable as a hash key for this exact labeling.
  std::string code() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

// Blocks ordered by their minimal vertex.
using Partition = std::vector<VertexSet>;

// Throws std::invalid_argument when the blocks do not form a graph partition.
void validate_partition(const Graph& g, const Partition& blocks);
// Block i becomes vertex i; blocks are adjacent iff some edge joins them.
Graph contract(const Graph& g, const Partition& blocks);
// Contracts a single tube, keeping the other vertices as singletons.
Graph contract_tube(const Graph& g, VertexSet tube);
Partition tube_partition(const Graph& g, VertexSet tube);

std::vector<VertexSet> enumerate_tubes(const Graph& g);
// Calls visit once per graph partition.  Blocks are generated around the
// minimal uncovered vertex, so no partition is produced twice.
void for_each_partition(const Graph& g, bool odd_only,
                        const std::function<void(const Partition&)>& visit);
std::vector<Partition> enumerate_partitions(const Graph& g, bool odd_only = false);

enum class Family { path, cycle, complete, star, multipartite };

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// n leaves around the core vertex 0.
Graph star_graph(int n);
// Parts laid out consecutively.  lambda must be a partition with at least two
// parts, or the single part (1).
Graph complete_multipartite(const std::vector<int>& lambda);
Graph family_graph(Family kind, int n);

// Part sizes (descending) when g is complete multipartite, i.e. when
// non-adjacency is an equivalence relation on the vertices.
std::optional<std::vector<int>> multipartite_parts(const Graph& g);

// Text format: "n=<int>" then one "u v" pair per line.  '#' starts a comment.
Graph parse_graph_text(const std::string& text);
std::string to_graph_text(const Graph& g);
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

}  // namespace contractad
