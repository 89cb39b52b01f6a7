#pragma once

#include "contractad/graph.hpp"

#include <optional>
#include <string>

namespace contractad {

// Vertex count above which generic graphs are not canonicalized.
constexpr int kCanonicalCap = 12;

// Isomorphism-invariant key.  Complete multipartite graphs, paths and cycles
// get parametric keys ("K3,1", "P7", "C6") at any size; other graphs are
// canonicalized by individualization-refinement up to kCanonicalCap vertices,
// beyond which std::length_error is thrown.
std::string canonical_key(const Graph& g);
// Same, but nullopt instead of throwing above the cap.
std::optional<std::string> try_canonical_key(const Graph& g);

// Relabeling that realizes the canonical adjacency order for generic graphs.
std::vector<int> canonical_labeling(const Graph& g);

// One representative per isomorphism class of connected graphs on exactly n
// vertices, found by scanning every edge subset of K_n (n <= 7).
std::vector<Graph> connected_graphs(int n);
// Same, for every vertex count 1..max_n.
std::vector<Graph> connected_graphs_up_to(int max_n);

}  // namespace contractad
