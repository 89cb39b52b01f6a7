#pragma once

#include "contractad/graph.hpp"
#include "contractad/rational.hpp"

#include <string>
#include <vector>

namespace contractad {

// Rooted tree with leaves labelled by graph vertices.  Children are kept in
// increasing order of their minimal leaf (shuffle planarity).
struct AdmissibleTree {
  VertexSet leaves = 0;
  std::vector<AdmissibleTree> children;  // empty for a leaf

  bool is_leaf() const { return children.empty(); }
  int internal_vertices() const;
  std::string to_string() const;
  friend bool operator==(const AdmissibleTree&, const AdmissibleTree&) = default;
};

// stable: every internal vertex has >= 2 children.
// binary: every internal vertex has exactly 2 children.
// grav:   the root has >= 2 children, all other internal vertices exactly 2.
enum class TreeShape { stable, binary, grav };

constexpr int kTreeCap = 8;

// Every subtree's leaf set is a tube, children partition their parent's leaves
// and are ordered by minimal leaf.
bool is_admissible(const Graph& g, const AdmissibleTree& t);

// All admissible trees of a connected graph with the given shape.  Throws
// std::length_error above kTreeCap vertices.
std::vector<AdmissibleTree> enumerate_admissible(const Graph& g, TreeShape shape);

// Number of nested sets of proper non-singleton tubes (pairwise nested or
// disjoint), the empty set included.  Equals the stable-tree count.
Integer count_nested_sets(const Graph& g);

// An ordering lists vertex ranks: order[v] is the position of v.  An empty
// ordering means label order.
using VertexOrder = std::vector<int>;

// The left comb m_G = m_{G/e} o m_e with e joining the minimal vertex to its
// minimal neighbour.
AdmissibleTree gccom_normal(const Graph& g, const VertexOrder& order = {});

// Quadratic presentations of gcLie (binary bracket, Jacobi), gcHyper (one even
// generator per graph, sums over tubes through an edge agree for all edges)
// and gcGrav (one odd generator per graph, edge-type and tube-type sums).
enum class Presentation { lie, hyper, grav };

// Normal monomials of the ideal generated by the quadratic relations: the trees
// that are not leading terms after exact Gaussian elimination in every weight.
// Trees are compared by weight and then by text form after relabelling; the
// count per weight is the dimension of the quotient and so does not depend on
// the vertex order.
std::vector<AdmissibleTree> normal_monomials(const Graph& g, Presentation p, const VertexOrder& order = {});

// Normal monomial counts.  Graded variants hold the count for r internal
// vertices at entry r - 1.
Integer gclie_normal_count(const Graph& g, const VertexOrder& order = {});
std::vector<Integer> gchyper_normal_counts(const Graph& g, const VertexOrder& order = {});
std::vector<Integer> gcgrav_normal_counts(const Graph& g, const VertexOrder& order = {});

// The closed-form normal conditions obtained from the quadratic leading terms
// alone.  lie: every pattern b(b(L1, L2), L3) has L1 u L3 a tube and
// min L2 > min L3.  hyper: a binary child sits first and no sibling adjacent to
// its first block has a smaller minimum than its second block.  grav: trees with
// binary non-root vertices where no first binary child joins its first block to
// the neighbour of smallest minimum.  These conditions assume the quadratic
// relations form a Groebner basis, which holds for the family labelings but
// not for every vertex order (P_4 labelled 2-0-3-1 gives two lie-normal trees
// for a one-dimensional space).
bool quadratic_normal(const Graph& g, Presentation p, const AdmissibleTree& t);
std::vector<Integer> quadratic_normal_counts(const Graph& g, Presentation p, const VertexOrder& order = {});

// Vertex orderings modulo swapping neighbouring positions that hold
// non-adjacent vertices.  Checked against the acyclic-orientation count.
Integer gcass_dimension(const Graph& g);

}  // namespace contractad
