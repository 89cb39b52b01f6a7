#pragma once

#include "contractad/graph.hpp"
#include "contractad/qpoly.hpp"

namespace contractad {

// Chromatic polynomial by deletion-contraction, memoized on canonical keys.
// Works on disconnected graphs.
QPoly chromatic_delcon(const Graph& g);

// Acyclic orientations via sources: a(G) = sum over non-empty independent S
// of (-1)^{|S|+1} a(G - S).  Cross-checked against (-1)^n chi(-1).
Integer count_acyclic_orientations(const Graph& g);

// Proper colourings with k colours, by exhaustive search.
Integer count_proper_colorings(const Graph& g, unsigned k);

}  // namespace contractad
