#pragma once

#include "contractad/graphic_function.hpp"
#include "contractad/qpoly.hpp"
#include "contractad/symfunc.hpp"

namespace contractad {

using QFunction = GraphicFunction<QPoly>;
using SymFunction = GraphicFunction<SymFunc>;

// Unit of the Schmitt product: 1 on the one-vertex graph, 0 elsewhere.
QFunction epsilon();
// Constant 1.
QFunction one();
// Gamma -> x^{|V|-1}
QFunction one_x(const QPoly& x);
// star inverse of 1
QFunction mobius();
// x . (1_x * mu); equals the chromatic polynomial evaluated at x
QFunction chromatic_gf(const QPoly& x = QPoly::q());

// 1 * (1_q . mu); each value is checked against q^{|V|} chi(1/q)
QFunction gerst_hilbert();
// Poincare polynomial of the complex wonderful compactification, from
// sum_I chi(Gamma/I) prod_G psi(|G|) = 1 with psi(g) = (q - q^{g-1})/(q - 1)
QFunction wonderful_complex_hilbert();
// Signed Poincare polynomial of the real locus, from
// sum over odd partitions of chi(Gamma/I) q^{(|V|-|I|)/2} = 1
QFunction wonderful_real_hilbert();
// q chi_C + (1 - q) epsilon
QFunction hyper_weighted_hilbert();
// q/(q-1) gerst - 1/(q-1) epsilon, divided exactly
QFunction grav_weighted_hilbert();

// (q - q^{g-1})/(q - 1) as a polynomial: 1, 0, -q, -q - q^2, ...
QPoly block_weight(int g);

// Chromatic symmetric function of a tree as 1 * (1_{-1} . p) with p(Gamma) =
// p_{|V|}.  Evaluating on a graph that is not a tree throws.
SymFunction chromatic_symfun_tree();
// Direct expansion: sum over proper colourings with |V| colours of
// prod x_{colour(v)}, returned in monomial coordinates.
SymFunc chromatic_symfun_direct(const Graph& g);

// Deterministic pseudo-random isomorphism invariant with value 1 on P_1 when
// `unital` is set; coefficients are small integers derived from the key.
QFunction random_graphic_function(std::uint64_t seed, bool unital);

}  // namespace contractad
