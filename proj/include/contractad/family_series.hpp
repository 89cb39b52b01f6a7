#pragma once

#include "contractad/hilbert.hpp"
#include "contractad/power_series.hpp"

#include <string>

namespace contractad {

enum class FamilyTag { P, C, K, St };

std::string family_name(FamilyTag f);

// The n-th member: P_n, C_n (with C_1 = P_1 and C_2 = P_2), K_n, or St_n
// (n leaves, so n+1 vertices).
Graph family_member(FamilyTag f, int n);

struct FamilySeries {
  FamilyTag family;
  PowerSeries series;
};

// F_P = sum f(P_n) t^n, F_C = sum f(C_n) t^n/n, F_K = sum f(K_n) t^n/n!
// (all n >= 1) and F_St = sum_{n>=0} f(St_n) t^n/n!, truncated at t^N.
FamilySeries family_series(const QFunction& f, FamilyTag family, int N);

struct CompositionReport {
  bool holds;
  PowerSeries lhs;
  PowerSeries rhs;
};

// Compares F(f*g) with the composition rule for the family.  The star rule
// needs g(P_1) = 1 and throws std::invalid_argument otherwise.
CompositionReport check_family_composition(const QFunction& f, const QFunction& g, FamilyTag family, int N);

enum class Target { complex, real };

// Closed forms for the Hilbert series of wonderful compactifications, in the
// normalization of family_series (so the complete-graph real series has its
// constant term 1 removed).
PowerSeries closed_form(Target target, FamilyTag family, int N);

// g(q,t) = (q t - ((1+t)^q - 1)/q) / (q - 1), whose reversion is the complex
// complete-graph series.
PowerSeries complete_graph_inverse_series(int N);

}  // namespace contractad
