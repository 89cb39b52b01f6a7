#include "contractad/hilbert.hpp"

#include "contractad/chromatic.hpp"

#include <cstdlib>

namespace contractad {

namespace {

std::atomic<std::size_t> g_memo_limit{std::size_t{1} << 20};

const QPoly kQ = QPoly::q();

// q^n chi(1/q), i.e. the coefficients of chi reversed inside degree n
QPoly renormalised_chromatic(const Graph& g) {
  QPoly chi = chromatic_delcon(g);
  std::map<unsigned, Rational> terms;
  for (const auto& [e, c] : chi.terms()) terms[2 * g.n() - e] = c;
  return QPoly::from_terms(terms);
}

}  // namespace

std::size_t memo_limit() { return g_memo_limit.load(std::memory_order_relaxed); }
void set_memo_limit(std::size_t limit) { g_memo_limit.store(limit, std::memory_order_relaxed); }

QFunction epsilon() {
  return QFunction("eps", [](const Graph& g, const QFunction&) { return QPoly(g.n() == 1 ? 1 : 0); });
}

QFunction one() { return constant_function<QPoly>("1", QPoly(1)); }

QFunction one_x(const QPoly& x) {
  return QFunction("1_{" + x.to_string() + "}", [x](const Graph& g, const QFunction&) { return x.pow(g.n() - 1); });
}

QFunction mobius() {
  static const QFunction mu = [] {
    QFunction inv = star_inverse(one());
    return QFunction("mu", [inv](const Graph& g, const QFunction&) { return inv(g); });
  }();
  return mu;
}

QFunction chromatic_gf(const QPoly& x) {
  QFunction conv = convolve(one_x(x), mobius());
  return QFunction("X(" + x.to_string() + ")", [x, conv](const Graph& g, const QFunction&) { return x * conv(g); });
}

QFunction gerst_hilbert() {
  static const QFunction gerst = [] {
    QFunction conv = convolve(one(), pointwise_product(one_x(kQ), mobius()));
    return QFunction("gerst", [conv](const Graph& g, const QFunction&) {
      QPoly v = conv(g);
      if (v != renormalised_chromatic(g))
        throw std::logic_error("gerst value disagrees with the renormalised chromatic polynomial");
      return v;
    });
  }();
  return gerst;
}

QPoly block_weight(int g) {
  if (g < 1) throw std::invalid_argument("block_weight: block size must be positive");
  if (g == 1) return QPoly(1);
  QPoly w;
  for (int k = 1; k <= g - 2; ++k) w -= QPoly::q_pow(k);
  return w;
}

QFunction wonderful_complex_hilbert() {
  static const QFunction chi("M_C", [](const Graph& g, const QFunction& self) {
    QPoly acc(1);
    for_each_partition(g, false, [&](const Partition& p) {
      if (static_cast<int>(p.size()) == g.n()) return;
      QPoly w(1);
      for (VertexSet b : p) {
        if (popcount(b) == 2) return;  // weight 0
        w *= block_weight(popcount(b));
      }
      acc -= self(contract(g, p)) * w;
    });
    return acc;
  });
  return chi;
}

QFunction wonderful_real_hilbert() {
  static const QFunction chi("M_R", [](const Graph& g, const QFunction& self) {
    QPoly acc(1);
    for_each_partition(g, true, [&](const Partition& p) {
      if (static_cast<int>(p.size()) == g.n()) return;
      acc -= self(contract(g, p)) * QPoly::half_pow(g.n() - static_cast<int>(p.size()));
    });
    if (!acc.is_integral()) throw std::logic_error("real Hilbert series left Q[q]");
    return acc;
  });
  return chi;
}

QFunction hyper_weighted_hilbert() {
  QFunction chi = wonderful_complex_hilbert();
  return QFunction("hyper", [chi](const Graph& g, const QFunction&) {
    return g.n() == 1 ? QPoly(1) : kQ * chi(g);
  });
}

QFunction grav_weighted_hilbert() {
  QFunction gerst = gerst_hilbert();
  return QFunction("grav", [gerst](const Graph& g, const QFunction&) {
    QPoly num = kQ * gerst(g) - QPoly(g.n() == 1 ? 1 : 0);
    return num.divide_or_throw(kQ - QPoly(1), "grav");
  });
}

SymFunction chromatic_symfun_tree() {
  static const SymFunction x = [] {
    SymFunction unit = constant_function<SymFunc>("1", SymFunc(1));
    SymFunction signed_p("(1_{-1}.p)", [](const Graph& g, const SymFunction&) {
      SymFunc p = SymFunc::p(g.n());
      return g.n() % 2 ? p : -p;
    });
    SymFunction conv = convolve(unit, signed_p);
    return SymFunction("X_tree", [conv](const Graph& g, const SymFunction&) {
      if (!g.is_tree())
        throw std::invalid_argument(
            "chromatic_symfun_tree: the convolution formula for the chromatic symmetric function holds for trees only");
      return conv(g);
    });
  }();
  return x;
}

SymFunc chromatic_symfun_direct(const Graph& g) {
  const int n = g.n();
  std::map<YoungDiagram, long> counts;
  std::vector<int> col(n, 0);
  // odometer over all n^n colourings
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (col[u] == col[v]) {
        proper = false;
        break;
      }
    if (proper) {
      std::vector<int> e(n, 0);
      for (int c : col) ++e[c];
      // only weakly decreasing exponent vectors are m-coordinates
      if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
        YoungDiagram la;
        for (int x : e)
          if (x) la.push_back(x);
        ++counts[la];
      }
    }
    int i = 0;
    while (i < n && col[i] == n - 1) col[i++] = 0;
    if (i == n) break;
    ++col[i];
  }
  SymFunc r;
  for (const auto& [la, c] : counts) r += QPoly(c) * SymFunc::m(la);
  return r;
}

QFunction random_graphic_function(std::uint64_t seed, bool unital) {
  return QFunction("rnd" + std::to_string(seed), [seed, unital](const Graph& g, const QFunction&) {
    if (unital && g.n() == 1) return QPoly(1);
    std::uint64_t h = seed * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull;
    for (char c : canonical_key(g)) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    QPoly v;
    for (int k = 0; k < 3; ++k) {
      h ^= h >> 29;
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 32;
      v += QPoly(static_cast<long>(h % 7) - 3) * QPoly::q_pow(k);
    }
    return v;
  });
}

}  // namespace contractad
