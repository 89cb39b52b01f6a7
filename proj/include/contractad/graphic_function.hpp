#pragma once

#include "contractad/canonical.hpp"
#include "contractad/graph.hpp"

#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace contractad {

// Upper bound on entries per memo table; 0 disables memoization.  Defaults to
// 1<<20 and can be overridden by the CLI.
std::size_t memo_limit();
void set_memo_limit(std::size_t limit);

// An isomorphism-invariant function on connected graphs.  Copies share the
// evaluator and the memo table, which is keyed by canonical_key and safe for
// concurrent readers; racing inserts store identical values.
template <class V>
class GraphicFunction {
 public:
  using Evaluator = std::function<V(const Graph&, const GraphicFunction&)>;

  GraphicFunction(std::string name, Evaluator ev)
      : s_(std::make_shared<State>(std::move(name), std::move(ev))) {}

  V operator()(const Graph& g) const {
    auto key = try_canonical_key(g);
    if (!key) return evaluate_direct(g);
    {
      std::shared_lock lock(s_->mu);
      auto it = s_->memo.find(*key);
      if (it != s_->memo.end()) return it->second;
    }
    V value = evaluate_direct(g);
    std::unique_lock lock(s_->mu);
    if (s_->memo.size() < memo_limit()) s_->memo.emplace(*key, value);
    return value;
  }

  // Runs the evaluator on this labeled graph; recursive calls still use the memo.
  V evaluate_direct(const Graph& g) const {
    if (!g.is_connected()) throw std::invalid_argument(s_->name + ": graphic functions need a connected graph");
    return s_->ev(g, *this);
  }

  const std::string& name() const { return s_->name; }

  std::size_t memo_size() const {
    std::shared_lock lock(s_->mu);
    return s_->memo.size();
  }

 private:
  struct State {
    State(std::string n, Evaluator e) : name(std::move(n)), ev(std::move(e)) {}
    std::string name;
    Evaluator ev;
    mutable std::shared_mutex mu;
    std::unordered_map<std::string, V> memo;
  };
  std::shared_ptr<State> s_;
};

template <class V>
GraphicFunction<V> constant_function(const std::string& name, V value) {
  return GraphicFunction<V>(name, [value](const Graph&, const GraphicFunction<V>&) { return value; });
}

// f * g : Gamma -> sum over graph partitions I of f(Gamma/I) prod_{G in I} g(Gamma|_G)
template <class V>
GraphicFunction<V> convolve(const GraphicFunction<V>& f, const GraphicFunction<V>& g) {
  return GraphicFunction<V>("(" + f.name() + "*" + g.name() + ")",
                            [f, g](const Graph& gr, const GraphicFunction<V>&) {
                              V acc(0);
                              for_each_partition(gr, false, [&](const Partition& p) {
                                V term = f(contract(gr, p));
                                for (VertexSet b : p) term = term * g(gr.induced(b));
                                acc += term;
                              });
                              return acc;
                            });
}

template <class V>
GraphicFunction<V> pointwise_product(const GraphicFunction<V>& f, const GraphicFunction<V>& g) {
  return GraphicFunction<V>("(" + f.name() + "." + g.name() + ")",
                            [f, g](const Graph& gr, const GraphicFunction<V>&) { return f(gr) * g(gr); });
}

template <class V>
GraphicFunction<V> pointwise_sum(const GraphicFunction<V>& f, const GraphicFunction<V>& g) {
  return GraphicFunction<V>("(" + f.name() + "+" + g.name() + ")",
                            [f, g](const Graph& gr, const GraphicFunction<V>&) { return f(gr) + g(gr); });
}

template <class V>
GraphicFunction<V> scalar_multiple(const V& c, const GraphicFunction<V>& f) {
  return GraphicFunction<V>("c." + f.name(), [c, f](const Graph& gr, const GraphicFunction<V>&) { return c * f(gr); });
}

// Two-sided inverse for the Schmitt product, via
// g(Gamma) = -sum_{I != {V}} f(Gamma/I) prod g(Gamma|_G).
template <class V>
GraphicFunction<V> star_inverse(const GraphicFunction<V>& f) {
  if (f(path_graph(1)) != V(1))
    throw std::invalid_argument("star_inverse: " + f.name() + " must take the value 1 on the one-vertex graph");
  return GraphicFunction<V>(f.name() + "^-1", [f](const Graph& gr, const GraphicFunction<V>& self) {
    if (gr.n() == 1) return V(1);
    V acc(0);
    for_each_partition(gr, false, [&](const Partition& p) {
      if (p.size() == 1) return;
      V term = f(contract(gr, p));
      for (VertexSet b : p) term = term * self(gr.induced(b));
      acc += term;
    });
    return V(0) - acc;
  });
}

}  // namespace contractad
