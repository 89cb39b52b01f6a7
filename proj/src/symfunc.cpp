#include "contractad/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace contractad {

int weight(const YoungDiagram& la) {
  int w = 0;
  for (int x : la) w += x;
  return w;
}

Integer diagram_factorial(const YoungDiagram& la) {
  Integer f = 1;
  for (int x : la) f *= factorial(x);
  return f;
}

Integer multiplicity_factorial(const YoungDiagram& la) {
  Integer f = 1;
  for (std::size_t i = 0; i < la.size();) {
    std::size_t j = i;
    while (j < la.size() && la[j] == la[i]) ++j;
    f *= factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return f;
}

namespace {

void partitions_rec(int n, int max_part, YoungDiagram& cur, std::vector<YoungDiagram>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

const std::vector<YoungDiagram>& cached_partitions(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<YoungDiagram>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<YoungDiagram> out;
  YoungDiagram cur;
  partitions_rec(n, n, cur, out);
  return cache.emplace(n, std::move(out)).first->second;
}

bool dominates(const YoungDiagram& mu, const YoungDiagram& la) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(mu.size(), la.size()); ++i) {
    a += i < mu.size() ? mu[i] : 0;
    b += i < la.size() ? la[i] : 0;
    if (a < b) return false;
  }
  return true;
}

YoungDiagram sorted_diagram(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 0) return {};
  return cached_partitions(n);
}

std::vector<YoungDiagram> partitions_up_to(int max_weight) {
  std::vector<YoungDiagram> out;
  for (int n = 0; n <= max_weight; ++n) {
    const auto& part = cached_partitions(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string diagram_string(const YoungDiagram& la) {
  std::string s = "(";
  for (std::size_t i = 0; i < la.size(); ++i) s += (i ? "," : "") + std::to_string(la[i]);
  return s + ")";
}

SymFunc::SymFunc(long c) : SymFunc(QPoly(c)) {}

SymFunc::SymFunc(const QPoly& c, int bound) : bound_(bound) {
  if (bound < 0) throw std::invalid_argument("negative degree bound");
  if (!c.is_zero()) terms_.emplace(YoungDiagram{}, c);
}

SymFunc SymFunc::m(const YoungDiagram& la, int bound) {
  SymFunc s(QPoly(), bound);
  s.add_term(sorted_diagram(la), QPoly(1));
  return s;
}

SymFunc SymFunc::p(int n, int bound) { return m({n}, bound); }

SymFunc SymFunc::p(const YoungDiagram& la, int bound) {
  SymFunc r(QPoly(1), bound);
  for (int part : la) r = r * p(part, bound);
  return r;
}

void SymFunc::add_term(const YoungDiagram& la, const QPoly& c) {
  if (c.is_zero() || weight(la) > bound_) return;
  auto [it, inserted] = terms_.emplace(la, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly SymFunc::coeff(const YoungDiagram& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? QPoly() : it->second;
}

int SymFunc::degree() const {
  int d = -1;
  for (const auto& [la, c] : terms_) d = std::max(d, weight(la));
  return d;
}

SymFunc SymFunc::truncate(int bound) const {
  SymFunc r(QPoly(), std::min(bound, bound_));
  for (const auto& [la, c] : terms_) r.add_term(la, c);
  return r;
}

SymFunc SymFunc::homogeneous(int d) const {
  SymFunc r(QPoly(), bound_);
  for (const auto& [la, c] : terms_)
    if (weight(la) == d) r.add_term(la, c);
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r(*this);
  for (auto& [la, c] : r.terms_) c = -c;
  return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.bound_ < bound_) *this = truncate(o.bound_);
  for (const auto& [la, c] : o.terms_) add_term(la, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (o.bound_ < bound_) *this = truncate(o.bound_);
  for (const auto& [la, c] : o.terms_) add_term(la, -c);
  return *this;
}

SymFunc operator*(const QPoly& c, const SymFunc& a) {
  SymFunc r(QPoly(), a.bound_);
  for (const auto& [la, x] : a.terms_) r.add_term(la, c * x);
  return r;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  const int bound = std::min(a.bound_, b.bound_);
  SymFunc r(QPoly(), bound);
  if (a.is_zero() || b.is_zero()) return r;
  const int top = std::min(a.degree() + b.degree(), bound);
  // Weights that can actually occur in the product.
  std::vector<bool> reachable(top + 1, false);
  for (const auto& [la, x] : a.terms_)
    for (const auto& [mu, y] : b.terms_)
      if (weight(la) + weight(mu) <= top) reachable[weight(la) + weight(mu)] = true;

  for (int w = 0; w <= top; ++w) {
    if (!reachable[w]) continue;
    for (const YoungDiagram& nu : cached_partitions(w)) {
      // [x^nu](a b) = sum over beta <= nu of [x^{nu-beta}]a * [x^beta]b
      QPoly acc;
      std::vector<int> beta(nu.size(), 0);
      while (true) {
        std::vector<int> rest(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) rest[i] = nu[i] - beta[i];
        auto ia = a.terms_.find(sorted_diagram(rest));
        if (ia != a.terms_.end()) {
          auto ib = b.terms_.find(sorted_diagram(beta));
          if (ib != b.terms_.end()) acc += ia->second * ib->second;
        }
        std::size_t i = 0;
        while (i < nu.size() && beta[i] == nu[i]) beta[i++] = 0;
        if (i == nu.size()) break;
        ++beta[i];
      }
      r.add_term(nu, acc);
    }
  }
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  const int bound = std::min(a.bound_, b.bound_);
  return a.truncate(bound).terms_ == b.truncate(bound).terms_;
}

SymFunc SymFunc::scale_variables(const QPoly& c) const {
  SymFunc r(QPoly(), bound_);
  for (const auto& [la, x] : terms_) r.add_term(la, c.pow(weight(la)) * x);
  return r;
}

std::map<YoungDiagram, QPoly> SymFunc::to_p_basis() const {
  std::map<YoungDiagram, QPoly> coords;
  SymFunc rem = truncate(degree() < 0 ? 0 : degree());
  while (!rem.is_zero()) {
    // The longest diagram only receives contributions from its own p_la.
    auto pick = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first.size() > pick->first.size()) pick = it;
    const YoungDiagram la = pick->first;
    SymFunc pla = p(la, rem.bound());
    for (const auto& [mu, c] : pla.terms_)
      if (mu != la && (mu.size() >= la.size() || !dominates(mu, la)))
        throw std::logic_error("p-to-m transition is not triangular at " + diagram_string(la));
    Rational lead = *pla.coeff(la).constant_value();
    QPoly c = pick->second / lead;
    coords[la] += c;
    rem -= c * pla;
  }
  return coords;
}

SymFunc SymFunc::from_p_basis(const std::map<YoungDiagram, QPoly>& coords, int bound) {
  SymFunc r(QPoly(), bound);
  for (const auto& [la, c] : coords) r += c * p(la, bound);
  return r;
}

QPoly SymFunc::monomial_coeff(std::vector<int> exponents) const {
  return coeff(sorted_diagram(std::move(exponents)));
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [la, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*m" << diagram_string(la);
  }
  return os.str();
}

}  // namespace contractad
