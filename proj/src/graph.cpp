#include "contractad/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace contractad {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 0.." + std::to_string(kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_size(n);
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

VertexSet Graph::neighbors_of_set(VertexSet s) const {
  VertexSet r = 0;
  for (VertexSet t = s; t; t &= t - 1) r |= adj_[lowest(t)];
  return r;
}

int Graph::edge_count() const {
  int m = 0;
  for (VertexSet a : adj_) m += popcount(a);
  return m / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (VertexSet t = adj_[u] & ~((VertexSet{2} << u) - 1); t; t &= t - 1) out.emplace_back(u, lowest(t));
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n_));
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  adj_[u] |= VertexSet{1} << v;
  adj_[v] |= VertexSet{1} << u;
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~(VertexSet{1} << v);
  adj_[v] &= ~(VertexSet{1} << u);
}

bool Graph::is_connected(VertexSet s) const {
  if (s == 0) return false;
  VertexSet reached = s & (~s + 1);
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = neighbors_of_set(frontier) & s & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == s;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> pos(n_, -1);
  int k = 0;
  for (VertexSet t = s; t; t &= t - 1) pos[lowest(t)] = k++;
  Graph h(k);
  for (VertexSet t = s; t; t &= t - 1) {
    int u = lowest(t);
    VertexSet nb = adj_[u] & s;
    for (; nb; nb &= nb - 1) h.adj_[pos[u]] |= VertexSet{1} << pos[lowest(nb)];
  }
  return h;
}

Graph Graph::relabel(const std::vector<int>& perm) const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    for (VertexSet t = adj_[u]; t; t &= t - 1) h.adj_[perm[u]] |= VertexSet{1} << perm[lowest(t)];
  return h;
}

std::string Graph::code() const {
  std::string s(1 + 4 * adj_.size(), '\0');
  s[0] = static_cast<char>(n_);
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (int b = 0; b < 4; ++b) s[1 + 4 * i + b] = static_cast<char>((adj_[i] >> (8 * b)) & 0xffu);
  return s;
}

void validate_partition(const Graph& g, const Partition& blocks) {
  VertexSet seen = 0;
  for (VertexSet b : blocks) {
    if (b & seen) throw std::invalid_argument("partition blocks overlap");
    if (!g.is_tube(b)) throw std::invalid_argument("partition block is not a tube");
    seen |= b;
  }
  if (seen != g.all()) throw std::invalid_argument("partition does not cover every vertex");
}

Graph contract(const Graph& g, const Partition& blocks) {
  validate_partition(g, blocks);
  const int k = static_cast<int>(blocks.size());
  Graph h(k);
  for (int i = 0; i < k; ++i) {
    VertexSet nb = g.neighbors_of_set(blocks[i]);
    for (int j = i + 1; j < k; ++j)
      if (nb & blocks[j]) h.add_edge(i, j);
  }
  return h;
}

Partition tube_partition(const Graph& g, VertexSet tube) {
  if (!g.is_tube(tube)) throw std::invalid_argument("contract_tube: not a tube");
  Partition blocks;
  bool placed = false;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet bit = VertexSet{1} << v;
    if (tube & bit) {
      if (!placed) blocks.push_back(tube);
      placed = true;
    } else {
      blocks.push_back(bit);
    }
  }
  return blocks;
}

Graph contract_tube(const Graph& g, VertexSet tube) { return contract(g, tube_partition(g, tube)); }

std::vector<VertexSet> enumerate_tubes(const Graph& g) {
  std::vector<VertexSet> out;
  const VertexSet all = g.all();
  if (g.n() > 24) throw std::invalid_argument("enumerate_tubes: graph too large");
  for (VertexSet s = 1; s <= all && s != 0; ++s)
    if (g.is_connected(s)) out.push_back(s);
  return out;
}

namespace {

void partitions_rec(const Graph& g, VertexSet rest, bool odd_only, Partition& cur,
                    const std::function<void(const Partition&)>& visit) {
  if (rest == 0) {
    visit(cur);
    return;
  }
  const VertexSet v = rest & (~rest + 1);
  const VertexSet others = rest & ~v;
  // Every submask of `others`, joined with v, is a candidate block.
  VertexSet sub = others;
  while (true) {
    VertexSet block = sub | v;
    if ((!odd_only || popcount(block) % 2 == 1) && g.is_connected(block)) {
      cur.push_back(block);
      partitions_rec(g, rest & ~block, odd_only, cur, visit);
      cur.pop_back();
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
}

}  // namespace

void for_each_partition(const Graph& g, bool odd_only, const std::function<void(const Partition&)>& visit) {
  if (g.n() == 0) return;
  Partition cur;
  cur.reserve(g.n());
  partitions_rec(g, g.all(), odd_only, cur, visit);
}

std::vector<Partition> enumerate_partitions(const Graph& g, bool odd_only) {
  std::vector<Partition> out;
  for_each_partition(g, odd_only, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int n) {
  if (n < 0) throw std::invalid_argument("star graph needs n >= 0");
  Graph g(n + 1);
  for (int i = 1; i <= n; ++i) g.add_edge(0, i);
  return g;
}

Graph complete_multipartite(const std::vector<int>& lambda) {
  if (lambda.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
  int total = 0;
  for (int p : lambda) {
    if (p < 1) throw std::invalid_argument("multipartite parts must be positive");
    total += p;
  }
  if (lambda.size() == 1 && lambda[0] > 1)
    throw std::invalid_argument("complete multipartite graph with a single part of size > 1 is disconnected");
  std::vector<int> part_of;
  for (std::size_t i = 0; i < lambda.size(); ++i) part_of.insert(part_of.end(), lambda[i], static_cast<int>(i));
  Graph g(total);
  for (int u = 0; u < total; ++u)
    for (int v = u + 1; v < total; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph family_graph(Family kind, int n) {
  switch (kind) {
    case Family::path: return path_graph(n);
    case Family::cycle: return cycle_graph(n);
    case Family::complete: return complete_graph(n);
    case Family::star: return star_graph(n);
    case Family::multipartite: break;
  }
  throw std::invalid_argument("family_graph: use complete_multipartite for multipartite graphs");
}

std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
  const VertexSet all = g.all();
  VertexSet seen = 0;
  std::vector<int> parts;
  for (int v = 0; v < g.n(); ++v) {
    if (seen & (VertexSet{1} << v)) continue;
    VertexSet cls = all & ~g.neighbors(v);  // v and its non-neighbours
    // Equivalence: every member of the class has exactly the same class.
    for (VertexSet t = cls; t; t &= t - 1)
      if ((all & ~g.neighbors(lowest(t))) != cls) return std::nullopt;
    seen |= cls;
    parts.push_back(popcount(cls));
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

namespace {

std::optional<int> parse_int(const std::string& tok) {
  if (tok.empty() || tok.size() > 9) return std::nullopt;
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return std::nullopt;
  for (std::size_t k = i; k < tok.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return std::nullopt;
  return std::stoi(tok);
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Graph> g;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("graph text line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (!g) {
      if (tok.size() != 1 || tok[0].rfind("n=", 0) != 0) fail("expected 'n=<int>' header");
      auto n = parse_int(tok[0].substr(2));
      if (!n || *n < 1 || *n > kMaxVertices) fail("bad vertex count");
      g.emplace(*n);
      continue;
    }
    if (tok.size() != 2) fail("expected an edge 'u v'");
    auto u = parse_int(tok[0]), v = parse_int(tok[1]);
    if (!u || !v) fail("bad vertex label");
    try {
      g->add_edge(*u, *v);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (!g) throw std::invalid_argument("graph text: missing 'n=<int>' header");
  return *g;
}

std::string to_graph_text(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : s)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
  std::size_t pos = 0;
  long n = s[pos++] - 63;
  if (n == 63) {
    if (s.size() < 4) throw std::invalid_argument("graph6: truncated size field");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | (s[pos++] - 63);
  }
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("graph6: unsupported vertex count");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() - pos != (bits + 5) / 6) throw std::invalid_argument("graph6: wrong length");
  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  // padding bits must be zero
  for (; k % 6 != 0; ++k)
    if (((s[pos + k / 6] - 63) >> (5 - k % 6)) & 1) throw std::invalid_argument("graph6: non-zero padding");
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string s;
  const int n = g.n();
  if (n <= 62) {
    s += static_cast<char>(63 + n);
  } else {
    s += static_cast<char>(126);
    for (int i = 2; i >= 0; --i) s += static_cast<char>(63 + ((n >> (6 * i)) & 63));
  }
  int acc = 0, cnt = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++cnt == 6) {
        s += static_cast<char>(63 + acc);
        acc = cnt = 0;
      }
    }
  if (cnt) s += static_cast<char>(63 + (acc << (6 - cnt)));
  return s;
}

}  // namespace contractad
