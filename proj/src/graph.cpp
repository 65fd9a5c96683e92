#include "homext/graph.hpp"

#include <algorithm>
#include <numeric>

namespace homext {

Graph::Graph(std::size_t order) {
  if (order > kMaxVertices)
    throw GraphError("graph order " + std::to_string(order) + " exceeds vertex cap");
  rows_.assign(order, Bitset(order));
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order())
    throw GraphError("vertex out of range: " + std::to_string(std::max(u, v)));
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].set(v);
  rows_[v].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (std::size_t v = rows_[u].find_next(u + 1); v != Bitset::npos; v = rows_[u].find_next(v + 1))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

void validate_vertex_set(const VertexSet& s, std::size_t n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw GraphError("vertex out of range: " + std::to_string(s[i]));
    if (i > 0 && s[i - 1] >= s[i]) throw GraphError("vertex set not strictly increasing");
  }
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  validate_vertex_set(s, g.order());
  Graph out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph lex_product(const Graph& g, const Graph& h) {
  const std::size_t gn = g.order(), hn = h.order();
  if (gn != 0 && hn > kMaxVertices / gn) throw GraphError("lexicographic product exceeds vertex cap");
  Graph out(gn * hn);
  for (Vertex a = 0; a < gn * hn; ++a) {
    for (Vertex b = a + 1; b < gn * hn; ++b) {
      const Vertex ga = a / hn, gb = b / hn;
      if (g.adjacent(ga, gb) || (ga == gb && h.adjacent(a % hn, b % hn))) out.add_edge(a, b);
    }
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_equal_clique_union(const Graph& g) {
  auto comps = connected_components(g);
  for (const auto& c : comps) {
    if (c.size() != comps.front().size() || !is_clique(g, c)) return false;
  }
  return true;
}

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  Bitset b = g.row(u);
  b &= g.row(v);
  return b.indices();
}

Graph delete_vertex(const Graph& g, Vertex v) {
  VertexSet keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw GraphError("relabelling has wrong length");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;  // vertices of g, highest degree first
  std::vector<Vertex> map;
  std::vector<bool> used;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < h.order(); ++w) {
      if (used[w] || g.degree(v) != h.degree(w)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order[i];
        ok = g.adjacent(u, v) == h.adjacent(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (run(depth + 1)) return true;
      used[w] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  IsoSearch s{g, h, {}, std::vector<Vertex>(g.order()), std::vector<bool>(g.order(), false)};
  s.order.resize(g.order());
  std::iota(s.order.begin(), s.order.end(), Vertex{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  if (!s.run(0)) return std::nullopt;
  return s.map;
}

}  // namespace homext
