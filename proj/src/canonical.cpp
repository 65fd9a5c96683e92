#include "homext/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "homext/graph_io.hpp"

namespace homext {

namespace {

// Colour refinement started from degrees; colour values depend only on the
// isomorphism type of the rooted neighbourhood structure, never on labels.
std::vector<int> refine_colours(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<int>(g.degree(v));
  std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> around;
      for (Vertex u : g.neighbors(v)) around.push_back(colour[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [k, val] : rank) val = r++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

bool twins(const Graph& g, Vertex u, Vertex v) {
  Bitset a = g.row(u), b = g.row(v);
  a.reset(v);
  b.reset(u);
  return a == b;
}

struct CanonSearch {
  const Graph& g;
  std::vector<int> cell;            // colour required at each position
  std::vector<int> colour;
  std::vector<Vertex> placed;       // placed[p] = vertex at position p
  std::vector<bool> used;
  std::vector<char> code, best_code;
  std::vector<Vertex> best;
  bool have_best = false;
  std::size_t updates = 0;

  std::size_t offset(std::size_t p) const { return p * (p - 1) / 2; }

  void place(std::size_t p, bool greater) {
    const std::size_t n = g.order();
    if (p == n) {
      if (greater || !have_best) {
        best = placed;
        best_code = code;
        have_best = true;
        ++updates;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || colour[v] != cell[p]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
      tried.push_back(v);

      bool gt = greater || !have_best;
      bool lt = false;
      const std::size_t base = offset(p);
      for (std::size_t q = 0; q < p; ++q) {
        code[base + q] = g.adjacent(placed[q], v) ? 1 : 0;
        if (!gt && !lt) {
          if (code[base + q] > best_code[base + q]) gt = true;
          else if (code[base + q] < best_code[base + q]) lt = true;
        }
      }
      if (lt) continue;
      placed[p] = v;
      used[v] = true;
      const std::size_t before = updates;
      place(p + 1, gt);
      used[v] = false;
      // a new best found below shares this node's prefix
      if (updates != before) greater = false;
    }
  }
};

}  // namespace

CanonicalLabeling canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalCap)
    throw GraphError("canonical form limited to " + std::to_string(kCanonicalCap) + " vertices");
  CanonSearch s{g, {}, refine_colours(g), std::vector<Vertex>(n), std::vector<bool>(n, false),
                std::vector<char>(n * (n == 0 ? 0 : n - 1) / 2, 0), {}, {}, false, 0};
  s.cell = s.colour;
  std::sort(s.cell.begin(), s.cell.end());
  s.place(0, false);

  CanonicalLabeling out{Graph(n), std::vector<Vertex>(n)};
  for (Vertex p = 0; p < n; ++p) out.relabel[s.best[p]] = p;
  out.graph = relabel(g, out.relabel);
  return out;
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g).graph); }

std::vector<Graph> enumerate_graphs(std::size_t n) {
  std::map<std::string, Graph> classes;
  classes.emplace(to_graph6(Graph(0)), Graph(0));
  for (std::size_t m = 0; m < n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& [key, base] : classes) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Graph h(m + 1);
        for (auto [u, v] : base.edges()) h.add_edge(u, v);
        for (Vertex u = 0; u < m; ++u)
          if (mask >> u & 1u) h.add_edge(u, static_cast<Vertex>(m));
        auto canon = canonical_form(h).graph;
        auto k = to_graph6(canon);
        next.try_emplace(std::move(k), std::move(canon));
      }
    }
    classes = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [k, gr] : classes) out.push_back(std::move(gr));
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace homext
