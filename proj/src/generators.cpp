#include "homext/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace homext {

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph independent_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 1; u < n; ++u) g.add_edge(u - 1, u);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Vertex cantor_pair(std::size_t position, std::size_t block) {
  const std::size_t d = position + block;
  return static_cast<Vertex>(d * (d + 1) / 2 + block);
}

std::pair<std::size_t, std::size_t> cantor_unpair(Vertex v) {
  auto d = static_cast<std::size_t>((std::sqrt(8.0 * v + 1.0) - 1.0) / 2.0);
  while (d * (d + 1) / 2 > v) --d;
  while ((d + 1) * (d + 2) / 2 <= v) ++d;
  const std::size_t block = v - d * (d + 1) / 2;
  return {d - block, block};
}

Graph composite(std::size_t m, std::size_t n) { return lex_product(independent_graph(m), complete_graph(n)); }

std::size_t composite_block(Cardinal m, Cardinal n, Vertex v) {
  if (m.omega && n.omega) return cantor_unpair(v).second;
  if (m.omega) return v / n.value;
  return v % m.value;
}

OracleGraph composite_oracle(Cardinal m, Cardinal n) {
  if (!m.omega && !n.omega) throw std::invalid_argument("composite_oracle needs an omega factor");
  if ((!m.omega && m.value == 0) || (!n.omega && n.value == 0))
    throw std::invalid_argument("composite factors must be positive");

  auto adjacency = [m, n](Vertex u, Vertex v) {
    return u != v && composite_block(m, n, u) == composite_block(m, n, v);
  };

  OracleGraph::Representatives outside;
  if (m.omega && n.omega) {
    outside = [](std::size_t horizon) {
      std::size_t blocks = 0;  // blocks with a member below the horizon form a prefix
      for (Vertex v = 0; v < horizon; ++v) blocks = std::max(blocks, cantor_unpair(v).second + 1);
      VertexSet reps;
      for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t p = 0;
        while (cantor_pair(p, b) < horizon) ++p;
        reps.push_back(cantor_pair(p, b));
      }
      reps.push_back(cantor_pair(0, blocks));
      std::sort(reps.begin(), reps.end());
      return reps;
    };
  } else if (m.omega) {
    const std::size_t size = n.value;
    outside = [size](std::size_t horizon) {
      VertexSet reps{static_cast<Vertex>(horizon)};
      const std::size_t fresh = (horizon + size - 1) / size * size;
      if (fresh != horizon) reps.push_back(static_cast<Vertex>(fresh));
      return reps;
    };
  } else {
    const std::size_t blocks = m.value;
    outside = [blocks](std::size_t horizon) {
      VertexSet reps;
      for (std::size_t i = 0; i < blocks; ++i) reps.push_back(static_cast<Vertex>(horizon + i));
      return reps;
    };
  }
  return OracleGraph("comp(" + m.to_string() + "," + n.to_string() + ")", adjacency, std::move(outside),
                     {{"family", "composite"}, {"m", m.to_string()}, {"n", n.to_string()}},
                     [m, n](Vertex v) -> std::optional<std::size_t> { return composite_block(m, n, v); });
}

std::variant<Graph, OracleGraph> composite(Cardinal m, Cardinal n) {
  if (!m.omega && !n.omega) return composite(m.value, n.value);
  return composite_oracle(m, n);
}

OracleGraph rs_graph(std::size_t n) {
  if (n < 2) throw std::invalid_argument("RS(n) needs n >= 2");
  auto adjacency = [n](Vertex k, Vertex t) {
    if (k == t) return false;
    if (k >= n && t >= n) return true;
    if (k < n && t < n) return false;
    return k % n != t % n;
  };
  // Beyond the horizon a vertex is low or high, and its adjacency to any finite
  // set depends only on that and its residue mod n.
  auto outside = [n](std::size_t horizon) {
    VertexSet reps;
    for (std::size_t v = horizon; v < std::max(horizon, n) + n; ++v) reps.push_back(static_cast<Vertex>(v));
    return reps;
  };
  // high vertices of equal residue are adjacent twins
  auto twins = [n](Vertex v) -> std::optional<std::size_t> {
    if (v < n) return std::nullopt;
    return v % n;
  };
  return OracleGraph("rs(" + std::to_string(n) + ")", adjacency, outside,
                     {{"family", "rs"}, {"n", std::to_string(n)}}, twins);
}

bool rado_bit_adjacent(Vertex u, Vertex v) {
  if (u == v) return false;
  const Vertex lo = std::min(u, v), hi = std::max(u, v);
  return lo < 32 && ((hi >> lo) & 1u);
}

OracleGraph rado_bit() {
  return OracleGraph("rado", rado_bit_adjacent, {}, {{"family", "rado"}, {"satisfies", "extension axioms"}});
}

namespace {

bool contains_clique(const Graph& g, const VertexSet& s, std::size_t size) {
  if (size == 0) return true;
  if (s.size() < size) return false;
  // s is tiny (a request set); enumerate subsets
  const std::size_t k = s.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    VertexSet sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) sub.push_back(s[i]);
    if (is_clique(g, sub)) return true;
  }
  return false;
}

bool has_clique_of_size(const Graph& g, Bitset candidates, std::size_t size) {
  if (size == 0) return true;
  if (candidates.count() < size) return false;
  for (std::size_t v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v + 1)) {
    Bitset next = candidates;
    next &= g.row(static_cast<Vertex>(v));
    // only consider higher vertices to avoid revisiting
    for (std::size_t u = next.find_first(); u != Bitset::npos && u <= v; u = next.find_next(u + 1)) next.reset(u);
    if (has_clique_of_size(g, std::move(next), size - 1)) return true;
  }
  return false;
}

struct Request {
  VertexSet adjacent;
  VertexSet nonadjacent;
};

}  // namespace

KnFreeGraph knfree_generic(std::size_t n, std::size_t order, std::uint64_t seed, std::size_t max_request) {
  if (n < 3) throw std::invalid_argument("knfree_generic needs n >= 3");
  KnFreeGraph out{Graph(order), 0};
  if (order == 0) return out;
  Graph& g = out.graph;
  std::mt19937_64 rng(seed);
  std::size_t count = 1;

  while (count < order) {
    const std::size_t snapshot = count;
    std::vector<Request> requests;
    for (std::size_t size = 1; size <= max_request && size <= snapshot; ++size) {
      std::vector<Request> tier;
      std::vector<bool> pick(snapshot, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      std::vector<VertexSet> subsets;
      do {
        VertexSet s;
        for (Vertex v = 0; v < snapshot; ++v)
          if (pick[v]) s.push_back(v);
        subsets.push_back(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      for (const auto& s : subsets) {
        for (std::uint32_t mask = 0; mask < (1u << size); ++mask) {
          Request r;
          for (std::size_t i = 0; i < size; ++i) (mask >> i & 1u ? r.adjacent : r.nonadjacent).push_back(s[i]);
          if (contains_clique(g, r.adjacent, n - 1)) continue;
          tier.push_back(std::move(r));
        }
      }
      std::shuffle(tier.begin(), tier.end(), rng);
      requests.insert(requests.end(), std::make_move_iterator(tier.begin()), std::make_move_iterator(tier.end()));
    }

    bool completed = true;
    const std::size_t before = count;
    for (const auto& r : requests) {
      if (count == order) {
        completed = false;
        break;
      }
      Bitset witness(order);
      for (Vertex v = 0; v < count; ++v) witness.set(v);
      for (Vertex a : r.adjacent) {
        witness &= g.row(a);
        witness.reset(a);
      }
      for (Vertex b : r.nonadjacent) {
        witness.and_not(g.row(b));
        witness.reset(b);
      }
      if (witness.any()) continue;
      const auto fresh = static_cast<Vertex>(count++);
      for (Vertex a : r.adjacent) g.add_edge(a, fresh);
    }
    if (completed) out.saturated_prefix = snapshot;
    if (count == before) ++max_request;  // every request met; widen the schedule
  }

  if (has_clique_of_size(g, Bitset::full(order), n))
    throw std::logic_error("knfree_generic produced a K_" + std::to_string(n));
  return out;
}

H3Prime h3_prime(std::size_t order, std::uint64_t seed) {
  H3Prime out;
  out.graph = knfree_generic(3, order, seed).graph;
  Graph& g = out.graph;
  bool found = false;
  for (Vertex u = 0; u < order && !found; ++u) {
    for (Vertex v = u + 1; v < order && !found; ++v) {
      if (g.adjacent(u, v)) continue;
      auto common = common_neighbors(g, u, v);
      if (common.size() < 3) continue;
      out.u = u;
      out.v = v;
      out.w = common.front();
      for (std::size_t i = 1; i < common.size(); ++i) ((i - 1) % 2 == 0 ? out.c_u : out.c_v).push_back(common[i]);
      found = true;
    }
  }
  if (!found) throw GraphError("h3_prime: no nonedge with three common neighbours; increase the order");
  for (Vertex x : out.c_u) g.remove_edge(x, out.v);
  for (Vertex x : out.c_v) g.remove_edge(x, out.u);
  return out;
}

Graph rado_plus_dominating(std::size_t order) {
  if (order < 2) throw std::invalid_argument("rado_plus_dominating needs order >= 2");
  const Graph base = oracle_truncate(rado_bit(), order - 1);
  Graph g(order);
  for (auto [u, v] : base.edges()) g.add_edge(u, v);
  const auto w = static_cast<Vertex>(order - 1);
  for (Vertex v = 0; v < w; ++v) g.add_edge(v, w);
  return g;
}

}  // namespace homext
