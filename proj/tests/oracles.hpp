#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond the Graph container, and are only fit for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homext/graph.hpp"

namespace oracle {

using homext::Graph;
using homext::Vertex;

inline std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Lexicographically largest upper-triangle adjacency code over all labellings.
inline std::string max_code(const Graph& g) {
  const auto m = matrix(g);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string code;
    for (std::size_t p = 1; p < perm.size(); ++p)
      for (std::size_t q = 0; q < p; ++q) code += m[perm[p]][perm[q]] ? '1' : '0';
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Number of isomorphism classes on n vertices by exhausting labelled graphs.
inline std::size_t count_classes(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<std::string> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1u) g.add_edge(slots[i].first, slots[i].second);
    codes.push_back(max_code(g));
  }
  std::sort(codes.begin(), codes.end());
  return static_cast<std::size_t>(std::unique(codes.begin(), codes.end()) - codes.begin());
}

enum class Endo { H, M, I, E, B, A };

/// Does some total map of the given kind agree with the partial map `fixed`
/// (entries -1 are free)? Enumerates all n^n maps.
inline bool exists_endo(const Graph& g, const std::vector<int>& fixed, Endo kind) {
  const std::size_t n = g.order();
  const auto m = matrix(g);
  std::vector<Vertex> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v)
      if (fixed[v] >= 0 && f[v] != static_cast<Vertex>(fixed[v])) ok = false;
    std::vector<int> hits(n, 0);
    for (Vertex v : f) ++hits[v];
    const bool injective = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    const bool surjective = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if (m[u][v] && !m[f[u]][f[v]]) ok = false;
        if ((kind == Endo::I || kind == Endo::A) && !m[u][v] && (f[u] == f[v] || m[f[u]][f[v]])) ok = false;
      }
    if (ok) {
      switch (kind) {
        case Endo::H: return true;
        case Endo::M:
        case Endo::I:
          if (injective) return true;
          break;
        case Endo::E:
          if (surjective) return true;
          break;
        case Endo::B:
        case Endo::A:
          if (injective && surjective) return true;
          break;
      }
    }
    std::size_t i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) return false;
  }
}

inline std::size_t alpha(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u)
      for (Vertex v = u + 1; v < n && ok; ++v)
        if ((mask >> u & 1u) && (mask >> v & 1u) && g.adjacent(u, v)) ok = false;
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Largest s such that K_{1,s} is an induced subgraph, by searching star embeddings.
inline std::size_t star_number(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (Vertex centre = 0; centre < n; ++centre) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (mask >> centre & 1u) continue;
      std::vector<Vertex> leaves;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1u) leaves.push_back(v);
      bool star = true;
      for (std::size_t i = 0; i < leaves.size() && star; ++i) {
        if (!g.adjacent(centre, leaves[i])) star = false;
        for (std::size_t j = i + 1; j < leaves.size() && star; ++j)
          if (g.adjacent(leaves[i], leaves[j])) star = false;
      }
      if (star) best = std::max(best, leaves.size());
    }
  }
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace oracle
