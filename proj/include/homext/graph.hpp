#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homext/bitset.hpp"

namespace homext {

using Vertex = std::uint32_t;

/// Strictly increasing list of distinct vertices.
using VertexSet = std::vector<Vertex>;

/// Upper bound on the order of any FiniteGraph built by this library.
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 14;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Anything that answers adjacency queries between vertices.
template <class G>
concept AdjacencyRelation = requires(const G& g, Vertex u, Vertex v) {
  { g.adjacent(u, v) } -> std::convertible_to<bool>;
};

/// Simple undirected loopless graph on {0..n-1}, adjacency stored as bitset rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
  /// First 64 bits of the row; the whole row when order() <= 64.
  std::uint64_t row64(Vertex v) const noexcept { return rows_[v].word(0); }

  std::size_t degree(Vertex v) const noexcept { return rows_[v].count(); }
  VertexSet neighbors(Vertex v) const { return rows_[v].indices(); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<Bitset> rows_;
};

/// Throws GraphError unless `s` is strictly increasing with every entry < n.
void validate_vertex_set(const VertexSet& s, std::size_t n);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
/// G[H]: vertex (g, h) is encoded as g * |H| + h.
Graph lex_product(const Graph& g, const Graph& h);
/// Components sorted by least vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// True when g is isomorphic to I_m[K_n] for some m, n (all components are cliques of one size).
bool is_equal_clique_union(const Graph& g);

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);
Graph delete_vertex(const Graph& g, Vertex v);

/// An isomorphism g -> h as a vertex array, found by backtracking; any order.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
inline bool isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

/// Apply a relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace homext
