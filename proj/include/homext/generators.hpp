#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "homext/graph.hpp"
#include "homext/oracle.hpp"

namespace homext {

Graph complete_graph(std::size_t n);
Graph independent_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// A finite size or the countable cardinal omega.
struct Cardinal {
  bool omega = false;
  std::size_t value = 0;

  static Cardinal finite(std::size_t n) { return {false, n}; }
  static Cardinal countable() { return {true, 0}; }
  std::string to_string() const { return omega ? "omega" : std::to_string(value); }
};

/// Cantor pairing between vertices and (position, block) pairs.
Vertex cantor_pair(std::size_t position, std::size_t block);
std::pair<std::size_t, std::size_t> cantor_unpair(Vertex v);  // (position, block)

/// I_m[K_n] for finite m, n.
Graph composite(std::size_t m, std::size_t n);

/// I_m[K_n] with at least one omega factor. Block membership of vertex i:
/// i / n for (omega, n); i mod m for (m, omega); the Cantor block for (omega, omega).
OracleGraph composite_oracle(Cardinal m, Cardinal n);

std::variant<Graph, OracleGraph> composite(Cardinal m, Cardinal n);

/// The block that vertex v belongs to in composite_oracle(m, n).
std::size_t composite_block(Cardinal m, Cardinal n, Vertex v);

/// RS(n): vertices >= n form a clique, vertices < n are independent, and a low
/// vertex t is joined to a high vertex k iff k and t differ mod n.
OracleGraph rs_graph(std::size_t n);

/// Rado graph, BIT presentation: for i < j, i ~ j iff bit i of j is set.
OracleGraph rado_bit();
bool rado_bit_adjacent(Vertex u, Vertex v);

struct KnFreeGraph {
  Graph graph;
  /// Every extension request over {0..saturated_prefix-1} of the scheduled
  /// sizes has a witness in `graph`.
  std::size_t saturated_prefix = 0;
};

/// Staged K_n-free construction on `order` vertices: fresh vertices are added
/// adjacent to exactly A for each unmet request (A, B) with A K_{n-1}-free.
/// Requests with |A| + |B| <= max_request are served smallest first, ties
/// shuffled by `seed`.
KnFreeGraph knfree_generic(std::size_t n, std::size_t order, std::uint64_t seed,
                           std::size_t max_request = 3);

struct H3Prime {
  Graph graph;
  Vertex u = 0, v = 0, w = 0;
  VertexSet c_u, c_v;
};

/// Edge surgery on a triangle-free staged graph: the nonedge u, v keeps w as
/// its only common neighbour. Throws GraphError when no nonedge has three
/// common neighbours.
H3Prime h3_prime(std::size_t order, std::uint64_t seed);

/// rado_bit truncated to order - 1 vertices plus a dominating vertex order - 1.
Graph rado_plus_dominating(std::size_t order);

}  // namespace homext
