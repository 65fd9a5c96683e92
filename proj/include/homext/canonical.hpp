#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homext/graph.hpp"

namespace homext {

inline constexpr std::size_t kCanonicalCap = 10;

struct CanonicalLabeling {
  Graph graph;
  /// relabel[v] is the position of input vertex v in `graph`.
  std::vector<Vertex> relabel;
};

/// Canonical relabelling: isomorphic inputs produce identical graphs.
/// Throws GraphError when g.order() exceeds kCanonicalCap.
CanonicalLabeling canonical_form(const Graph& g);

/// graph6 string of the canonical form; a complete isomorphism invariant.
std::string canonical_key(const Graph& g);

/// One canonical representative per isomorphism class on exactly n vertices,
/// sorted by canonical graph6.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// All classes on 1..max_n vertices, by order then canonical graph6.
std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n);

}  // namespace homext
