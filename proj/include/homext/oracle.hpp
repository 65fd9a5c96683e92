#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homext/graph.hpp"

namespace homext {

/// A countable graph on the natural numbers given by a pure adjacency predicate.
///
/// A generator may also declare structure the bounded checkers are allowed to
/// trust (the metadata map is for reports only):
///  - outside representatives: for a horizon N, finite list of vertices >= N
///    such that every vertex u >= N has the same adjacency to {0..N-1} as some
///    listed r, and u has the same twin key as r whenever r's key is shared by
///    a vertex below N;
///  - twin keys: vertices with equal keys are twins (swapping them is an
///    automorphism).
class OracleGraph {
 public:
  using Predicate = std::function<bool(Vertex, Vertex)>;
  using Representatives = std::function<VertexSet(std::size_t horizon)>;
  using TwinKey = std::function<std::optional<std::size_t>(Vertex)>;
  using Metadata = std::map<std::string, std::string>;

  OracleGraph(std::string name, Predicate adjacency, Representatives outside = {},
              Metadata metadata = {}, TwinKey twins = {});

  bool adjacent(Vertex u, Vertex v) const { return adjacency_(u, v); }
  const std::string& name() const noexcept { return name_; }
  const Metadata& metadata() const noexcept { return metadata_; }

  /// Representatives of the vertices beyond `horizon`, when the generator declares them.
  std::optional<VertexSet> outside_representatives(std::size_t horizon) const;
  bool declares_outside() const noexcept { return static_cast<bool>(outside_); }
  std::optional<std::size_t> twin_key(Vertex v) const { return twins_ ? twins_(v) : std::nullopt; }

 private:
  std::string name_;
  Predicate adjacency_;
  Representatives outside_;
  Metadata metadata_;
  TwinKey twins_;
};

/// Induced subgraph on {0..n-1}. Throws GraphError when the predicate reports a
/// loop or an asymmetric pair.
Graph oracle_truncate(const OracleGraph& o, std::size_t n);

OracleGraph complement(const OracleGraph& o);

/// A finite window onto a graph: the finite graph itself, or an oracle
/// truncated at a horizon together with the adjacency profiles (restricted to
/// the window) of the vertices beyond it.
///
/// For a finite graph the outside is empty, so every "no vertex outside the
/// window does X" question is settled exactly.
class Truncation {
 public:
  static Truncation of(Graph g);
  static Truncation of(const OracleGraph& o, std::size_t horizon);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t horizon() const noexcept { return graph_.order(); }
  bool finite() const noexcept { return finite_; }
  /// True when the outside is known (finite graphs, or oracles with declared representatives).
  bool certified() const noexcept { return classes_.has_value(); }
  const std::string& name() const noexcept { return name_; }

  struct OutsideClass {
    Bitset profile;  // adjacency to {0..horizon-1}
    VertexSet inside_twins;  // vertices below the horizon that are twins of this class
  };

  /// Could some vertex beyond the horizon be adjacent to all of `must_adjacent`
  /// and to none of `must_not_adjacent`? Always true when uncertified.
  bool outside_may_satisfy(const Bitset& must_adjacent, const Bitset& must_not_adjacent) const;

  /// As outside_may_satisfy, but a class is ignored when it has an inside twin
  /// outside `forbidden`: any choice of an outside vertex from it can be
  /// swapped for that twin by an automorphism fixing `forbidden`.
  bool outside_may_satisfy_uncovered(const Bitset& must_adjacent, const Bitset& must_not_adjacent,
                                     const Bitset& forbidden) const;

  /// Outside classes; empty for finite graphs and for uncertified oracles.
  const std::vector<OutsideClass>& outside_classes() const;

 private:
  Graph graph_;
  bool finite_ = true;
  std::optional<std::vector<OutsideClass>> classes_;
  std::string name_;
};

}  // namespace homext
