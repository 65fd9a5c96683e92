#include "homext/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace homext {

OracleGraph::OracleGraph(std::string name, Predicate adjacency, Representatives outside, Metadata metadata,
                         TwinKey twins)
    : name_(std::move(name)),
      adjacency_(std::move(adjacency)),
      outside_(std::move(outside)),
      metadata_(std::move(metadata)),
      twins_(std::move(twins)) {}

std::optional<VertexSet> OracleGraph::outside_representatives(std::size_t horizon) const {
  if (!outside_) return std::nullopt;
  return outside_(horizon);
}

Graph oracle_truncate(const OracleGraph& o, std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    if (o.adjacent(u, u)) throw GraphError(o.name() + ": predicate reports a loop at " + std::to_string(u));
    for (Vertex v = u + 1; v < n; ++v) {
      const bool uv = o.adjacent(u, v);
      if (uv != o.adjacent(v, u))
        throw GraphError(o.name() + ": asymmetric adjacency at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      if (uv) g.add_edge(u, v);
    }
  }
  return g;
}

OracleGraph complement(const OracleGraph& o) {
  auto meta = o.metadata();
  meta["complement-of"] = o.name();
  OracleGraph::Representatives outside;
  if (o.declares_outside()) outside = [o](std::size_t horizon) { return *o.outside_representatives(horizon); };
  // swapping twins is an automorphism of the complement as well
  return OracleGraph(
      "co-" + o.name(), [o](Vertex u, Vertex v) { return u != v && !o.adjacent(u, v); },
      std::move(outside), std::move(meta), [o](Vertex v) { return o.twin_key(v); });
}

Truncation Truncation::of(Graph g) {
  Truncation t;
  t.graph_ = std::move(g);
  t.finite_ = true;
  t.classes_ = std::vector<OutsideClass>{};
  t.name_ = "finite";
  return t;
}

Truncation Truncation::of(const OracleGraph& o, std::size_t horizon) {
  Truncation t;
  t.graph_ = oracle_truncate(o, horizon);
  t.finite_ = false;
  t.name_ = o.name();
  if (auto reps = o.outside_representatives(horizon)) {
    std::map<std::size_t, VertexSet> by_key;
    for (Vertex v = 0; v < horizon; ++v)
      if (auto k = o.twin_key(v)) by_key[*k].push_back(v);
    std::vector<OutsideClass> classes;
    for (Vertex r : *reps) {
      if (r < horizon) throw GraphError(o.name() + ": outside representative inside the horizon");
      OutsideClass c{Bitset(horizon), {}};
      for (Vertex v = 0; v < horizon; ++v)
        if (o.adjacent(r, v)) c.profile.set(v);
      if (auto k = o.twin_key(r)) {
        if (auto it = by_key.find(*k); it != by_key.end()) c.inside_twins = it->second;
      }
      classes.push_back(std::move(c));
    }
    t.classes_ = std::move(classes);
  }
  return t;
}

bool Truncation::outside_may_satisfy(const Bitset& must_adjacent, const Bitset& must_not_adjacent) const {
  if (!classes_) return true;
  for (const auto& c : *classes_)
    if (must_adjacent.is_subset_of(c.profile) && !c.profile.intersects(must_not_adjacent)) return true;
  return false;
}

bool Truncation::outside_may_satisfy_uncovered(const Bitset& must_adjacent, const Bitset& must_not_adjacent,
                                               const Bitset& forbidden) const {
  if (!classes_) return true;
  for (const auto& c : *classes_) {
    if (!must_adjacent.is_subset_of(c.profile) || c.profile.intersects(must_not_adjacent)) continue;
    const bool covered = std::any_of(c.inside_twins.begin(), c.inside_twins.end(),
                                     [&](Vertex v) { return !forbidden.test(v); });
    if (!covered) return true;
  }
  return false;
}

const std::vector<Truncation::OutsideClass>& Truncation::outside_classes() const {
  static const std::vector<OutsideClass> empty;
  return classes_ ? *classes_ : empty;
}

}  // namespace homext
