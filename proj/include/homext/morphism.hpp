#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homext/graph.hpp"

namespace homext {

/// Ordered: Isomorphism implies Monomorphism implies Homomorphism.
enum class MorphismKind { NotHomomorphism = 0, Homomorphism = 1, Monomorphism = 2, Isomorphism = 3 };

/// Endomorphism types. A implies I, B and E; B implies M and E; I implies M;
/// M and E imply H.
enum class EndoKind { H, M, I, E, B, A };

inline constexpr EndoKind kAllEndoKinds[] = {EndoKind::H, EndoKind::I, EndoKind::A,
                                             EndoKind::E, EndoKind::B, EndoKind::M};
inline constexpr MorphismKind kLocalKinds[] = {MorphismKind::Isomorphism, MorphismKind::Monomorphism,
                                               MorphismKind::Homomorphism};

char symbol(MorphismKind k);
char symbol(EndoKind y);
MorphismKind morphism_kind_from_symbol(char c);
EndoKind endo_kind_from_symbol(char c);
std::string_view name(MorphismKind k);

inline bool at_least(MorphismKind actual, MorphismKind required) {
  return static_cast<int>(actual) >= static_cast<int>(required);
}

/// True when every endomorphism of kind `stronger` is also of kind `weaker`.
bool endo_implies(EndoKind stronger, EndoKind weaker);

/// Least local-morphism strength an endomorphism of kind y restricts to.
MorphismKind restriction_kind(EndoKind y);

/// Finite partial function on vertices, kept sorted by source.
class PartialMap {
 public:
  using Pair = std::pair<Vertex, Vertex>;

  PartialMap() = default;
  /// Throws std::invalid_argument when a source repeats.
  explicit PartialMap(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  VertexSet domain() const;
  /// Sorted, duplicates removed.
  VertexSet image() const;
  std::optional<Vertex> operator()(Vertex v) const;
  bool defines(Vertex v) const { return (*this)(v).has_value(); }
  bool covers(Vertex v) const;
  bool injective() const;

  PartialMap with(Vertex source, Vertex target) const;
  PartialMap restricted_to(const VertexSet& s) const;
  /// Defined only for injective maps.
  PartialMap inverse() const;

  /// "u->v" pairs, comma separated, sorted by u.
  std::string to_string() const;
  static PartialMap parse(std::string_view text);

  bool operator==(const PartialMap&) const = default;
  auto operator<=>(const PartialMap&) const = default;

 private:
  std::vector<Pair> pairs_;
};

/// Strongest kind the map achieves as a local morphism of g.
template <AdjacencyRelation G>
MorphismKind classify_map(const G& g, const PartialMap& f) {
  if constexpr (requires { g.order(); }) {
    for (auto [s, t] : f.pairs())
      if (s >= g.order() || t >= g.order()) throw GraphError("map vertex out of range");
  }
  const auto& p = f.pairs();
  bool injective = true, preserves_nonedges = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const bool src = g.adjacent(p[i].first, p[j].first);
      const bool same = p[i].second == p[j].second;
      const bool dst = !same && g.adjacent(p[i].second, p[j].second);
      if (src && !dst) return MorphismKind::NotHomomorphism;
      if (same) injective = false;
      if (!src && dst) preserves_nonedges = false;
    }
  }
  if (!injective) return MorphismKind::Homomorphism;
  return preserves_nonedges ? MorphismKind::Isomorphism : MorphismKind::Monomorphism;
}

/// Visits every map with 1 <= |domain| <= max_domain, domain and image inside
/// {0..window-1}, of kind at least `kind`; ordered by domain size, then domain,
/// then image tuple. The visitor returns false to stop.
void for_each_local_morphism(const Graph& g, std::size_t window, MorphismKind kind, std::size_t max_domain,
                             const std::function<bool(const PartialMap&)>& visit);

inline void for_each_local_morphism(const Graph& g, MorphismKind kind, std::size_t max_domain,
                                    const std::function<bool(const PartialMap&)>& visit) {
  for_each_local_morphism(g, g.order(), kind, max_domain, visit);
}

std::vector<PartialMap> enumerate_local_morphisms(const Graph& g, MorphismKind kind, std::size_t max_domain);

/// Classes of equal image value, each sorted, ordered by least element.
std::vector<VertexSet> kernel(const PartialMap& f);
/// Least element of each kernel class.
VertexSet transversal(const PartialMap& f);

/// Bit i is 1 iff v ~ F[i]. Throws std::invalid_argument when v is in F.
template <AdjacencyRelation G>
std::vector<bool> neighborhood_indicator(const G& g, Vertex v, const VertexSet& f) {
  std::vector<bool> out;
  out.reserve(f.size());
  for (Vertex x : f) {
    if (x == v) throw std::invalid_argument("neighborhood_indicator: vertex belongs to the set");
    out.push_back(g.adjacent(v, x));
  }
  return out;
}

}  // namespace homext
