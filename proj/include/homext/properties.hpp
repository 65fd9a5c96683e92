#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homext/engine.hpp"
#include "homext/execution.hpp"
#include "homext/graph.hpp"
#include "homext/oracle.hpp"

namespace homext {

/// Cone: every finite set has a common neighbour. CoCone: every finite set has
/// a vertex outside it adjacent to none of it. DomainStep: every surjective
/// local monomorphism extends by one domain vertex. ImageStep: every surjective
/// local homomorphism gains a preimage for any new image vertex.
enum class Property { Cone, CoCone, DomainStep, ImageStep };

Property property_from_name(const std::string& s);
std::string_view name(Property p);

struct PropertyResult {
  Outcome outcome = Outcome::Holds;
  std::string witness;
  std::size_t instances = 0;
};

/// Quantifies over sets (or local maps) of size 1..k drawn from `probe`
/// (default: every vertex of the truncation); cones, co-cones and one-step
/// candidates are searched over the whole truncation and, when no inside
/// vertex works, over the declared outside. On oracle truncations a clean
/// pass is reported as UnknownAtBound.
PropertyResult check_property(const Truncation& t, Property p, std::size_t k,
                              const std::optional<VertexSet>& probe = std::nullopt);

/// Largest independent set.
std::size_t alpha(const Graph& g);
/// Largest independent set inside a neighbourhood (the largest induced star).
std::size_t sigma(const Graph& g);

struct AlphaSigmaReport {
  std::size_t alpha = 0, sigma = 0;
  long long bound = 0;  // 2 sigma + ceil(sigma / 2) - 1
  bool holds = false;   // alpha < bound
};

AlphaSigmaReport check_alpha_sigma_bound(const Graph& g);

/// Right inverse of the surjective endomorphism `endo` that extends `f`
/// (f(b) must be an endo-preimage of b), least preimage elsewhere. Throws
/// std::invalid_argument when `endo` is not a surjective endomorphism or f
/// does not fit.
std::vector<Vertex> complement_endo_transport(const Graph& g, const std::vector<Vertex>& endo, const PartialMap& f);

struct CoconeSet {
  VertexSet set;
  VertexSet cocones;
};

/// Sets of size 1..k inside `probe` whose co-cones form a nonempty finite set:
/// every co-cone lies below the horizon and the outside provably has none.
std::vector<CoconeSet> finite_cocone_scan(const Truncation& t, std::size_t k, const VertexSet& probe);

struct ExtensionAxiomReport {
  std::size_t pairs_checked = 0;
  /// Disjoint (A, B) inside the probe with no witness below the horizon.
  std::vector<std::pair<VertexSet, VertexSet>> failures;
};

/// For every disjoint A, B within the first `probe_size` vertices, look for
/// v outside A and B adjacent to all of A and none of B.
ExtensionAxiomReport check_extension_axioms(const Graph& g, std::size_t probe_size,
                                            Execution exec = Execution::Parallel);

}  // namespace homext
