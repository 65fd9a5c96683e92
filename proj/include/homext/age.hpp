#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "homext/engine.hpp"
#include "homext/execution.hpp"
#include "homext/graph.hpp"
#include "homext/oracle.hpp"

namespace homext {

enum class Tri { No, Yes, Unknown };

char symbol(Tri t);

struct AgeEntry {
  Graph graph;  // canonical form
  std::string canon;
  std::size_t embeddings_seen = 0;
  /// More copies exist than were examined.
  bool capped = false;
  /// Some copy has a cone / some copy has none / some copy has a co-cone / some copy has none.
  Tri kk = Tri::No, okk = Tri::No, hh = Tri::No, ohh = Tri::No;
  /// Vertex sets of the examined copies, in lexicographic order.
  std::vector<VertexSet> copies;
};

inline constexpr std::size_t kDefaultEmbeddingCap = 500;

/// Isomorphism types of induced subgraphs on 1..k vertices with cone and
/// co-cone flags, ordered by size then canonical graph6. On truncations of
/// oracles, "no copy does" answers become Unknown.
std::vector<AgeEntry> compute_age(const Truncation& t, std::size_t k, std::size_t cap = kDefaultEmbeddingCap,
                                  Execution exec = Execution::Parallel);
std::vector<AgeEntry> compute_age(const Graph& g, std::size_t k, std::size_t cap = kDefaultEmbeddingCap,
                                  Execution exec = Execution::Parallel);

/// A surjective homomorphism a -> b exists.
bool order_preceq(const Graph& a, const Graph& b);
/// A surjective monomorphism a -> b exists.
bool order_sqsubseteq(const Graph& a, const Graph& b);

struct AgeOrder {
  std::vector<std::vector<bool>> preceq, sqsubseteq;
};

AgeOrder compute_age_order(const std::vector<AgeEntry>& age);
/// Reflexivity, transitivity, size monotonicity and inclusion of the mono order.
std::vector<std::string> order_violations(const std::vector<AgeEntry>& age, const AgeOrder& order);

/// "size=s canon=<graph6> kk=Y okk=N hh=U ohh=Y", one per entry.
std::vector<std::string> age_report(const std::vector<AgeEntry>& age);

enum class Criterion { HH, HE, ME };

struct ConditionResult {
  std::string name;
  Outcome outcome = Outcome::Holds;
  std::string witness;
};

struct CriterionReport {
  Criterion which = Criterion::HH;
  Outcome outcome = Outcome::Holds;
  std::vector<ConditionResult> conditions;
};

Criterion criterion_from_name(const std::string& s);
std::string_view name(Criterion c);

CriterionReport check_criterion(const std::vector<AgeEntry>& age, Criterion which);
CriterionReport check_criterion(const Truncation& t, Criterion which, std::size_t k);

}  // namespace homext
