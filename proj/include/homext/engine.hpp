#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "homext/bitset.hpp"
#include "homext/graph.hpp"
#include "homext/morphism.hpp"
#include "homext/oracle.hpp"

namespace homext {

enum class Outcome { Fails, UnknownAtBound, Holds };

std::string_view name(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::Holds;
  /// A local morphism with no extension of the required kind.
  std::optional<PartialMap> witness;
  /// First vertex that cannot be handled: an unmapped vertex with no image, or
  /// an uncovered vertex with no preimage.
  std::optional<Vertex> stuck;
  /// Why a failure is definite, or what bound stopped the search.
  std::string note;

  static Verdict holds() { return {}; }
  static Verdict unknown(std::string note) { return {Outcome::UnknownAtBound, std::nullopt, std::nullopt, std::move(note)}; }
  static Verdict fails(PartialMap f, std::optional<Vertex> stuck, std::string note = {}) {
    return {Outcome::Fails, std::move(f), stuck, std::move(note)};
  }
};

/// "FAIL X=M Y=H map=0->0,2->1 stuck=1", "HOLD X=I Y=A" or "UNKNOWN X=I Y=A".
std::string report_line(MorphismKind x, EndoKind y, const Verdict& v);

/// Constraints a single new vertex must meet: adjacent to every vertex of
/// `adjacent_to`, adjacent to none of `nonadjacent_to`, outside `excluded`.
struct StepConstraints {
  Bitset adjacent_to;
  Bitset nonadjacent_to;
  Bitset excluded;
};

/// Images d for an unmapped vertex c keeping f + (c -> d) of kind at least `kind`.
StepConstraints extension_constraints(const Graph& g, const PartialMap& f, Vertex c, MorphismKind kind);
/// Preimages a for an uncovered vertex b keeping f + (a -> b) of kind at least `kind`.
StepConstraints preimage_constraints(const Graph& g, const PartialMap& f, Vertex b, MorphismKind kind);
Bitset candidates(const Graph& g, const StepConstraints& c);

/// Throws std::invalid_argument when c is already mapped or f is weaker than `kind`.
VertexSet one_step_extension(const Graph& g, const PartialMap& f, Vertex c, MorphismKind kind);
/// Throws std::invalid_argument when b is already covered or f is weaker than `kind`.
VertexSet one_step_preimage(const Graph& g, const PartialMap& f, Vertex b, MorphismKind kind);

/// Endomorphism of kind y extending f, or nullopt. Exhaustive; needs order <= 64.
std::optional<std::vector<Vertex>> extend_finite(const Graph& g, const PartialMap& f, EndoKind y);

/// Least unmapped vertex with no one-step image, else (for surjective kinds)
/// least uncovered vertex with no one-step preimage.
std::optional<Vertex> stuck_vertex(const Graph& g, const PartialMap& f, EndoKind y);

/// Exact XY verdict on a finite graph; the witness is the first failing
/// X-morphism in enumeration order.
Verdict decide_xy_finite(const Graph& g, MorphismKind x, EndoKind y);

/// The 18 verdicts, indexed by X in {I, M, H} and Y in {H, I, A, E, B, M}.
class MembershipVector {
 public:
  static std::size_t index(MorphismKind x, EndoKind y);
  Verdict& at(MorphismKind x, EndoKind y) { return entries_[index(x, y)]; }
  const Verdict& at(MorphismKind x, EndoKind y) const { return entries_[index(x, y)]; }
  bool holds(MorphismKind x, EndoKind y) const { return at(x, y).outcome == Outcome::Holds; }
  /// 18 characters, '1' for Holds, '0' for Fails, '?' otherwise.
  std::string bits() const;
  /// Pairs (stronger class, weaker class) where the stronger holds and the weaker fails.
  std::vector<std::string> monotonicity_violations() const;

 private:
  std::array<Verdict, 18> entries_{};
};

/// Same answers as decide_xy_finite for every pair, sharing extension work.
MembershipVector classify_finite(const Graph& g);

/// Image components forced by f in a disjoint union of cliques, when they
/// explain a failure: "image confined to one component" style text, else empty.
std::string forced_component_explanation(const Graph& g, const PartialMap& f, EndoKind y);

// ---- bounded search on truncations ----

struct BoundedParams {
  std::size_t max_domain = 4;
  std::size_t horizon = 64;
  std::size_t depth = 16;
  /// Local morphisms are drawn from the first `window` vertices.
  std::size_t window = 8;
  /// Search nodes allowed per refutation attempt.
  std::size_t node_budget = 200000;
};

enum class StepDirection { Forth, Back };

/// Forth steps extend the domain with the given kind; when `back` is set,
/// even steps add a preimage instead.
struct Schedule {
  MorphismKind forth = MorphismKind::Homomorphism;
  std::optional<MorphismKind> back;
  std::string header;
};

Schedule schedule_for(EndoKind y);
/// Isomorphism forth steps, homomorphism back steps. Not known to characterise
/// any endomorphism class.
Schedule iso_forth_hom_back_schedule();

enum class TraceStatus { Completed, Stuck, HorizonExhausted };

std::string_view name(TraceStatus s);

struct TraceStep {
  std::size_t index = 0;
  StepDirection direction = StepDirection::Forth;
  Vertex source = 0, target = 0;
  std::string rule;
};

struct ExtensionTrace {
  std::string header;
  std::vector<TraceStep> steps;
  PartialMap final_map;
  TraceStatus status = TraceStatus::Completed;
  std::optional<Vertex> stuck_vertex;
  std::optional<StepDirection> stuck_direction;
  /// Stuck is certified when no vertex beyond the horizon could serve either.
  bool certified = false;
};

/// Greedy trace: each step takes the least candidate.
ExtensionTrace back_and_forth(const Truncation& t, const PartialMap& f, const Schedule& s, std::size_t depth);
ExtensionTrace back_and_forth(const OracleGraph& o, const PartialMap& f, EndoKind y, std::size_t depth,
                              std::size_t horizon);

struct RefutationResult {
  bool refuted = false;
  bool budget_exhausted = false;
  std::size_t nodes = 0;
  /// First dead end met: the vertex and direction of the step that had no candidate.
  std::optional<Vertex> stuck;
  std::optional<StepDirection> stuck_direction;
  std::size_t stuck_step = 0;
};

/// Exhaustive search over every choice of the schedule for Y, up to `depth`
/// steps. Refuted means no endomorphism of kind y extends f, using the outside
/// classes and twin swaps to rule out vertices beyond the horizon.
RefutationResult refute_extension(const Truncation& t, const PartialMap& f, EndoKind y, std::size_t depth,
                                  std::size_t node_budget);

/// Refuted when f has no extension of the given kind to dom(f) plus
/// `targets` (so no endomorphism restricting to that kind extends f).
RefutationResult refute_local_extension(const Truncation& t, const PartialMap& f, MorphismKind kind,
                                        const VertexSet& targets, std::size_t node_budget);

/// Fails with a certified witness, or UnknownAtBound. Never Holds.
Verdict decide_xy_bounded(const Truncation& t, MorphismKind x, EndoKind y, const BoundedParams& p);
Verdict decide_xy_bounded(const OracleGraph& o, MorphismKind x, EndoKind y, const BoundedParams& p);

}  // namespace homext
