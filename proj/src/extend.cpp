#include <bit>
#include <sstream>
#include <stdexcept>

#include "homext/engine.hpp"

namespace homext {

std::string_view name(Outcome o) {
  switch (o) {
    case Outcome::Fails: return "FAIL";
    case Outcome::UnknownAtBound: return "UNKNOWN";
    case Outcome::Holds: return "HOLD";
  }
  return "?";
}

std::string report_line(MorphismKind x, EndoKind y, const Verdict& v) {
  std::ostringstream os;
  os << name(v.outcome) << " X=" << symbol(x) << " Y=" << symbol(y);
  if (v.outcome == Outcome::Fails && v.witness) {
    os << " map=" << v.witness->to_string() << " stuck=";
    if (v.stuck)
      os << *v.stuck;
    else
      os << '-';
  }
  return os.str();
}

namespace {

void require_kind(const Graph& g, const PartialMap& f, MorphismKind kind) {
  if (!at_least(classify_map(g, f), kind))
    throw std::invalid_argument("map " + f.to_string() + " is not a " + std::string(name(kind)));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

StepConstraints extension_constraints(const Graph& g, const PartialMap& f, Vertex c, MorphismKind kind) {
  const std::size_t n = g.order();
  StepConstraints s{Bitset(n), Bitset(n), Bitset(n)};
  for (auto [x, fx] : f.pairs()) {
    if (g.adjacent(c, x))
      s.adjacent_to.set(fx);
    else if (kind == MorphismKind::Isomorphism)
      s.nonadjacent_to.set(fx);
    if (at_least(kind, MorphismKind::Monomorphism)) s.excluded.set(fx);
  }
  return s;
}

StepConstraints preimage_constraints(const Graph& g, const PartialMap& f, Vertex b, MorphismKind kind) {
  const std::size_t n = g.order();
  StepConstraints s{Bitset(n), Bitset(n), Bitset(n)};
  for (auto [x, fx] : f.pairs()) {
    s.excluded.set(x);
    if (!g.adjacent(fx, b))
      s.nonadjacent_to.set(x);
    else if (kind == MorphismKind::Isomorphism)
      s.adjacent_to.set(x);
  }
  return s;
}

Bitset candidates(const Graph& g, const StepConstraints& c) {
  Bitset out = Bitset::full(g.order());
  for (std::size_t v = c.adjacent_to.find_first(); v != Bitset::npos; v = c.adjacent_to.find_next(v + 1))
    out &= g.row(static_cast<Vertex>(v));
  for (std::size_t v = c.nonadjacent_to.find_first(); v != Bitset::npos; v = c.nonadjacent_to.find_next(v + 1))
    out.and_not(g.row(static_cast<Vertex>(v)));
  out.and_not(c.excluded);
  return out;
}

VertexSet one_step_extension(const Graph& g, const PartialMap& f, Vertex c, MorphismKind kind) {
  check_vertex(g, c);
  if (f.defines(c)) throw std::invalid_argument("vertex " + std::to_string(c) + " is already mapped");
  require_kind(g, f, kind);
  return candidates(g, extension_constraints(g, f, c, kind)).indices();
}

VertexSet one_step_preimage(const Graph& g, const PartialMap& f, Vertex b, MorphismKind kind) {
  check_vertex(g, b);
  if (f.covers(b)) throw std::invalid_argument("vertex " + std::to_string(b) + " is already covered");
  require_kind(g, f, kind);
  return candidates(g, preimage_constraints(g, f, b, kind)).indices();
}

namespace {

constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

struct EndoSearch {
  std::size_t n = 0;
  std::uint64_t all = 0;
  std::array<std::uint64_t, 64> rows{};
  bool injective = false, preserve_nonedges = false, surjective = false;
  std::array<int, 64> assign{};

  // Narrow the candidates of unassigned w after v -> d.
  std::uint64_t restrict(std::uint64_t cand, Vertex v, Vertex w, Vertex d) const {
    if (rows[v] & bit(w))
      cand &= rows[d];
    else if (preserve_nonedges)
      cand &= ~rows[d];
    if (injective) cand &= ~bit(d);
    return cand;
  }

  bool run(std::array<std::uint64_t, 64>& cand, std::uint64_t covered, std::size_t unassigned) {
    if (unassigned == 0) return !surjective || covered == all;
    if (surjective) {
      std::uint64_t reach = covered;
      for (std::size_t w = 0; w < n; ++w)
        if (assign[w] < 0) reach |= cand[w];
      if (reach != all) return false;
      if (static_cast<std::size_t>(std::popcount(all & ~covered)) > unassigned) return false;
    }
    std::size_t best = n;
    int best_count = 65;
    for (std::size_t w = 0; w < n; ++w) {
      if (assign[w] >= 0) continue;
      const int c = std::popcount(cand[w]);
      if (c < best_count) {
        best = w;
        best_count = c;
      }
    }
    if (best_count == 0) return false;
    const auto v = static_cast<Vertex>(best);
    for (std::uint64_t m = cand[v]; m; m &= m - 1) {
      const auto d = static_cast<Vertex>(std::countr_zero(m));
      auto next = cand;
      bool dead = false;
      for (std::size_t w = 0; w < n && !dead; ++w) {
        if (assign[w] >= 0 || w == v) continue;
        next[w] = restrict(cand[w], v, static_cast<Vertex>(w), d);
        dead = next[w] == 0;
      }
      if (dead) continue;
      assign[v] = static_cast<int>(d);
      if (run(next, covered | bit(d), unassigned - 1)) return true;
      assign[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> extend_finite(const Graph& g, const PartialMap& f, EndoKind y) {
  const std::size_t n = g.order();
  if (n > 64) throw GraphError("extend_finite supports at most 64 vertices");
  for (auto [s, t] : f.pairs()) {
    check_vertex(g, s);
    check_vertex(g, t);
  }
  if (!at_least(classify_map(g, f), restriction_kind(y))) return std::nullopt;

  EndoSearch s;
  s.n = n;
  s.all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
  for (Vertex v = 0; v < n; ++v) s.rows[v] = g.row64(v);
  s.injective = at_least(restriction_kind(y), MorphismKind::Monomorphism);
  s.preserve_nonedges = restriction_kind(y) == MorphismKind::Isomorphism;
  s.surjective = y == EndoKind::E || y == EndoKind::B || y == EndoKind::A;
  s.assign.fill(-1);

  std::array<std::uint64_t, 64> cand{};
  for (std::size_t w = 0; w < n; ++w) cand[w] = s.all;
  std::uint64_t covered = 0;
  for (auto [v, d] : f.pairs()) {
    s.assign[v] = static_cast<int>(d);
    covered |= bit(d);
  }
  for (auto [v, d] : f.pairs())
    for (std::size_t w = 0; w < n; ++w)
      if (s.assign[w] < 0) cand[w] = s.restrict(cand[w], v, static_cast<Vertex>(w), d);
  for (std::size_t w = 0; w < n; ++w)
    if (s.assign[w] < 0 && cand[w] == 0) return std::nullopt;

  if (!s.run(cand, covered, n - f.size())) return std::nullopt;
  std::vector<Vertex> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<Vertex>(s.assign[v]);
  return out;
}

std::optional<Vertex> stuck_vertex(const Graph& g, const PartialMap& f, EndoKind y) {
  const MorphismKind k = restriction_kind(y);
  for (Vertex c = 0; c < g.order(); ++c)
    if (!f.defines(c) && candidates(g, extension_constraints(g, f, c, k)).none()) return c;
  if (y == EndoKind::E || y == EndoKind::B || y == EndoKind::A) {
    for (Vertex b = 0; b < g.order(); ++b)
      if (!f.covers(b) && candidates(g, preimage_constraints(g, f, b, k)).none()) return b;
  }
  return std::nullopt;
}

}  // namespace homext
