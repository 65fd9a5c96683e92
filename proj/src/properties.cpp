#include "homext/properties.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homext {

Property property_from_name(const std::string& s) {
  if (s == "cone" || s == "triangle") return Property::Cone;
  if (s == "cocone" || s == "therefore") return Property::CoCone;
  if (s == "domain-step" || s == "star") return Property::DomainStep;
  if (s == "image-step" || s == "dagger") return Property::ImageStep;
  throw std::invalid_argument("unknown property: " + s);
}

std::string_view name(Property p) {
  switch (p) {
    case Property::Cone: return "cone";
    case Property::CoCone: return "cocone";
    case Property::DomainStep: return "domain-step";
    case Property::ImageStep: return "image-step";
  }
  return "?";
}

namespace {

std::string set_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

template <class Visit>
bool for_each_subset_of(const VertexSet& pool, std::size_t max_size, Visit&& visit) {
  VertexSet s;
  bool go = true;
  auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
    if (!go) return;
    if (s.size() == size) {
      go = visit(s);
      return;
    }
    for (std::size_t i = from; i < pool.size() && go; ++i) {
      s.push_back(pool[i]);
      self(self, i + 1, size);
      s.pop_back();
    }
  };
  for (std::size_t size = 1; size <= max_size && size <= pool.size() && go; ++size) rec(rec, 0, size);
  return go;
}

// Outcome of one existential instance: found inside, provably absent, or unsettled.
enum class Found { Yes, No, Unknown };

Found settle(const Truncation& t, const StepConstraints& c) {
  if (candidates(t.graph(), c).any()) return Found::Yes;
  return t.outside_may_satisfy(c.adjacent_to, c.nonadjacent_to) ? (t.certified() ? Found::Yes : Found::Unknown)
                                                                  : Found::No;
}

}  // namespace

PropertyResult check_property(const Truncation& t, Property p, std::size_t k, const std::optional<VertexSet>& probe) {
  if (k == 0) throw std::invalid_argument("property bound must be at least 1");
  const Graph& g = t.graph();
  const std::size_t n = g.order();
  VertexSet pool;
  if (probe) {
    pool = *probe;
    std::sort(pool.begin(), pool.end());
    validate_vertex_set(pool, n);
  } else {
    for (Vertex v = 0; v < n; ++v) pool.push_back(v);
  }

  PropertyResult r;
  bool unknown = false;
  if (p == Property::Cone || p == Property::CoCone) {
    for_each_subset_of(pool, k, [&](const VertexSet& s) {
      ++r.instances;
      StepConstraints c{Bitset(n), Bitset(n), Bitset(n)};
      for (Vertex v : s) {
        (p == Property::Cone ? c.adjacent_to : c.nonadjacent_to).set(v);
        c.excluded.set(v);
      }
      const Found f = settle(t, c);
      if (f == Found::No) {
        r.outcome = Outcome::Fails;
        r.witness = "set=" + set_string(s);
        return false;
      }
      unknown |= f == Found::Unknown;
      return true;
    });
  } else {
    const Graph local = induced_subgraph(g, pool);
    const MorphismKind kind = p == Property::DomainStep ? MorphismKind::Monomorphism : MorphismKind::Homomorphism;
    for_each_local_morphism(local, kind, k, [&](const PartialMap& lf) {
      std::vector<PartialMap::Pair> pairs;
      for (auto [a, b] : lf.pairs()) pairs.emplace_back(pool[a], pool[b]);
      const PartialMap f(std::move(pairs));
      for (Vertex v = 0; v < n; ++v) {
        const bool step_forth = p == Property::DomainStep;
        if (step_forth ? f.defines(v) : f.covers(v)) continue;
        ++r.instances;
        const auto c = step_forth ? extension_constraints(g, f, v, kind) : preimage_constraints(g, f, v, kind);
        const Found found = settle(t, c);
        if (found == Found::No) {
          r.outcome = Outcome::Fails;
          r.witness = "map=" + f.to_string() + (step_forth ? " c=" : " b=") + std::to_string(v);
          return false;
        }
        unknown |= found == Found::Unknown;
      }
      return true;
    });
  }
  if (r.outcome != Outcome::Fails && (unknown || !t.finite())) r.outcome = Outcome::UnknownAtBound;
  return r;
}

namespace {

std::size_t max_independent(const Graph& g, Bitset pool, std::size_t current, std::size_t best) {
  if (pool.none()) return std::max(best, current);
  if (current + pool.count() <= best) return best;
  const auto v = static_cast<Vertex>(pool.find_first());
  pool.reset(v);
  Bitset with = pool;
  with.and_not(g.row(v));
  best = max_independent(g, std::move(with), current + 1, best);
  // leaving v out only helps when some neighbour of v is still available
  if (pool.intersects(g.row(v))) best = max_independent(g, std::move(pool), current, best);
  return best;
}

}  // namespace

std::size_t alpha(const Graph& g) { return max_independent(g, Bitset::full(g.order()), 0, 0); }

std::size_t sigma(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= best) continue;
    best = std::max(best, max_independent(g, g.row(v), 0, best));
  }
  return best;
}

AlphaSigmaReport check_alpha_sigma_bound(const Graph& g) {
  AlphaSigmaReport r;
  r.alpha = alpha(g);
  r.sigma = sigma(g);
  const auto s = static_cast<long long>(r.sigma);
  r.bound = 2 * s + (s + 1) / 2 - 1;
  r.holds = static_cast<long long>(r.alpha) < r.bound;
  return r;
}

std::vector<Vertex> complement_endo_transport(const Graph& g, const std::vector<Vertex>& endo, const PartialMap& f) {
  const std::size_t n = g.order();
  if (endo.size() != n) throw std::invalid_argument("endomorphism must be total");
  std::vector<bool> hit(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (endo[v] >= n) throw std::invalid_argument("endomorphism leaves the graph");
    hit[endo[v]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw std::invalid_argument("endomorphism is not surjective");
  for (auto [u, v] : g.edges())
    if (!g.adjacent(endo[u], endo[v])) throw std::invalid_argument("map is not an endomorphism");

  std::vector<Vertex> inverse(n);
  std::vector<bool> fixed(n, false);
  for (auto [b, a] : f.pairs()) {
    if (b >= n || a >= n || endo[a] != b)
      throw std::invalid_argument("partial map is not inside a right inverse: " + std::to_string(b) + "->" +
                                  std::to_string(a));
    inverse[b] = a;
    fixed[b] = true;
  }
  for (Vertex a = n; a-- > 0;)
    if (!fixed[endo[a]]) inverse[endo[a]] = a;  // descending pass leaves the least preimage

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && (inverse[u] == inverse[v] || g.adjacent(inverse[u], inverse[v])))
        throw std::logic_error("right inverse is not an endomorphism of the complement");
  return inverse;
}

std::vector<CoconeSet> finite_cocone_scan(const Truncation& t, std::size_t k, const VertexSet& probe) {
  const Graph& g = t.graph();
  VertexSet pool = probe;
  std::sort(pool.begin(), pool.end());
  validate_vertex_set(pool, g.order());
  std::vector<CoconeSet> out;
  if (!t.certified()) return out;
  for_each_subset_of(pool, k, [&](const VertexSet& s) {
    Bitset members(g.order());
    Bitset inside = Bitset::full(g.order());
    for (Vertex v : s) {
      members.set(v);
      inside.and_not(g.row(v));
    }
    inside.and_not(members);
    if (inside.any() && !t.outside_may_satisfy(Bitset(g.order()), members)) out.push_back({s, inside.indices()});
    return true;
  });
  return out;
}

ExtensionAxiomReport check_extension_axioms(const Graph& g, std::size_t probe_size, Execution exec) {
  if (probe_size > g.order()) throw std::invalid_argument("probe larger than the graph");
  if (probe_size > 16) throw std::invalid_argument("probe too large for exhaustive pairs");
  std::size_t total = 1;
  for (std::size_t i = 0; i < probe_size; ++i) total *= 3;

  auto decode = [probe_size](std::size_t code, VertexSet& a, VertexSet& b) {
    a.clear();
    b.clear();
    for (Vertex v = 0; v < probe_size; ++v, code /= 3) {
      if (code % 3 == 1) a.push_back(v);
      if (code % 3 == 2) b.push_back(v);
    }
  };

  std::vector<char> failed(total, 0);
  const auto count = static_cast<long>(total);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
  for (long i = 0; i < count; ++i) {
    VertexSet a, b;
    decode(static_cast<std::size_t>(i), a, b);
    Bitset w = Bitset::full(g.order());
    for (Vertex x : a) w &= g.row(x);
    for (Vertex x : b) {
      w.and_not(g.row(x));
      w.reset(x);
    }
    failed[static_cast<std::size_t>(i)] = w.none();
  }

  ExtensionAxiomReport r;
  r.pairs_checked = total;
  for (std::size_t i = 0; i < total; ++i) {
    if (!failed[i]) continue;
    VertexSet a, b;
    decode(i, a, b);
    r.failures.emplace_back(std::move(a), std::move(b));
  }
  return r;
}

}  // namespace homext
