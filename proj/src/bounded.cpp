#include <algorithm>
#include <sstream>

#include "homext/engine.hpp"

namespace homext {

std::string_view name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Completed: return "completed";
    case TraceStatus::Stuck: return "stuck";
    case TraceStatus::HorizonExhausted: return "horizon exhausted";
  }
  return "?";
}

Schedule schedule_for(EndoKind y) {
  const MorphismKind k = restriction_kind(y);
  Schedule s;
  s.forth = k;
  const bool back = y == EndoKind::E || y == EndoKind::B || y == EndoKind::A;
  if (back) s.back = k;
  s.header = std::string("schedule for ") + symbol(y) + ": " + std::string(name(k)) + " steps" +
             (back ? ", alternating back (even steps) and forth" : ", forth only");
  return s;
}

Schedule iso_forth_hom_back_schedule() {
  Schedule s;
  s.forth = MorphismKind::Isomorphism;
  s.back = MorphismKind::Homomorphism;
  s.header =
      "isomorphism forth, homomorphism back; an unproven analogue, not a characterisation of any endomorphism class";
  return s;
}

namespace {

struct Step {
  StepDirection direction;
  Vertex vertex;
  StepConstraints constraints;
  Bitset forbidden;  // vertices a twin swap must avoid
};

// Next step of the schedule, or nullopt when every vertex inside the horizon is mapped and covered.
std::optional<Step> next_step(const Graph& g, const PartialMap& f, const Schedule& s, std::size_t index) {
  const bool back = s.back && index % 2 == 0;
  const std::size_t n = g.order();
  Bitset dom(n), img(n);
  for (auto [x, y] : f.pairs()) {
    dom.set(x);
    img.set(y);
  }
  auto back_step = [&]() -> std::optional<Step> {
    if (!s.back) return std::nullopt;
    for (Vertex b = 0; b < n; ++b)
      if (!img.test(b)) return Step{StepDirection::Back, b, preimage_constraints(g, f, b, *s.back), dom};
    return std::nullopt;
  };
  auto forth_step = [&]() -> std::optional<Step> {
    for (Vertex c = 0; c < n; ++c)
      if (!dom.test(c)) return Step{StepDirection::Forth, c, extension_constraints(g, f, c, s.forth), img};
    return std::nullopt;
  };
  // when the scheduled side is exhausted the other side takes the step
  if (back) {
    if (auto st = back_step()) return st;
    return forth_step();
  }
  if (auto st = forth_step()) return st;
  return back_step();
}

PartialMap extend(const PartialMap& f, const Step& st, Vertex choice) {
  return st.direction == StepDirection::Forth ? f.with(st.vertex, choice) : f.with(choice, st.vertex);
}

struct Refuter {
  const Truncation& t;
  const Schedule& schedule;
  std::size_t depth;
  std::size_t budget;
  RefutationResult result;

  // true when no endomorphism of the scheduled kind extends f
  bool dead(const PartialMap& f, std::size_t index) {
    if (index == depth) return false;
    if (++result.nodes > budget) {
      result.budget_exhausted = true;
      return false;
    }
    const auto st = next_step(t.graph(), f, schedule, index);
    if (!st) return false;
    const Bitset inside = candidates(t.graph(), st->constraints);
    for (std::size_t v = inside.find_first(); v != Bitset::npos; v = inside.find_next(v + 1))
      if (!dead(extend(f, *st, static_cast<Vertex>(v)), index + 1)) return false;
    if (t.outside_may_satisfy_uncovered(st->constraints.adjacent_to, st->constraints.nonadjacent_to,
                                        st->forbidden))
      return false;
    if (inside.none() && !result.stuck) {
      result.stuck = st->vertex;
      result.stuck_direction = st->direction;
      result.stuck_step = index;
    }
    return true;
  }
};

std::size_t constraint_score(const Graph& g, const PartialMap& f) {
  std::size_t score = 0;
  const auto& p = f.pairs();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (!g.adjacent(p[i].first, p[j].first) &&
          (p[i].second == p[j].second || g.adjacent(p[i].second, p[j].second)))
        ++score;
  return score;
}

}  // namespace

ExtensionTrace back_and_forth(const Truncation& t, const PartialMap& f, const Schedule& s, std::size_t depth) {
  const Graph& g = t.graph();
  for (auto [x, y] : f.pairs())
    if (x >= g.order() || y >= g.order()) throw GraphError("map leaves the horizon");
  const MorphismKind needed = s.back ? std::min(s.forth, *s.back) : s.forth;
  if (!at_least(classify_map(g, f), needed))
    throw std::invalid_argument("map " + f.to_string() + " is weaker than the schedule's steps");

  ExtensionTrace trace;
  trace.header = s.header;
  trace.final_map = f;
  for (std::size_t i = 0; i < depth; ++i) {
    const auto st = next_step(g, trace.final_map, s, i);
    if (!st) {
      trace.status = TraceStatus::HorizonExhausted;
      return trace;
    }
    const Bitset inside = candidates(g, st->constraints);
    if (inside.none()) {
      const bool outside = t.outside_may_satisfy(st->constraints.adjacent_to, st->constraints.nonadjacent_to);
      trace.status = outside ? TraceStatus::HorizonExhausted : TraceStatus::Stuck;
      trace.certified = !outside;
      trace.stuck_vertex = st->vertex;
      trace.stuck_direction = st->direction;
      return trace;
    }
    const auto choice = static_cast<Vertex>(inside.find_first());
    trace.final_map = extend(trace.final_map, *st, choice);
    if (st->direction == StepDirection::Forth)
      trace.steps.push_back({i, st->direction, st->vertex, choice, "image of " + std::to_string(st->vertex) + " (" + std::string(name(s.forth)) + ")"});
    else
      trace.steps.push_back({i, st->direction, choice, st->vertex, "preimage of " + std::to_string(st->vertex) + " (" + std::string(name(*s.back)) + ")"});
  }
  trace.status = TraceStatus::Completed;
  return trace;
}

ExtensionTrace back_and_forth(const OracleGraph& o, const PartialMap& f, EndoKind y, std::size_t depth,
                              std::size_t horizon) {
  return back_and_forth(Truncation::of(o, horizon), f, schedule_for(y), depth);
}

namespace {

struct LocalRefuter {
  const Truncation& t;
  MorphismKind kind;
  const VertexSet& targets;
  std::size_t budget;
  RefutationResult result;

  bool dead(const PartialMap& f, std::size_t next) {
    while (next < targets.size() && f.defines(targets[next])) ++next;
    if (next == targets.size()) return false;
    if (++result.nodes > budget) {
      result.budget_exhausted = true;
      return false;
    }
    const Vertex c = targets[next];
    const auto cons = extension_constraints(t.graph(), f, c, kind);
    const Bitset inside = candidates(t.graph(), cons);
    for (std::size_t v = inside.find_first(); v != Bitset::npos; v = inside.find_next(v + 1))
      if (!dead(f.with(c, static_cast<Vertex>(v)), next + 1)) return false;
    Bitset img(t.horizon());
    for (auto [x, y] : f.pairs()) img.set(y);
    if (t.outside_may_satisfy_uncovered(cons.adjacent_to, cons.nonadjacent_to, img)) return false;
    if (inside.none() && !result.stuck) {
      result.stuck = c;
      result.stuck_direction = StepDirection::Forth;
      result.stuck_step = next;
    }
    return true;
  }
};

}  // namespace

RefutationResult refute_local_extension(const Truncation& t, const PartialMap& f, MorphismKind kind,
                                        const VertexSet& targets, std::size_t node_budget) {
  for (auto [a, b] : f.pairs())
    if (a >= t.horizon() || b >= t.horizon()) throw GraphError("map leaves the horizon");
  for (Vertex v : targets)
    if (v >= t.horizon()) throw GraphError("target leaves the horizon");
  LocalRefuter r{t, kind, targets, node_budget, {}};
  if (!at_least(classify_map(t.graph(), f), kind)) {
    r.result.refuted = true;
    return r.result;
  }
  r.result.refuted = r.dead(f, 0);
  return r.result;
}

RefutationResult refute_extension(const Truncation& t, const PartialMap& f, EndoKind y, std::size_t depth,
                                  std::size_t node_budget) {
  for (auto [a, b] : f.pairs())
    if (a >= t.horizon() || b >= t.horizon()) throw GraphError("map leaves the horizon");
  const Schedule s = schedule_for(y);
  Refuter r{t, s, depth, node_budget, {}};
  if (!at_least(classify_map(t.graph(), f), restriction_kind(y))) {
    r.result.refuted = true;
    return r.result;
  }
  r.result.refuted = r.dead(f, 0);
  return r.result;
}

Verdict decide_xy_bounded(const Truncation& t, MorphismKind x, EndoKind y, const BoundedParams& p) {
  const std::size_t window = std::min(p.window, t.horizon());
  std::vector<PartialMap> maps;
  for_each_local_morphism(t.graph(), window, x, p.max_domain, [&](const PartialMap& f) {
    maps.push_back(f);
    return true;
  });
  std::vector<std::size_t> score(maps.size());
  std::vector<std::size_t> order(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    score[i] = constraint_score(t.graph(), maps[i]);
    order[i] = i;
  }
  // most constrained maps first; enumeration order otherwise
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });

  std::size_t exhausted = 0;
  for (std::size_t i : order) {
    const auto r = refute_extension(t, maps[i], y, p.depth, p.node_budget);
    if (r.refuted) {
      std::ostringstream os;
      if (!r.stuck) {
        os << "map is weaker than a " << name(restriction_kind(y));
      } else {
        os << "every branch dies within " << (t.finite() ? "the finite graph" : "horizon " + std::to_string(t.horizon()))
           << "; first dead end at step " << r.stuck_step << " ("
           << (r.stuck_direction == StepDirection::Back ? "no preimage for " : "no image for ") << *r.stuck << ")";
        if (!t.finite()) os << "; vertices beyond the horizon ruled out by adjacency profile or twin swap";
      }
      return Verdict::fails(maps[i], r.stuck, os.str());
    }
    if (r.budget_exhausted) ++exhausted;
  }
  std::ostringstream os;
  os << "no certified failure among " << maps.size() << " local morphisms (window " << window << ", k "
     << p.max_domain << ", depth " << p.depth << ", horizon " << t.horizon() << ")";
  if (exhausted) os << "; node budget exhausted on " << exhausted;
  return Verdict::unknown(os.str());
}

Verdict decide_xy_bounded(const OracleGraph& o, MorphismKind x, EndoKind y, const BoundedParams& p) {
  return decide_xy_bounded(Truncation::of(o, p.horizon), x, y, p);
}

}  // namespace homext
