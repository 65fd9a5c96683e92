#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "homext/engine.hpp"

namespace homext {

namespace {

bool surjective_kind(EndoKind y) { return y == EndoKind::E || y == EndoKind::B || y == EndoKind::A; }

std::size_t x_index(MorphismKind x) {
  switch (x) {
    case MorphismKind::Isomorphism: return 0;
    case MorphismKind::Monomorphism: return 1;
    case MorphismKind::Homomorphism: return 2;
    default: throw std::invalid_argument("X must be I, M or H");
  }
}

std::size_t y_index(EndoKind y) {
  for (std::size_t i = 0; i < 6; ++i)
    if (kAllEndoKinds[i] == y) return i;
  throw std::invalid_argument("bad endomorphism kind");
}

Verdict failure(const Graph& g, const PartialMap& f, EndoKind y) {
  return Verdict::fails(f, stuck_vertex(g, f, y), forced_component_explanation(g, f, y));
}

}  // namespace

Verdict decide_xy_finite(const Graph& g, MorphismKind x, EndoKind y) {
  x_index(x);
  std::optional<Verdict> out;
  for_each_local_morphism(g, x, g.order(), [&](const PartialMap& f) {
    if (extend_finite(g, f, y)) return true;
    out = failure(g, f, y);
    return false;
  });
  return out ? *out : Verdict::holds();
}

std::size_t MembershipVector::index(MorphismKind x, EndoKind y) { return x_index(x) * 6 + y_index(y); }

std::string MembershipVector::bits() const {
  std::string s;
  for (const auto& v : entries_)
    s += v.outcome == Outcome::Holds ? '1' : v.outcome == Outcome::Fails ? '0' : '?';
  return s;
}

std::vector<std::string> MembershipVector::monotonicity_violations() const {
  std::vector<std::string> out;
  auto label = [](MorphismKind x, EndoKind y) { return std::string{symbol(x), symbol(y)}; };
  for (MorphismKind x1 : kLocalKinds)
    for (EndoKind y1 : kAllEndoKinds)
      for (MorphismKind x2 : kLocalKinds)
        for (EndoKind y2 : kAllEndoKinds) {
          // stronger local maps are fewer, stronger endomorphisms are rarer
          const bool implied = at_least(x2, x1) && endo_implies(y1, y2);
          if (!implied || (x1 == x2 && y1 == y2)) continue;
          if (holds(x1, y1) && at(x2, y2).outcome == Outcome::Fails)
            out.push_back(label(x1, y1) + " holds but " + label(x2, y2) + " fails");
        }
  return out;
}

MembershipVector classify_finite(const Graph& g) {
  MembershipVector mv;
  for (EndoKind y : kAllEndoKinds) {
    std::array<bool, 3> failed{false, false, false};
    for_each_local_morphism(g, MorphismKind::Homomorphism, g.order(), [&](const PartialMap& f) {
      const MorphismKind k = classify_map(g, f);
      bool needed = false;
      for (MorphismKind x : kLocalKinds) needed |= at_least(k, x) && !failed[x_index(x)];
      if (!needed || extend_finite(g, f, y)) return true;
      const Verdict v = failure(g, f, y);
      for (MorphismKind x : kLocalKinds) {
        if (at_least(k, x) && !failed[x_index(x)]) {
          failed[x_index(x)] = true;
          mv.at(x, y) = v;
        }
      }
      return !(failed[0] && failed[1] && failed[2]);
    });
  }
  return mv;
}

std::string forced_component_explanation(const Graph& g, const PartialMap& f, EndoKind y) {
  if (!surjective_kind(y) || f.empty()) return {};
  const auto comps = connected_components(g);
  std::vector<std::size_t> comp_of(g.order());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) comp_of[v] = i;

  // a connected component lands inside the component of any of its images
  std::set<std::size_t> forced, touched;
  for (auto [s, t] : f.pairs()) {
    touched.insert(comp_of[s]);
    forced.insert(comp_of[t]);
  }
  std::map<std::size_t, std::set<std::size_t>> targets;
  for (auto [s, t] : f.pairs()) targets[comp_of[s]].insert(comp_of[t]);
  for (const auto& [c, ts] : targets)
    if (ts.size() > 1) return {};  // contradictory already; not a confinement story

  const std::size_t free_components = comps.size() - touched.size();
  const std::size_t uncovered = comps.size() - forced.size();
  if (free_components >= uncovered) return {};

  std::ostringstream os;
  if (forced.size() == 1)
    os << "image confined to one component";
  else
    os << "image confined to " << forced.size() << " components";
  os << " (";
  bool first = true;
  for (std::size_t c : forced) {
    os << (first ? "" : ", ") << "component of " << comps[c].front();
    first = false;
  }
  os << "); " << uncovered << " other component" << (uncovered == 1 ? "" : "s") << " to cover but only "
     << free_components << " free component" << (free_components == 1 ? "" : "s")
     << " to map onto them, so no surjective extension exists";
  return os.str();
}

}  // namespace homext
