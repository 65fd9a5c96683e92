#include "homext/age.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "homext/canonical.hpp"

namespace homext {

char symbol(Tri t) {
  switch (t) {
    case Tri::Yes: return 'Y';
    case Tri::No: return 'N';
    case Tri::Unknown: return 'U';
  }
  return '?';
}

namespace {

template <class Visit>
void for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  VertexSet s;
  auto rec = [&](auto&& self, Vertex from) -> void {
    if (s.size() == size) {
      visit(s);
      return;
    }
    for (Vertex v = from; v + (size - s.size()) <= n; ++v) {
      s.push_back(v);
      self(self, v + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
}

// Does some vertex outside s meet the adjacency demand?
Tri witness_exists(const Truncation& t, const VertexSet& s, bool cone) {
  const Graph& g = t.graph();
  Bitset members(g.order());
  for (Vertex v : s) members.set(v);
  Bitset inside = Bitset::full(g.order());
  for (Vertex v : s) {
    if (cone)
      inside &= g.row(v);
    else
      inside.and_not(g.row(v));
  }
  inside.and_not(members);
  if (inside.any()) return Tri::Yes;
  if (!t.certified()) return Tri::Unknown;
  const Bitset none(g.order());
  const bool outside = cone ? t.outside_may_satisfy(members, none) : t.outside_may_satisfy(none, members);
  return outside ? Tri::Yes : Tri::No;
}

// Some copy has the witness / some copy lacks it.
std::pair<Tri, Tri> aggregate(const std::vector<Tri>& per_copy, bool complete) {
  bool yes = false, no = false, unknown = false;
  for (Tri t : per_copy) {
    yes |= t == Tri::Yes;
    no |= t == Tri::No;
    unknown |= t == Tri::Unknown;
  }
  const bool open = unknown || !complete;
  return {yes ? Tri::Yes : open ? Tri::Unknown : Tri::No, no ? Tri::Yes : open ? Tri::Unknown : Tri::No};
}

void compute_flags(const Truncation& t, AgeEntry& e) {
  std::vector<Tri> cones, cocones;
  for (const auto& s : e.copies) {
    cones.push_back(witness_exists(t, s, true));
    cocones.push_back(witness_exists(t, s, false));
  }
  const bool complete = t.finite() && !e.capped;
  std::tie(e.kk, e.okk) = aggregate(cones, complete);
  std::tie(e.hh, e.ohh) = aggregate(cocones, complete);
}

bool surjective_morphism(const Graph& a, const Graph& b, bool injective) {
  const std::size_t na = a.order(), nb = b.order();
  if (na < nb || (injective && na != nb)) return false;
  std::vector<int> image(na, -1);
  std::vector<std::size_t> uses(nb, 0);
  std::size_t covered = 0;
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == na) return covered == nb;
    if (nb - covered > na - v) return false;
    for (Vertex t = 0; t < nb; ++t) {
      if (injective && uses[t]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        if (a.adjacent(u, v) && !b.adjacent(static_cast<Vertex>(image[u]), t)) ok = false;
      if (!ok) continue;
      image[v] = static_cast<int>(t);
      if (uses[t]++ == 0) ++covered;
      if (self(self, v + 1)) return true;
      if (--uses[t] == 0) --covered;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

std::vector<AgeEntry> compute_age(const Truncation& t, std::size_t k, std::size_t cap, Execution exec) {
  if (k > kCanonicalCap) throw std::invalid_argument("age size exceeds the canonical form cap");
  const Graph& g = t.graph();
  std::map<std::pair<std::size_t, std::string>, AgeEntry> by_key;
  for (std::size_t size = 1; size <= k && size <= g.order(); ++size) {
    for_each_subset(g.order(), size, [&](const VertexSet& s) {
      const Graph sub = induced_subgraph(g, s);
      const std::string key = canonical_key(sub);
      auto [it, fresh] = by_key.try_emplace({size, key});
      AgeEntry& e = it->second;
      if (fresh) {
        e.graph = canonical_form(sub).graph;
        e.canon = key;
      }
      ++e.embeddings_seen;
      if (e.copies.size() < cap)
        e.copies.push_back(s);
      else
        e.capped = true;
    });
  }
  std::vector<AgeEntry> age;
  age.reserve(by_key.size());
  for (auto& [key, e] : by_key) age.push_back(std::move(e));

  const auto count = static_cast<long>(age.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (long i = 0; i < count; ++i) compute_flags(t, age[static_cast<std::size_t>(i)]);
  return age;
}

std::vector<AgeEntry> compute_age(const Graph& g, std::size_t k, std::size_t cap, Execution exec) {
  return compute_age(Truncation::of(g), k, cap, exec);
}

bool order_preceq(const Graph& a, const Graph& b) { return surjective_morphism(a, b, false); }
bool order_sqsubseteq(const Graph& a, const Graph& b) { return surjective_morphism(a, b, true); }

AgeOrder compute_age_order(const std::vector<AgeEntry>& age) {
  const std::size_t n = age.size();
  AgeOrder o{std::vector(n, std::vector<bool>(n)), std::vector(n, std::vector<bool>(n))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      o.preceq[i][j] = order_preceq(age[i].graph, age[j].graph);
      o.sqsubseteq[i][j] = order_sqsubseteq(age[i].graph, age[j].graph);
    }
  return o;
}

std::vector<std::string> order_violations(const std::vector<AgeEntry>& age, const AgeOrder& order) {
  std::vector<std::string> out;
  const std::size_t n = age.size();
  auto check = [&](const std::vector<std::vector<bool>>& rel, const char* sym) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][i]) out.push_back(std::string("not reflexive: ") + age[i].canon + " " + sym);
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i][j]) continue;
        if (age[i].graph.order() < age[j].graph.order())
          out.push_back(std::string("size grows: ") + age[i].canon + " " + sym + " " + age[j].canon);
        if (i != j && rel[j][i])
          out.push_back(std::string("not antisymmetric: ") + age[i].canon + " " + sym + " " + age[j].canon);
        for (std::size_t l = 0; l < n; ++l)
          if (rel[j][l] && !rel[i][l])
            out.push_back(std::string("not transitive: ") + age[i].canon + " " + sym + " " + age[j].canon + " " +
                          sym + " " + age[l].canon);
      }
    }
  };
  check(order.preceq, "<=");
  check(order.sqsubseteq, "<=mono");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (order.sqsubseteq[i][j] && !order.preceq[i][j])
        out.push_back("mono order not inside hom order: " + age[i].canon + " " + age[j].canon);
  return out;
}

std::vector<std::string> age_report(const std::vector<AgeEntry>& age) {
  std::vector<std::string> lines;
  for (const auto& e : age) {
    std::ostringstream os;
    os << "size=" << e.graph.order() << " canon=" << e.canon << " kk=" << symbol(e.kk) << " okk=" << symbol(e.okk)
       << " hh=" << symbol(e.hh) << " ohh=" << symbol(e.ohh);
    lines.push_back(os.str());
  }
  return lines;
}

Criterion criterion_from_name(const std::string& s) {
  if (s == "HH") return Criterion::HH;
  if (s == "HE") return Criterion::HE;
  if (s == "ME") return Criterion::ME;
  throw std::invalid_argument("unknown criterion: " + s);
}

std::string_view name(Criterion c) {
  switch (c) {
    case Criterion::HH: return "HH";
    case Criterion::HE: return "HE";
    case Criterion::ME: return "ME";
  }
  return "?";
}

namespace {

using Flag = Tri AgeEntry::*;

ConditionResult disjoint(const std::vector<AgeEntry>& age, Flag has, Flag lacks, std::string name) {
  ConditionResult r{std::move(name), Outcome::Holds, {}};
  for (const auto& e : age) {
    if (e.*has == Tri::Yes && e.*lacks == Tri::Yes) {
      r.outcome = Outcome::Fails;
      r.witness = e.canon;
      return r;
    }
    if (e.*has != Tri::No && e.*lacks != Tri::No) r.outcome = Outcome::UnknownAtBound;
  }
  return r;
}

// Whenever from_entry relates to to_entry and from has the flag, to must have it too.
ConditionResult closed(const std::vector<AgeEntry>& age, const std::vector<std::vector<bool>>& rel, Flag flag,
                       bool upward, std::string name) {
  ConditionResult r{std::move(name), Outcome::Holds, {}};
  for (std::size_t i = 0; i < age.size(); ++i)
    for (std::size_t j = 0; j < age.size(); ++j) {
      if (i == j || !rel[i][j]) continue;  // age[i] maps onto age[j]
      const AgeEntry& from = upward ? age[i] : age[j];
      const AgeEntry& to = upward ? age[j] : age[i];
      if (from.*flag == Tri::Yes && to.*flag == Tri::No) {
        r.outcome = Outcome::Fails;
        r.witness = from.canon + " " + to.canon;
        return r;
      }
      if (from.*flag != Tri::No && to.*flag != Tri::Yes) r.outcome = Outcome::UnknownAtBound;
    }
  return r;
}

}  // namespace

CriterionReport check_criterion(const std::vector<AgeEntry>& age, Criterion which) {
  const AgeOrder order = compute_age_order(age);
  CriterionReport rep;
  rep.which = which;
  rep.conditions.push_back(disjoint(age, &AgeEntry::kk, &AgeEntry::okk, "kk and okk disjoint"));
  rep.conditions.push_back(closed(age, order.preceq, &AgeEntry::kk, true, "kk upward-closed under hom order"));
  if (which != Criterion::HH) {
    const bool mono = which == Criterion::ME;
    rep.conditions.push_back(disjoint(age, &AgeEntry::hh, &AgeEntry::ohh, "hh and ohh disjoint"));
    rep.conditions.push_back(closed(age, mono ? order.sqsubseteq : order.preceq, &AgeEntry::hh, false,
                                    mono ? "hh downward-closed under mono order" : "hh downward-closed under hom order"));
  }
  rep.outcome = Outcome::Holds;
  for (const auto& c : rep.conditions) {
    if (c.outcome == Outcome::Fails) rep.outcome = Outcome::Fails;
    if (c.outcome == Outcome::UnknownAtBound && rep.outcome == Outcome::Holds) rep.outcome = Outcome::UnknownAtBound;
  }
  return rep;
}

CriterionReport check_criterion(const Truncation& t, Criterion which, std::size_t k) {
  return check_criterion(compute_age(t, k), which);
}

}  // namespace homext
