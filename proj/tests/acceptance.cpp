// Acceptance checks 1-12. Prints one PASS/FAIL line per criterion and exits
// non-zero when any fails. Optional argv[1]: path of the homext CLI, used for
// the repeated-invocation atlas check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "homext/age.hpp"
#include "homext/atlas.hpp"
#include "homext/canonical.hpp"
#include "homext/claims.hpp"
#include "homext/corpus.hpp"
#include "homext/engine.hpp"
#include "homext/generators.hpp"
#include "homext/graph_io.hpp"
#include "homext/properties.hpp"
#include "oracles.hpp"

using namespace homext;

namespace {

struct Check {
  bool pass = false;
  std::string detail;
};

std::string g6(const Graph& g) { return to_graph6(g); }

const std::vector<Graph>& corpus6() {
  static const std::vector<Graph> graphs = enumerate_graphs_up_to(6);
  return graphs;
}

// Exact verdicts for every pair on the corpus, straight from decide_xy_finite.
const std::vector<std::vector<Verdict>>& corpus_verdicts() {
  static const std::vector<std::vector<Verdict>> table = [] {
    const auto& graphs = corpus6();
    std::vector<std::vector<Verdict>> out(graphs.size(), std::vector<Verdict>(18));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(graphs.size()); ++i)
      for (MorphismKind x : kLocalKinds)
        for (EndoKind y : kAllEndoKinds)
          out[static_cast<std::size_t>(i)][MembershipVector::index(x, y)] =
              decide_xy_finite(graphs[static_cast<std::size_t>(i)], x, y);
    return out;
  }();
  return table;
}

Outcome verdict(std::size_t graph, MorphismKind x, EndoKind y) {
  return corpus_verdicts()[graph][MembershipVector::index(x, y)].outcome;
}

Check criterion_1() {
  // Corpus size from the independent labelled enumeration for n <= 5, plus 156 at n = 6.
  std::size_t expected = 156;
  for (std::size_t n = 1; n <= 5; ++n) expected += oracle::count_classes(n);
  if (corpus6().size() != expected)
    return {false, "corpus has " + std::to_string(corpus6().size()) + " classes, oracle says " + std::to_string(expected)};
  std::size_t exceptions = 0;
  std::string first;
  for (std::size_t i = 0; i < corpus6().size(); ++i)
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : {EndoKind::B, EndoKind::E, EndoKind::I, EndoKind::M})
        if (verdict(i, x, y) != verdict(i, x, EndoKind::A)) {
          if (exceptions++ == 0) first = g6(corpus6()[i]) + " " + symbol(x) + symbol(y);
        }
  return {exceptions == 0, std::to_string(corpus6().size()) + " graphs on <= 6 vertices, " + std::to_string(exceptions) +
                               " exceptions" + (first.empty() ? "" : " (first " + first + ")")};
}

Check criterion_2() {
  std::size_t exceptions = 0;
  for (std::size_t i = 0; i < corpus6().size(); ++i) {
    MembershipVector mv;
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) mv.at(x, y) = corpus_verdicts()[i][MembershipVector::index(x, y)];
    exceptions += mv.monotonicity_violations().size();
  }
  return {exceptions == 0, std::to_string(exceptions) + " monotonicity exceptions over " +
                               std::to_string(corpus6().size()) + " graphs"};
}

Check criterion_3() {
  std::size_t ha = 0, ma = 0, bad = 0;
  for (std::size_t i = 0; i < corpus6().size(); ++i) {
    const Graph& g = corpus6()[i];
    if (verdict(i, MorphismKind::Homomorphism, EndoKind::A) == Outcome::Holds) {
      ++ha;
      if (g.edge_count() != g.order() * (g.order() - 1) / 2) ++bad;
    }
    if (verdict(i, MorphismKind::Monomorphism, EndoKind::A) == Outcome::Holds) {
      ++ma;
      if (g.edge_count() != 0 && g.edge_count() != g.order() * (g.order() - 1) / 2) ++bad;
    }
  }
  return {bad == 0, std::to_string(ha) + " HA members all complete, " + std::to_string(ma) +
                        " MA members complete or empty, " + std::to_string(bad) + " exceptions"};
}

Check criterion_4() {
  std::size_t members = 0, bad = 0;
  for (std::size_t i = 0; i < corpus6().size(); ++i) {
    const Graph& g = corpus6()[i];
    if (verdict(i, MorphismKind::Isomorphism, EndoKind::H) != Outcome::Holds) continue;
    const auto comps = connected_components(g);
    if (comps.size() < 2) continue;
    ++members;
    bool ok = true;
    for (const auto& c : comps) {
      ok &= c.size() == comps.front().size();
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) ok &= g.adjacent(c[a], c[b]);
    }
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(members) + " disconnected IH members, " + std::to_string(bad) +
                        " not a union of equal cliques"};
}

Check criterion_5() {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> order(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::size_t comparisons = 0, mismatches = 0;
  for (int round = 0; round < 200; ++round) {
    const Graph g = oracle::random_graph(order(rng), density(rng), rng);
    for (std::size_t k = 1; k <= 4; ++k) {
      ++comparisons;
      if (check_property(Truncation::of(g), Property::CoCone, k).outcome !=
          check_property(Truncation::of(complement(g)), Property::Cone, k).outcome)
        ++mismatches;
    }
  }
  std::size_t flags = 0, flag_mismatches = 0;
  for (const Graph& g : enumerate_graphs_up_to(5)) {
    const auto age = compute_age(g, g.order());
    const auto co = compute_age(complement(g), g.order());
    for (const auto& e : age) {
      const std::string key = canonical_key(complement(e.graph));
      const auto it = std::find_if(co.begin(), co.end(), [&](const AgeEntry& c) { return c.canon == key; });
      ++flags;
      if (it == co.end() || it->kk != e.hh || it->okk != e.ohh) ++flag_mismatches;
    }
  }
  return {mismatches == 0 && flag_mismatches == 0,
          std::to_string(comparisons) + " cone/co-cone comparisons with " + std::to_string(mismatches) +
              " mismatches; " + std::to_string(flags) + " age entries with " + std::to_string(flag_mismatches) +
              " flag mismatches"};
}

Check criterion_6() {
  const OracleGraph rs = rs_graph(3);
  const Graph g = oracle_truncate(rs, 60);
  std::vector<VertexSet> triples;
  for (Vertex a = 0; a < 60; ++a)
    for (Vertex b = a + 1; b < 60; ++b)
      for (Vertex c = b + 1; c < 60; ++c)
        if (!g.adjacent(a, b) && !g.adjacent(a, c) && !g.adjacent(b, c)) triples.push_back({a, b, c});
  const bool a_ok = triples.size() == 1 && triples[0] == VertexSet{0, 1, 2};

  BoundedParams p;
  p.max_domain = 3;
  p.horizon = 60;
  const Truncation t = Truncation::of(rs, 60);
  const Verdict mb = decide_xy_bounded(t, MorphismKind::Monomorphism, EndoKind::B, p);
  bool b_ok = mb.outcome == Outcome::Fails && mb.witness && mb.witness->domain() == VertexSet{0, 1, 2};
  if (b_ok) {
    const VertexSet img = mb.witness->image();
    b_ok = img.size() == 3 && is_clique(g, img) &&
           at_least(classify_map(g, *mb.witness), MorphismKind::Monomorphism) &&
           refute_extension(t, *mb.witness, EndoKind::B, p.depth, p.node_budget).refuted;
  }

  p.depth = 10;
  const Verdict mm = decide_xy_bounded(t, MorphismKind::Monomorphism, EndoKind::M, p);
  std::size_t traces = 0, stuck = 0;
  for_each_local_morphism(g, p.window, MorphismKind::Monomorphism, p.max_domain, [&](const PartialMap& f) {
    ++traces;
    if (back_and_forth(t, f, schedule_for(EndoKind::M), p.depth).status == TraceStatus::Stuck) ++stuck;
    return true;
  });
  const bool c_ok = mm.outcome == Outcome::UnknownAtBound && stuck == 0;

  std::ostringstream d;
  d << "(a) " << triples.size() << " independent triple(s)" << (a_ok ? " {0,1,2}" : "") << "; (b) "
    << report_line(MorphismKind::Monomorphism, EndoKind::B, mb) << " [" << mb.note << "]; (c) "
    << report_line(MorphismKind::Monomorphism, EndoKind::M, mm) << ", " << traces << " traces, " << stuck
    << " stuck";
  return {a_ok && b_ok && c_ok, d.str()};
}

Check criterion_7() {
  const Graph g = composite(2, 20);
  const PartialMap f = PartialMap::parse("0->0,20->1");
  const bool mono = classify_map(g, f) == MorphismKind::Monomorphism;
  const bool no_extension = !extend_finite(g, f, EndoKind::E).has_value();
  const std::string why = forced_component_explanation(g, f, EndoKind::E);
  const Verdict v = decide_xy_finite(g, MorphismKind::Monomorphism, EndoKind::E);
  const std::string reported = v.witness ? forced_component_explanation(g, *v.witness, EndoKind::E) : "";
  const bool ok = mono && no_extension && v.outcome == Outcome::Fails &&
                  why.find("image confined to one component") != std::string::npos &&
                  reported.find("image confined to one component") != std::string::npos;
  return {ok, report_line(MorphismKind::Monomorphism, EndoKind::E, v) + "; " + reported};
}

Check criterion_8() {
  std::ostringstream d;
  bool ok = true;
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto r = check_alpha_sigma_bound(oracle_truncate(rs_graph(n), 60));
    d << (n == 2 ? "" : "; ") << "RS(" << n << ") alpha=" << r.alpha << " sigma=" << r.sigma << " bound=" << r.bound;
    ok &= r.holds;
    if (n == 3) ok &= r.alpha == 3;
  }
  return {ok, d.str()};
}

Check criterion_9() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = check_extension_axioms(oracle_truncate(rado_bit(), 512), 8);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu disjoint pairs within {0..7}, %zu failures, %.2f s", r.pairs_checked,
                r.failures.size(), secs);
  return {r.failures.empty() && r.pairs_checked == 6561 && secs < 30.0, buf};
}

Check criterion_10() {
  const H3Prime h = h3_prime(80, 0);
  const Graph& g = h.graph;
  const bool single = common_neighbors(g, h.u, h.v).size() == 1 && !g.adjacent(h.u, h.v);
  bool triangle_free = true;
  for (auto [a, b] : g.edges()) triangle_free &= common_neighbors(g, a, b).empty();
  bool wide_pair = false;
  for (Vertex a = 0; a < g.order() && !wide_pair; ++a)
    for (Vertex b = a + 1; b < g.order() && !wide_pair; ++b)
      wide_pair = !g.adjacent(a, b) && common_neighbors(g, a, b).size() >= 2;

  std::istringstream claims("separation IH IM h3prime 80\n");
  BoundedParams p;
  const auto results = verify_claims(parse_claims(claims), p);
  const bool verified = results.size() == 1 && results[0].passed;
  std::string witness;
  for (const auto& line : results.front().details)
    if (line.rfind("isomorphism", 0) == 0) witness = line;
  return {single && triangle_free && wide_pair && verified,
          "u=" + std::to_string(h.u) + " v=" + std::to_string(h.v) + " w=" + std::to_string(h.w) +
              (triangle_free ? ", triangle-free" : ", has a triangle") + "; " + witness};
}

Check criterion_11() {
  const std::size_t order = 257;
  const Graph g = rado_plus_dominating(order);
  const auto w = static_cast<Vertex>(order - 1);
  std::size_t targets = 0, certified = 0;
  for (Vertex v = 0; v < w; ++v) {
    Bitset non = g.row(v);
    non.flip();
    non.reset(v);
    if (non.none()) continue;
    ++targets;
    const PartialMap f({{w, v}});
    const auto partner = static_cast<Vertex>(non.find_first());
    // a preimage of the partner must avoid w, and nothing does
    if (one_step_preimage(g, f, partner, MorphismKind::Homomorphism).empty() &&
        classify_map(g, f) == MorphismKind::Isomorphism)
      ++certified;
  }
  VertexSet probe;
  for (Vertex v = 0; v < 8; ++v) probe.push_back(v);
  probe.push_back(w);
  const auto cone = check_property(Truncation::of(g), Property::Cone, 4, probe);
  std::ostringstream d;
  d << certified << "/" << targets << " non-dominating targets certified; cone k=4 over {0..7,w}: "
    << name(cone.outcome) << " (" << cone.instances << " sets)";
  return {targets > 0 && certified == targets && cone.outcome == Outcome::Holds, d.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check criterion_12(const char* cli) {
  std::size_t round_trip_failures = 0;
  for (const Graph& g : corpus6()) {
    if (from_graph6(to_graph6(g)) != g) ++round_trip_failures;
    if (from_text(to_text(g)) != g) ++round_trip_failures;
  }
  std::ostringstream all;
  for (const Graph& g : corpus6()) write_text(all, g);
  std::istringstream back(all.str());
  if (read_graphs(back) != corpus6()) ++round_trip_failures;

  AtlasCorpus c{AtlasCorpus::Kind::UpToOrder, 6, {}, {}};
  std::ostringstream a, b, s;
  write_atlas(a, c, {}, true);
  write_atlas(b, c, {}, true);
  write_atlas(s, c, {}, true, Execution::Serial);
  bool same = a.str() == b.str() && a.str() == s.str();
  std::string runs = "in-process";
  if (cli) {
    const auto dir = std::filesystem::temp_directory_path() / ("homext-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto one = dir / "one.jsonl", two = dir / "two.jsonl";
    const std::string base = std::string("\"") + cli + "\" atlas --max-order 6 -o ";
    const int r1 = std::system((base + "\"" + one.string() + "\"").c_str());
    const int r2 = std::system((base + "\"" + two.string() + "\"").c_str());
    same &= r1 == 0 && r2 == 0 && slurp(one) == slurp(two) && slurp(one) == a.str();
    std::filesystem::remove_all(dir);
    runs = "CLI and in-process";
  }
  return {round_trip_failures == 0 && same,
          std::to_string(corpus6().size()) + " graphs round-trip with " + std::to_string(round_trip_failures) +
              " failures; atlas (" + runs + ") " + (same ? "byte-identical" : "DIFFERS")};
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::function<Check()>> checks = {
      criterion_1, criterion_2, criterion_3, criterion_4,  criterion_5,  criterion_6,
      criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, [cli] { return criterion_12(cli); },
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check r;
    try {
      r = checks[i]();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, " [%.1fs]", secs);
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << r.detail << timing << std::endl;
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
