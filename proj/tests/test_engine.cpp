#include <doctest.h>

#include <random>

#include "homext/canonical.hpp"
#include "homext/engine.hpp"
#include "homext/generators.hpp"
#include "oracles.hpp"

using namespace homext;

namespace {

oracle::Endo to_oracle(EndoKind y) {
  switch (y) {
    case EndoKind::H: return oracle::Endo::H;
    case EndoKind::M: return oracle::Endo::M;
    case EndoKind::I: return oracle::Endo::I;
    case EndoKind::E: return oracle::Endo::E;
    case EndoKind::B: return oracle::Endo::B;
    case EndoKind::A: return oracle::Endo::A;
  }
  return oracle::Endo::H;
}

std::vector<int> fixed_entries(const Graph& g, const PartialMap& f) {
  std::vector<int> fixed(g.order(), -1);
  for (auto [s, t] : f.pairs()) fixed[s] = static_cast<int>(t);
  return fixed;
}

bool is_endo_of_kind(const Graph& g, const std::vector<Vertex>& e, EndoKind y) {
  PartialMap whole;
  for (Vertex v = 0; v < g.order(); ++v) whole = whole.with(v, e[v]);
  const MorphismKind k = classify_map(g, whole);
  std::vector<bool> hit(g.order(), false);
  for (Vertex v : e) hit[v] = true;
  const bool onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  switch (y) {
    case EndoKind::H: return at_least(k, MorphismKind::Homomorphism);
    case EndoKind::M: return at_least(k, MorphismKind::Monomorphism);
    case EndoKind::I: return at_least(k, MorphismKind::Isomorphism);
    case EndoKind::E: return at_least(k, MorphismKind::Homomorphism) && onto;
    case EndoKind::B: return at_least(k, MorphismKind::Monomorphism) && onto;
    case EndoKind::A: return at_least(k, MorphismKind::Isomorphism) && onto;
  }
  return false;
}

// XY by brute force: every X-map of every size extends to a Y-endomorphism.
bool brute_xy(const Graph& g, MorphismKind x, EndoKind y) {
  for (const auto& f : enumerate_local_morphisms(g, x, g.order()))
    if (!oracle::exists_endo(g, fixed_entries(g, f), to_oracle(y))) return false;
  return true;
}

}  // namespace

TEST_CASE("one-step extension examples") {
  CHECK(one_step_extension(complete_graph(3), PartialMap::parse("0->0,1->1"), 2, MorphismKind::Homomorphism) ==
        VertexSet{2});
  CHECK(one_step_extension(path_graph(3), PartialMap::parse("0->0,2->1"), 1, MorphismKind::Homomorphism).empty());
  CHECK(one_step_extension(independent_graph(3), PartialMap::parse("0->0"), 1, MorphismKind::Monomorphism) ==
        VertexSet{1, 2});
  CHECK_THROWS_AS(one_step_extension(path_graph(3), PartialMap::parse("0->0"), 0, MorphismKind::Homomorphism),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      one_step_extension(complete_graph(2), PartialMap::parse("0->0,1->0"), 1, MorphismKind::Homomorphism),
      std::invalid_argument);
}

TEST_CASE("one-step preimage examples") {
  CHECK(one_step_preimage(complete_graph(3), PartialMap::parse("0->0,1->1"), 2, MorphismKind::Homomorphism) ==
        VertexSet{2});
  CHECK(one_step_preimage(composite(2, 3), PartialMap::parse("0->0"), 3, MorphismKind::Homomorphism) ==
        VertexSet{3, 4, 5});
  // A co-cone over the image takes any co-cone over the domain.
  const Graph g = path_graph(5);
  CHECK(one_step_preimage(g, PartialMap::parse("0->0"), 4, MorphismKind::Homomorphism) == VertexSet{2, 3, 4});
}

TEST_CASE("one-step candidates agree with brute force") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Graph g = oracle::random_graph(6, 0.5, rng);
    for (MorphismKind kind : kLocalKinds) {
      const auto maps = enumerate_local_morphisms(g, kind, 2);
      for (std::size_t i = 0; i < maps.size(); i += 7) {
        const PartialMap& f = maps[i];
        for (Vertex c = 0; c < g.order(); ++c) {
          if (!f.defines(c)) {
            VertexSet expected;
            for (Vertex d = 0; d < g.order(); ++d)
              if (at_least(classify_map(g, f.with(c, d)), kind)) expected.push_back(d);
            CHECK(one_step_extension(g, f, c, kind) == expected);
          }
          if (!f.covers(c)) {
            VertexSet expected;
            for (Vertex a = 0; a < g.order(); ++a)
              if (!f.defines(a) && at_least(classify_map(g, f.with(a, c)), kind)) expected.push_back(a);
            CHECK(one_step_preimage(g, f, c, kind) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("finite extension examples") {
  const Graph k4 = complete_graph(4);
  for (EndoKind y : kAllEndoKinds) CHECK(extend_finite(k4, PartialMap::parse("0->2,3->1"), y).has_value());
  CHECK_FALSE(extend_finite(path_graph(3), PartialMap::parse("0->0,2->1"), EndoKind::H).has_value());
  const auto swap = extend_finite(composite(2, 2), PartialMap::parse("0->2,1->3"), EndoKind::A);
  REQUIRE(swap.has_value());
  CHECK(is_endo_of_kind(composite(2, 2), *swap, EndoKind::A));
}

TEST_CASE("finite extension agrees with exhaustive map enumeration") {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n)) graphs.push_back(g);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_graph(5, 0.5, rng));
  for (const Graph& g : graphs)
    for (const auto& f : enumerate_local_morphisms(g, MorphismKind::Homomorphism, 2))
      for (EndoKind y : kAllEndoKinds) {
        const auto e = extend_finite(g, f, y);
        CHECK(e.has_value() == oracle::exists_endo(g, fixed_entries(g, f), to_oracle(y)));
        if (e) {
          CHECK(is_endo_of_kind(g, *e, y));
          for (auto [s, t] : f.pairs()) CHECK((*e)[s] == t);
        }
      }
}

TEST_CASE("decide_xy_finite examples") {
  const Graph k4 = complete_graph(4);
  for (MorphismKind x : kLocalKinds)
    for (EndoKind y : kAllEndoKinds) CHECK(decide_xy_finite(k4, x, y).outcome == Outcome::Holds);

  const Verdict p3 = decide_xy_finite(path_graph(3), MorphismKind::Monomorphism, EndoKind::H);
  CHECK(p3.outcome == Outcome::Fails);
  CHECK(report_line(MorphismKind::Monomorphism, EndoKind::H, p3) == "FAIL X=M Y=H map=0->0,2->1 stuck=1");

  const Graph i4 = independent_graph(4);
  CHECK(decide_xy_finite(i4, MorphismKind::Monomorphism, EndoKind::A).outcome == Outcome::Holds);
  CHECK(decide_xy_finite(i4, MorphismKind::Homomorphism, EndoKind::A).outcome == Outcome::Fails);

  const Graph tri2 = composite(2, 3);
  CHECK(decide_xy_finite(tri2, MorphismKind::Isomorphism, EndoKind::H).outcome == Outcome::Holds);
  CHECK(decide_xy_finite(tri2, MorphismKind::Monomorphism, EndoKind::A).outcome == Outcome::Fails);
  CHECK(decide_xy_finite(cycle_graph(5), MorphismKind::Isomorphism, EndoKind::A).outcome == Outcome::Holds);

  const Verdict p4 = decide_xy_finite(path_graph(4), MorphismKind::Monomorphism, EndoKind::H);
  CHECK(p4.outcome == Outcome::Fails);
  CHECK(p4.witness.has_value());
}

TEST_CASE("decide_xy_finite matches the brute-force definition") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Graph& g : enumerate_graphs(n))
      for (MorphismKind x : kLocalKinds)
        for (EndoKind y : kAllEndoKinds) {
          const Verdict v = decide_xy_finite(g, x, y);
          CHECK(v.outcome != Outcome::UnknownAtBound);
          CHECK((v.outcome == Outcome::Holds) == brute_xy(g, x, y));
        }
}

TEST_CASE("failure witnesses re-validate and classify_finite agrees") {
  std::vector<Graph> graphs = enumerate_graphs_up_to(5);
  const auto six = enumerate_graphs(6);
  for (std::size_t i = 0; i < six.size(); i += 3) graphs.push_back(six[i]);
  for (const Graph& g : graphs) {
    const MembershipVector mv = classify_finite(g);
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) {
        const Verdict v = decide_xy_finite(g, x, y);
        const Verdict& w = mv.at(x, y);
        CHECK(v.outcome == w.outcome);
        CHECK(v.witness == w.witness);
        if (v.outcome == Outcome::Fails) {
          REQUIRE(v.witness.has_value());
          CHECK(at_least(classify_map(g, *v.witness), x));
          CHECK_FALSE(extend_finite(g, *v.witness, y).has_value());
        }
      }
    CHECK(mv.monotonicity_violations().empty());
  }
}

TEST_CASE("stuck vertices") {
  CHECK(stuck_vertex(path_graph(3), PartialMap::parse("0->0,2->1"), EndoKind::H) == Vertex{1});
  CHECK_FALSE(stuck_vertex(complete_graph(3), PartialMap::parse("0->1"), EndoKind::A).has_value());
}

TEST_CASE("image confinement explanation on equal clique unions") {
  const Graph g = composite(2, 3);
  const PartialMap f = PartialMap::parse("0->0,3->1");
  CHECK(at_least(classify_map(g, f), MorphismKind::Monomorphism));
  CHECK_FALSE(extend_finite(g, f, EndoKind::E).has_value());
  CHECK(forced_component_explanation(g, f, EndoKind::E).find("image confined to one component") !=
        std::string::npos);
  CHECK(forced_component_explanation(g, PartialMap::parse("0->3"), EndoKind::E).empty());
}

TEST_CASE("bounded refutation on finite graphs is exact") {
  for (const Graph& g : enumerate_graphs_up_to(5)) {
    const Truncation t = Truncation::of(g);
    for (const auto& f : enumerate_local_morphisms(g, MorphismKind::Homomorphism, 2))
      for (EndoKind y : kAllEndoKinds) {
        const auto r = refute_extension(t, f, y, 2 * g.order() + 2, 100000);
        REQUIRE_FALSE(r.budget_exhausted);
        CHECK(r.refuted == !extend_finite(g, f, y).has_value());
      }
  }
}

TEST_CASE("bounded verdicts never claim Holds and their failures are real") {
  for (const Graph& g : enumerate_graphs_up_to(5)) {
    const Truncation t = Truncation::of(g);
    BoundedParams p;
    p.max_domain = 3;
    p.window = g.order();
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) {
        const Verdict v = decide_xy_bounded(t, x, y, p);
        CHECK(v.outcome != Outcome::Holds);
        if (v.outcome == Outcome::Fails) {
          REQUIRE(v.witness.has_value());
          CHECK(at_least(classify_map(g, *v.witness), x));
          CHECK_FALSE(extend_finite(g, *v.witness, y).has_value());
          CHECK(decide_xy_finite(g, x, y).outcome == Outcome::Fails);
        }
      }
  }
}

TEST_CASE("bounded verdicts on oracle graphs") {
  BoundedParams p;
  p.max_domain = 3;
  p.horizon = 60;
  const Verdict rs = decide_xy_bounded(rs_graph(3), MorphismKind::Monomorphism, EndoKind::B, p);
  REQUIRE(rs.outcome == Outcome::Fails);
  const VertexSet image = rs.witness->image();
  CHECK(rs.witness->domain() == VertexSet{0, 1, 2});
  CHECK(is_clique(oracle_truncate(rs_graph(3), 60), image));

  const Cardinal w = Cardinal::countable();
  p.horizon = 36;
  CHECK(decide_xy_bounded(composite_oracle(w, w), MorphismKind::Monomorphism, EndoKind::B, p).outcome ==
        Outcome::UnknownAtBound);
  p.horizon = 40;
  const Verdict two = decide_xy_bounded(composite_oracle(Cardinal::finite(2), w), MorphismKind::Monomorphism,
                                        EndoKind::E, p);
  CHECK(two.outcome == Outcome::Fails);
}

TEST_CASE("uncertified oracles never yield failures from the outside") {
  OracleGraph bare("bare-rs3", [](Vertex u, Vertex v) { return rs_graph(3).adjacent(u, v); });
  const Truncation t = Truncation::of(bare, 30);
  CHECK_FALSE(t.certified());
  const auto r = refute_extension(t, PartialMap::parse("0->3,1->4,2->5"), EndoKind::E, 8, 100000);
  CHECK_FALSE(r.refuted);
}

TEST_CASE("back-and-forth traces") {
  const Cardinal w = Cardinal::countable();
  const auto matching =
      back_and_forth(composite_oracle(w, Cardinal::finite(2)), PartialMap::parse("0->0,1->1"), EndoKind::E, 6, 40);
  CHECK(matching.status != TraceStatus::Stuck);
  CHECK(matching.steps.size() == 6);

  const auto rs = rs_graph(3);
  const auto identity = back_and_forth(rs, PartialMap::parse("0->0,1->1,2->2"), EndoKind::E, 8, 60);
  CHECK(identity.status != TraceStatus::Stuck);

  const auto stuck = back_and_forth(rs, PartialMap::parse("0->3,1->4,2->5"), EndoKind::E, 8, 60);
  REQUIRE(stuck.status == TraceStatus::Stuck);
  CHECK(stuck.certified);
  CHECK(stuck.stuck_direction == StepDirection::Back);
  CHECK(stuck.steps.size() % 2 == 0);
  CHECK(*stuck.stuck_vertex < 3);

  // Every trace extends the starting map with maps of the scheduled kind.
  const Truncation t = Truncation::of(rs, 60);
  for (EndoKind y : kAllEndoKinds) {
    const Schedule s = schedule_for(y);
    const auto trace = back_and_forth(t, PartialMap::parse("0->1,3->4"), s, 10);
    PartialMap f = PartialMap::parse("0->1,3->4");
    for (const auto& step : trace.steps) {
      f = f.with(step.source, step.target);
      CHECK(at_least(classify_map(t.graph(), f), step.direction == StepDirection::Forth ? s.forth : *s.back));
    }
    CHECK(f == trace.final_map);
  }
}
