#include <doctest.h>

#include <set>

#include "homext/generators.hpp"
#include "homext/morphism.hpp"
#include "homext/oracle.hpp"
#include "oracles.hpp"

using namespace homext;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Outside representatives promise: every u in [N, N + span) shares its
// profile on {0..N-1} with some representative, and its twin key whenever the
// representative's key is carried by an inside vertex.
void check_outside_contract(const OracleGraph& o, std::size_t horizon, std::size_t span) {
  const auto reps = o.outside_representatives(horizon);
  REQUIRE(reps.has_value());
  auto profile = [&](Vertex u) {
    std::vector<bool> p;
    for (Vertex v = 0; v < horizon; ++v) p.push_back(o.adjacent(u, v));
    return p;
  };
  std::set<std::optional<std::size_t>> inside_keys;
  for (Vertex v = 0; v < horizon; ++v) inside_keys.insert(o.twin_key(v));
  for (Vertex r : *reps) CHECK(r >= horizon);
  for (Vertex u = static_cast<Vertex>(horizon); u < horizon + span; ++u) {
    bool matched = false;
    for (Vertex r : *reps) {
      if (profile(u) != profile(r)) continue;
      const auto key = o.twin_key(r);
      if (key && inside_keys.count(key) && o.twin_key(u) != key) continue;
      matched = true;
      break;
    }
    CHECK_MESSAGE(matched, o.name() << " vertex " << u);
  }
}

// Equal twin keys must mean equal neighbourhoods (apart from each other).
void check_twin_keys(const OracleGraph& o, std::size_t n) {
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const auto ka = o.twin_key(a);
      if (!ka || ka != o.twin_key(b)) continue;
      for (Vertex x = 0; x < n; ++x)
        if (x != a && x != b) CHECK(o.adjacent(a, x) == o.adjacent(b, x));
    }
}

}  // namespace

TEST_CASE("small named graphs") {
  CHECK(complete_graph(3).edge_count() == 3);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(independent_graph(4).edge_count() == 0);
}

TEST_CASE("composite graphs") {
  CHECK(composite(2, 3) == from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  const Graph matching = oracle_truncate(composite_oracle(Cardinal::countable(), Cardinal::finite(2)), 6);
  CHECK(matching == from_edges(6, {{0, 1}, {2, 3}, {4, 5}}));

  const auto both = composite_oracle(Cardinal::countable(), Cardinal::countable());
  const Graph nine = oracle_truncate(both, 9);
  for (const VertexSet& c : connected_components(nine)) CHECK(is_clique(nine, c));
  std::set<std::size_t> blocks;
  for (Vertex v = 0; v < 9; ++v) blocks.insert(composite_block(Cardinal::countable(), Cardinal::countable(), v));
  CHECK(connected_components(nine).size() == blocks.size());
  CHECK(blocks.size() == 3);

  for (Vertex v = 0; v < 200; ++v) {
    auto [pos, block] = cantor_unpair(v);
    CHECK(cantor_pair(pos, block) == v);
  }
}

TEST_CASE("RS graphs") {
  const auto rs2 = rs_graph(2);
  CHECK(oracle_truncate(rs2, 4) == from_edges(4, {{0, 3}, {1, 2}, {2, 3}}));
  CHECK(oracle_truncate(rs2, 0).order() == 0);
  const auto rs3 = rs_graph(3);
  for (Vertex u = 0; u < 40; ++u)
    for (Vertex v = 0; v < 40; ++v) {
      if (u == v) continue;
      bool expected;
      if (u < 3 && v < 3) expected = false;
      else if (u >= 3 && v >= 3) expected = true;
      else expected = (u % 3) != (v % 3);
      CHECK(rs3.adjacent(u, v) == expected);
    }
  for (std::size_t n : {2u, 3u, 4u}) {
    check_outside_contract(rs_graph(n), 30, 200);
    check_twin_keys(rs_graph(n), 60);
  }
}

TEST_CASE("composite oracles declare their outside") {
  const Cardinal w = Cardinal::countable();
  for (auto [m, n] : {std::pair{w, Cardinal::finite(2)}, std::pair{Cardinal::finite(2), w}, std::pair{w, w},
                      std::pair{w, Cardinal::finite(3)}, std::pair{Cardinal::finite(3), w}}) {
    const auto o = composite_oracle(m, n);
    check_outside_contract(o, 20, 300);
    check_outside_contract(complement(o), 20, 300);
    check_twin_keys(o, 60);
  }
}

TEST_CASE("Rado BIT presentation") {
  // Independent bit table for i < j < 8.
  for (Vertex i = 0; i < 8; ++i)
    for (Vertex j = i + 1; j < 8; ++j) CHECK(rado_bit_adjacent(i, j) == (((j >> i) & 1u) == 1u));
  CHECK(rado_bit_adjacent(1, 2));
  CHECK(rado_bit_adjacent(2, 1));
  CHECK(oracle_truncate(rado_bit(), 4) == from_edges(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}}));
  // Extension witness for A = {0}, B = {1}.
  Vertex v = 2;
  while (!(rado_bit_adjacent(v, 0) && !rado_bit_adjacent(v, 1))) ++v;
  CHECK(v == 5);
}

TEST_CASE("oracle truncation rejects inconsistent predicates") {
  OracleGraph loop("loop", [](Vertex, Vertex) { return true; });
  CHECK_THROWS_AS(oracle_truncate(loop, 3), GraphError);
  OracleGraph lopsided("lopsided", [](Vertex u, Vertex v) { return u < v; });
  CHECK_THROWS_AS(oracle_truncate(lopsided, 3), GraphError);
}

TEST_CASE("K_n-free staged graphs") {
  for (std::size_t n : {3u, 4u}) {
    const auto kf = knfree_generic(n, 40, 5);
    const Graph& g = kf.graph;
    CHECK(g.order() == 40);
    // No K_n: brute force over n-subsets.
    std::vector<Vertex> idx(n);
    std::function<bool(std::size_t, Vertex)> has_clique = [&](std::size_t depth, Vertex from) {
      if (depth == n) return true;
      for (Vertex v = from; v < g.order(); ++v) {
        bool ok = true;
        for (std::size_t i = 0; i < depth && ok; ++i) ok = g.adjacent(idx[i], v);
        if (!ok) continue;
        idx[depth] = v;
        if (has_clique(depth + 1, v + 1)) return true;
      }
      return false;
    };
    CHECK_FALSE(has_clique(0, 0));
  }
  CHECK(knfree_generic(3, 40, 5).graph == knfree_generic(3, 40, 5).graph);
}

TEST_CASE("H3 prime surgery") {
  const H3Prime h = h3_prime(80, 1);
  const Graph& g = h.graph;
  CHECK_FALSE(g.adjacent(h.u, h.v));
  CHECK(common_neighbors(g, h.u, h.v) == VertexSet{h.w});
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b)
      if (g.adjacent(a, b)) CHECK(common_neighbors(g, a, b).empty());
}

TEST_CASE("Rado with a dominating vertex") {
  const Graph g = rado_plus_dominating(17);
  CHECK(g.order() == 17);
  CHECK(g.degree(16) == 16);
  for (Vertex a = 0; a < 16; ++a)
    for (Vertex b = a + 1; b < 16; ++b) CHECK(g.adjacent(a, b) == rado_bit_adjacent(a, b));
}
