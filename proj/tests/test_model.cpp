#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "owf/construct/haggkvist.hpp"
#include "owf/construct/walecki.hpp"
#include "owf/corpus.hpp"
#include "owf/cycle_type.hpp"
#include "owf/factor.hpp"
#include "owf/graph.hpp"

using namespace owf;

TEST_CASE("parse_cycle_type reads bracket notation", "[model]") {
  CycleType t = parse_cycle_type("[3^2,5]");
  CHECK(t.parts() == std::map<int, int>{{3, 2}, {5, 1}});
  CHECK(t.order() == 11);
  CHECK(t.num_cycles() == 3);

  CHECK(parse_cycle_type("[7]").parts() == std::map<int, int>{{7, 1}});
  CHECK(parse_cycle_type("[7]").order() == 7);
  // 4 + 3*8 + 2*10 + 12, the same order as [4,16,18,22].
  CHECK(parse_cycle_type("[4,8^3,10^2,12]").order() == 60);

  // Repeated lengths merge; order of items does not matter.
  CHECK(parse_cycle_type("[5,3,3]") == parse_cycle_type("[3^2,5]"));
  CHECK(parse_cycle_type(" [ 4 , 4 ] ") == CycleType::uniform(4, 2));
}

TEST_CASE("parse_cycle_type rejects malformed input", "[model]") {
  for (const char* bad : {"", "3,4", "[", "[]", "[3,", "[3^]", "[x]", "[2]", "[3]]", "[3^0]", "[-3]"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_cycle_type(bad), ParseError);
  }
  CHECK_NOTHROW(parse_cycle_type("[2,2]", 2));
}

TEST_CASE("cycle type canonical form and flags", "[model]") {
  CycleType t = CycleType::from_lengths({8, 4, 6, 6});
  CHECK(t.to_string() == "[4,6^2,8]");
  CHECK(parse_cycle_type(t.to_string()) == t);
  CHECK(t.is_bipartite());
  CHECK_FALSE(parse_cycle_type("[4,5]").is_bipartite());
  CHECK(CycleType::uniform(3, 5).is_uniform());
  CHECK(t.min_length() == 4);
  CHECK(t.max_length() == 8);
  CHECK(t.lengths() == std::vector<int>{4, 6, 6, 8});
}

TEST_CASE("cycle types of an order match the partition count", "[model]") {
  for (int v = 3; v <= 30; ++v) {
    INFO(v);
    auto types = cycle_types_of_order(v);
    CHECK(static_cast<long long>(types.size()) == oracle::partitions_min3(v));
    for (const auto& t : types) CHECK(t.order() == v);
  }
}

TEST_CASE("is_refinement", "[model]") {
  const CycleType coarse = parse_cycle_type("[4,16,18,22]");
  CHECK(is_refinement(parse_cycle_type("[4,8^3,10^2,12]"), coarse));
  CHECK_FALSE(is_refinement(parse_cycle_type("[4,18^2,20]"), coarse));
  CHECK(is_refinement(coarse, coarse));
  CHECK(is_refinement(parse_cycle_type("[4^3]"), parse_cycle_type("[12]")));
  CHECK(is_refinement(parse_cycle_type("[4,6]"), parse_cycle_type("[10]")));
  // Odd cycles only refine themselves.
  CHECK_FALSE(is_refinement(parse_cycle_type("[3,4]"), parse_cycle_type("[7]")));
  CHECK_FALSE(is_refinement(parse_cycle_type("[4,4]"), parse_cycle_type("[6]")));
}

TEST_CASE("host edge sets agree with the definitions", "[model]") {
  std::vector<GraphSpec> hosts = {
      GraphSpec::complete_odd(5),
      GraphSpec::complete_odd(9),
      GraphSpec::complete_minus_i(6),
      GraphSpec::complete_minus_i(10),
      GraphSpec::complete_plus_j(6),
      GraphSpec::lambda_complete(2, 5),
      GraphSpec::lambda_complete(3, 4),
      GraphSpec::equipartite(3, 4),
      GraphSpec::equipartite(2, 5),
      GraphSpec::blown_cycle(3, FiniteAbelianGroup::cyclic(5), {1, 4}),
      GraphSpec::blown_cycle(2, FiniteAbelianGroup::cyclic(4), {1, 3}),
      GraphSpec::blown_cycle(4, FiniteAbelianGroup({2, 2}), {0, 1, 3}),
      GraphSpec::circulant(9, {1, 2}),
      GraphSpec::circulant(8, {1, 4}),
      GraphSpec(CompleteMinusI{6, {{0, 3}, {1, 4}, {2, 5}}}),
  };
  for (const auto& h : hosts) {
    INFO(h.describe());
    oracle::Matrix want = oracle::adjacency(h);
    oracle::Matrix got(want.size(), std::vector<int>(want.size(), 0));
    for (const auto& [e, mult] : h.edges()) {
      got[e.u][e.v] += mult;
      got[e.v][e.u] += mult;
    }
    CHECK(got == want);
    // Regular of the advertised degree.
    for (const auto& row : want) CHECK(std::accumulate(row.begin(), row.end(), 0) == h.degree());
  }
}

TEST_CASE("host edge counts", "[model]") {
  CHECK(edge_count(GraphSpec::complete_odd(5).edges()) == 10);
  auto blown = GraphSpec::blown_cycle(3, FiniteAbelianGroup::cyclic(5), {1, 4});
  CHECK(edge_count(blown.edges()) == 30);
  CHECK(blown.num_vertices() == 15);
  CHECK(blown.degree() == 4);
  auto kmi = GraphSpec::complete_minus_i(6);
  CHECK(edge_count(kmi.edges()) == 12);
  for (const auto& [e, mult] : kmi.edges()) CHECK_FALSE((e.u % 2 == 0 && e.v == e.u + 1));
  CHECK(edge_count(GraphSpec::complete_plus_j(6).edges()) == 18);
  CHECK(edge_count(GraphSpec::equipartite(3, 3).edges()) == 27);
}

TEST_CASE("host validation", "[model]") {
  CHECK_THROWS_AS(GraphSpec::complete_odd(4), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::complete_minus_i(5), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::complete_plus_j(3), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::lambda_complete(0, 5), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::equipartite(1, 5), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::blown_cycle(3, FiniteAbelianGroup::cyclic(5), {1, 1}), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::blown_cycle(3, FiniteAbelianGroup::cyclic(5), {7}), PreconditionError);
  CHECK_THROWS_AS(GraphSpec::circulant(9, {5}), PreconditionError);
  CHECK_THROWS_AS(GraphSpec(CompleteMinusI{6, {{0, 1}, {1, 2}, {4, 5}}}), PreconditionError);
}

TEST_CASE("describe names", "[model]") {
  CHECK(GraphSpec::complete_odd(7).describe() == "K7");
  CHECK(GraphSpec::complete_minus_i(6).describe() == "K6-I");
  CHECK(GraphSpec::complete_plus_j(6).describe() == "K6+J");
  CHECK(GraphSpec::lambda_complete(2, 5).describe() == "2K5");
  CHECK(GraphSpec::equipartite(3, 4).describe() == "K3[4]");
  CHECK(GraphSpec::blown_cycle(3, FiniteAbelianGroup::cyclic(5), {1, 4}).describe() == "C3[Z5;1,4]");
  CHECK(GraphSpec::circulant(9, {1, 2}).describe() == "Circ(9;1,2)");
  CHECK(GraphSpec::complete_star(7) == GraphSpec::complete_odd(7));
  CHECK(GraphSpec::complete_star(8) == GraphSpec::complete_minus_i(8));
}

TEST_CASE("half-difference edge classes", "[model]") {
  auto even3 = half_difference_edges(8, 3, Parity::Even);
  std::vector<Edge> want = {Edge(0, 3), Edge(2, 5), Edge(4, 7), Edge(6, 1)};
  std::sort(even3.begin(), even3.end());
  std::sort(want.begin(), want.end());
  CHECK(even3 == want);

  auto all1 = half_difference_edges(8, 1, Parity::Even);
  auto odd1 = half_difference_edges(8, 1, Parity::Odd);
  all1.insert(all1.end(), odd1.begin(), odd1.end());
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : all1) seen.insert({e.u, e.v});
  CHECK(seen.size() == 8);
  for (int x = 0; x < 8; ++x) CHECK(seen.count({std::min(x, (x + 1) % 8), std::max(x, (x + 1) % 8)}));

  auto g12 = one_three_even_edges(12);
  CHECK(g12.size() == 18);
  std::vector<int> deg(12, 0);
  for (const Edge& e : g12) {
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int d : deg) CHECK(d == 3);
}

TEST_CASE("cycle_type_of", "[model]") {
  TwoFactor f{{{0, 1, 2}, {3, 4, 5, 6}}};
  CHECK(cycle_type_of(f) == parse_cycle_type("[3,4]"));
  for (const TwoFactor& w : walecki(7).factors) CHECK(cycle_type_of(w) == parse_cycle_type("[7]"));
  auto pair = haggkvist_double(12, parse_cycle_type("[4,6,6,8]"));
  CHECK(cycle_type_of(pair.first) == parse_cycle_type("[4,6,6,8]"));
  CHECK(cycle_type_of(pair.second) == parse_cycle_type("[4,6,6,8]"));
}

TEST_CASE("make_cert reads claimed types off the factors", "[model]") {
  auto cert = make_cert(GraphSpec::complete_odd(5), {TwoFactor{{{0, 1, 2, 3, 4}}}, TwoFactor{{{0, 2, 4, 1, 3}}}});
  REQUIRE(cert.claimed_types.size() == 2);
  CHECK(cert.claimed_types[0] == parse_cycle_type("[5]"));
  CHECK(cert.block_size == 1);
  CHECK(factor_edges(cert.factors[0]).size() == 5);
}
