#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "owf/corpus.hpp"
#include "owf/search/hamdecomp.hpp"
#include "owf/search/rsm_search.hpp"
#include "owf/search/solve.hpp"
#include "owf/search/starter_search.hpp"

using namespace owf;

namespace {

std::vector<CycleType> repeat(const char* t, int k) { return std::vector<CycleType>(k, parse_cycle_type(t)); }

SearchBudget quick(double seconds = 20) { return {seconds, 50'000'000, 0}; }

std::vector<std::vector<int>> as_lengths(const std::vector<CycleType>& ts) {
  std::vector<std::vector<int>> out;
  for (const auto& t : ts) out.push_back(t.lengths());
  return out;
}

}  // namespace

TEST_CASE("solve_exhaustive examples", "[search]") {
  auto k5 = solve_exhaustive(GraphSpec::complete_odd(5), repeat("[5]", 2));
  CHECK(k5.status == SearchStatus::Found);
  REQUIRE(k5.value);
  CHECK(verify_certificate(*k5.value).ok());

  auto k6 = solve_exhaustive(GraphSpec::complete_minus_i(6), repeat("[3,3]", 2));
  CHECK(k6.status == SearchStatus::ProvedNone);
  CHECK_FALSE(k6.value);
  CHECK(k6.nodes > 0);

  auto k7 = solve_exhaustive(GraphSpec::complete_odd(7), repeat("[3,4]", 3));
  CHECK(k7.status == SearchStatus::Found);
  CHECK(verify_certificate(*k7.value).ok());

  auto k9 = solve_exhaustive(GraphSpec::complete_odd(9), repeat("[4,5]", 4), quick(60));
  CHECK(k9.status == SearchStatus::ProvedNone);
}

TEST_CASE("solve_exhaustive preconditions and budgets", "[search]") {
  CHECK_THROWS_AS(solve_exhaustive(GraphSpec::complete_odd(7), repeat("[7]", 2)), PreconditionError);
  CHECK_THROWS_AS(solve_exhaustive(GraphSpec::complete_odd(7), repeat("[3,3]", 3)), PreconditionError);
  auto starved = solve_exhaustive(GraphSpec::complete_odd(9), repeat("[4,5]", 4), {60, 10, 0});
  CHECK(starved.status == SearchStatus::Exhausted);
  CHECK_FALSE(starved.value);
}

TEST_CASE("solve_exhaustive is deterministic", "[search]") {
  auto a = solve_exhaustive(GraphSpec::complete_odd(9), repeat("[3^3]", 4));
  auto b = solve_exhaustive(GraphSpec::complete_odd(9), repeat("[3^3]", 4));
  REQUIRE(a.found());
  CHECK(*a.value == *b.value);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("solver agrees with brute-force exact cover on K_v^*, v <= 9", "[search][oracle]") {
  for (int v = 5; v <= 9; ++v) {
    GraphSpec host = GraphSpec::complete_star(v);
    const int k = host.degree() / 2;
    const auto matrix = oracle::adjacency(host);
    for (const CycleType& t : cycle_types_of_order(v)) {
      INFO(host.describe() << " " << t.to_string());
      std::vector<CycleType> types(k, t);
      auto on = solve_exhaustive(host, types, quick());
      auto off = solve_exhaustive(host, types, quick(), SolveOptions{false});
      REQUIRE(on.status != SearchStatus::Exhausted);
      const bool exists = oracle::factorization_exists(matrix, as_lengths(types));
      CHECK(on.found() == exists);
      if (off.status != SearchStatus::Exhausted) CHECK(off.found() == on.found());
    }
  }
}

TEST_CASE("solver agrees with brute force on two-type instances, v <= 8", "[search][oracle]") {
  for (int v = 6; v <= 8; ++v) {
    GraphSpec host = GraphSpec::complete_star(v);
    const int k = host.degree() / 2;
    const auto matrix = oracle::adjacency(host);
    auto all = cycle_types_of_order(v);
    for (size_t i = 0; i < all.size(); ++i) {
      for (size_t j = i + 1; j < all.size(); ++j) {
        for (int r = 1; r < k; ++r) {
          std::vector<CycleType> types(r, all[i]);
          types.insert(types.end(), k - r, all[j]);
          INFO(host.describe() << " " << r << "x" << all[i].to_string() << " " << k - r << "x" << all[j].to_string());
          auto on = solve_exhaustive(host, types, quick());
          auto off = solve_exhaustive(host, types, quick(), SolveOptions{false});
          REQUIRE(on.status != SearchStatus::Exhausted);
          CHECK(on.found() == oracle::factorization_exists(matrix, as_lengths(types)));
          if (off.status != SearchStatus::Exhausted) CHECK(off.found() == on.found());
        }
      }
    }
  }
}

TEST_CASE("solver handles multigraph and equipartite hosts", "[search]") {
  auto pj = solve_exhaustive(GraphSpec::complete_plus_j(6), repeat("[3^2]", 3));
  CHECK(pj.status == SearchStatus::ProvedNone);
  auto pj6 = solve_exhaustive(GraphSpec::complete_plus_j(6), repeat("[6]", 3));
  CHECK(pj6.found());
  auto l2 = solve_exhaustive(GraphSpec::lambda_complete(2, 4), repeat("[4]", 3));
  CHECK(l2.found());
  auto eq = solve_exhaustive(GraphSpec::equipartite(2, 6), repeat("[6^2]", 3));
  CHECK(eq.status == SearchStatus::ProvedNone);
  auto eq4 = solve_exhaustive(GraphSpec::equipartite(2, 4), repeat("[4^2]", 2));
  CHECK(eq4.found());
}

TEST_CASE("find_starter examples", "[search]") {
  auto z4 = find_starter(FiniteAbelianGroup::cyclic(4), parse_cycle_type("[5]"), StarterGoal::TwoStarter);
  REQUIRE(z4.found());
  CHECK(classify_starter(*z4.value).kind == StarterKind::TwoStarter);
  CHECK(verify_certificate(develop(*z4.value, DevelopMode::Orbit)).ok());

  auto z3 = find_starter(FiniteAbelianGroup::cyclic(3), parse_cycle_type("[4]"), StarterGoal::Twofold);
  REQUIRE(z3.found());
  CHECK(classify_starter(*z3.value).twofold());

  // (inf, 0, 1) over Z_2 is fixed by translation by 1.
  auto z2 = find_starter(FiniteAbelianGroup::cyclic(2), parse_cycle_type("[3]"), StarterGoal::TwoStarter);
  REQUIRE(z2.found());
  CHECK(classify_starter(*z2.value).kind == StarterKind::TwoStarter);

  // The type must have order |G| + 1.
  CHECK_THROWS_AS(find_starter(FiniteAbelianGroup::cyclic(4), parse_cycle_type("[3]"), StarterGoal::Twofold),
                  PreconditionError);
}

TEST_CASE("find_rsm examples", "[search]") {
  auto a = find_rsm(FiniteAbelianGroup::cyclic(5), {1, 4}, 3, {5, 5});
  REQUIRE(a.found());
  CHECK(row_sum_orders(*a.value) == std::vector<int>{5, 5});
  CHECK(verify_certificate(rsm_apply(*a.value)).ok());

  auto z = find_rsm(FiniteAbelianGroup::cyclic(7), {0}, 3, {1});
  REQUIRE(z.found());
  CHECK(z.value->rows == std::vector<std::vector<int>>{{0, 0, 0}});

  auto b = find_rsm(FiniteAbelianGroup::cyclic(3), {1, 2}, 2, {3, 3});
  REQUIRE(b.found());
  auto c = find_rsm(FiniteAbelianGroup::cyclic(3), {1, 2}, 2, {1, 3});
  CHECK(c.status == SearchStatus::ProvedNone);
}

TEST_CASE("find_rsm agrees with enumeration of all matrices", "[search][oracle]") {
  // Brute force: columns are independent permutations of S.
  auto brute_orders = [](int n, const std::vector<int>& s, int g) {
    std::set<std::vector<int>> reachable;
    std::vector<std::vector<int>> perms;
    std::vector<int> p = s;
    std::sort(p.begin(), p.end());
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<size_t> pick(static_cast<size_t>(g), 0);
    while (true) {
      std::vector<int> orders;
      for (size_t r = 0; r < s.size(); ++r) {
        int sum = 0;
        for (int col = 0; col < g; ++col) sum += perms[pick[static_cast<size_t>(col)]][r];
        sum %= n;
        orders.push_back(n / std::gcd(n, sum));
      }
      std::sort(orders.begin(), orders.end());
      reachable.insert(orders);
      size_t k = 0;
      while (k < pick.size() && ++pick[k] == perms.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    return reachable;
  };
  struct Case {
    int n;
    std::vector<int> s;
    int g;
  };
  for (const Case& c : std::vector<Case>{{3, {1, 2}, 2}, {3, {1, 2}, 3}, {5, {1, 4}, 3}, {5, {1, 2, 3}, 3},
                                         {6, {1, 3, 5}, 3}, {7, {1, 2, 3}, 2}, {9, {1, 3, 8}, 3}}) {
    auto reach = brute_orders(c.n, c.s, c.g);
    // Every multiset of divisor orders of length |S|.
    std::vector<int> divs;
    for (int d = 1; d <= c.n; ++d)
      if (c.n % d == 0) divs.push_back(d);
    std::vector<size_t> idx(c.s.size(), 0);
    while (true) {
      std::vector<int> target;
      for (size_t i : idx) target.push_back(divs[i]);
      if (std::is_sorted(target.begin(), target.end())) {
        INFO("Z_" << c.n << " g=" << c.g << " target size " << target.size());
        auto r = find_rsm(FiniteAbelianGroup::cyclic(c.n), c.s, c.g, target);
        REQUIRE(r.status != SearchStatus::Exhausted);
        CHECK(r.found() == (reach.count(target) > 0));
        if (r.found()) CHECK(verify_certificate(rsm_apply(*r.value)).ok());
      }
      size_t k = 0;
      while (k < idx.size() && ++idx[k] == divs.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
}

TEST_CASE("find_rsm seeds are reproducible", "[search]") {
  SearchBudget b{10, 10'000'000, 7};
  auto a = find_rsm(FiniteAbelianGroup::cyclic(9), {1, 2, 7, 8}, 5, {9, 9, 9, 9}, b);
  auto c = find_rsm(FiniteAbelianGroup::cyclic(9), {1, 2, 7, 8}, 5, {9, 9, 9, 9}, b);
  REQUIRE(a.found());
  CHECK(*a.value == *c.value);
}

TEST_CASE("find_ham_decomp", "[search]") {
  auto a = find_ham_decomp(9, {1, 2});
  REQUIRE(a.found());
  CHECK(a.value->size() == 2);
  auto b = find_ham_decomp(7, {3});
  REQUIRE(b.found());
  CHECK(b.value->size() == 1);
  CHECK_THROWS_AS(find_ham_decomp(8, {2, 4}), PreconditionError);
  CHECK_THROWS_AS(find_ham_decomp(8, {2}), PreconditionError);
  CHECK_THROWS_AS(find_ham_decomp(9, {0}), PreconditionError);
}

TEST_CASE("find_ham_decomp agrees with brute force", "[search][oracle]") {
  for (int n = 5; n <= 11; ++n) {
    const int k = (n - 1) / 2;
    for (int a = 1; a <= k; ++a) {
      for (int b = a + 1; b <= k; ++b) {
        if (std::gcd(std::gcd(a, b), n) != 1) continue;
        if (2 * b == n) continue;
        INFO("n=" << n << " S={" << a << "," << b << "}");
        auto r = find_ham_decomp(n, {a, b});
        REQUIRE(r.status != SearchStatus::Exhausted);
        auto host = GraphSpec::circulant(n, {a, b});
        CHECK(r.found() == oracle::factorization_exists(oracle::adjacency(host), {{n}, {n}}));
      }
    }
  }
}
