#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/search/solve.hpp"
#include "owf/verify.hpp"

namespace owf {

/// C_n[2] as BlownCycle(n, Z_2, {0,1}); vertex (i, x) is 2i + x.
inline GraphSpec doubled_cycle(int n) {
  return GraphSpec::blown_cycle(n, FiniteAbelianGroup::cyclic(2), {0, 1});
}

namespace detail {

/// Splits a 2-regular simple edge list on `n` vertices into cycles, each
/// started at its least vertex.
inline std::vector<Cycle> trace_cycles(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> nb(static_cast<size_t>(n));
  for (const Edge& e : edges) {
    nb[static_cast<size_t>(e.u)].push_back(e.v);
    nb[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (const auto& l : nb) {
    if (l.size() != 2) throw ConstructionError("edge set is not 2-regular");
  }
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<Cycle> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    Cycle c{s};
    seen[static_cast<size_t>(s)] = 1;
    int prev = s;
    int cur = std::min(nb[static_cast<size_t>(s)][0], nb[static_cast<size_t>(s)][1]);
    while (cur != s) {
      c.push_back(cur);
      seen[static_cast<size_t>(cur)] = 1;
      const auto& l = nb[static_cast<size_t>(cur)];
      int next = l[0] == prev ? l[1] : l[0];
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

struct DoubledPair {
  TwoFactor first;
  TwoFactor second;
  bool used_fallback = false;
};

/// Both factors of C_n[2] from explicit arcs a_1..a_k (each >= 2, summing to
/// n). Cycle i of the first factor runs along the bottom row over groups
/// x_{i-1}..x_i - 1 and back along the top row over x_{i-1}+1..x_i, where
/// x_i are the prefix sums; the second factor is the complement. If the
/// complement does not have the same type, an exact search is used instead.
inline DoubledPair haggkvist_double_arcs(int n, const std::vector<int>& arcs) {
  if (n < 3) throw PreconditionError("C_n[2] needs n >= 3");
  if (std::accumulate(arcs.begin(), arcs.end(), 0) != n) throw PreconditionError("arcs must sum to n");
  for (int a : arcs) {
    if (a < 2) throw PreconditionError("every cycle must have length at least 4");
  }
  auto vtx = [n](int i, int x) { return 2 * (((i % n) + n) % n) + x; };
  TwoFactor a;
  int start = 0;
  for (int len : arcs) {
    const int end = start + len;
    Cycle c;
    for (int j = start; j < end; ++j) c.push_back(vtx(j, 0));
    for (int j = end; j > start; --j) c.push_back(vtx(j, 1));
    a.cycles.push_back(std::move(c));
    start = end;
  }
  std::vector<int> lengths;
  for (int len : arcs) lengths.push_back(2 * len);
  const CycleType want = CycleType::from_lengths(lengths);
  const GraphSpec host = doubled_cycle(n);

  EdgeCounter used = to_counter(to_multiset(factor_edges(a)));
  std::vector<Edge> rest;
  for (const auto& [e, m] : host.edges()) {
    if (!used.count(e.key())) rest.push_back(e);
  }
  DoubledPair out;
  out.first = a;
  out.second.cycles = detail::trace_cycles(host.num_vertices(), rest);
  if (cycle_type_of(out.second) == want) return out;

  auto r = solve_exhaustive(host, {want, want});
  if (!r.found()) throw ConstructionError("no doubled factorization found for " + want.to_string());
  out.first = r.value->factors[0];
  out.second = r.value->factors[1];
  out.used_fallback = true;
  return out;
}

/// Two copies of the bipartite type f factoring C_n[2], arcs taken in
/// ascending order.
inline DoubledPair haggkvist_double(int n, const CycleType& f) {
  if (!f.is_bipartite() || f.order() != 2 * n) {
    throw PreconditionError("type " + f.to_string() + " must be bipartite of order " + std::to_string(2 * n));
  }
  std::vector<int> arcs;
  for (int len : f.lengths()) arcs.push_back(len / 2);
  return haggkvist_double_arcs(n, arcs);
}

inline FactorizationCert haggkvist_cert(int n, const CycleType& f) {
  DoubledPair p = haggkvist_double(n, f);
  return make_cert(doubled_cycle(n), {p.first, p.second});
}

}  // namespace owf
