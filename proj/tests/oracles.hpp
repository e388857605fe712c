#pragma once

// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into owf's verifier, edge generator or solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "owf/factor.hpp"
#include "owf/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Adjacency multiplicities straight from the host definitions.
inline Matrix adjacency(const owf::GraphSpec& spec) {
  const int v = spec.num_vertices();
  Matrix m(v, std::vector<int>(v, 0));
  auto add = [&](int a, int b, int k = 1) {
    m[a][b] += k;
    m[b][a] += k;
  };
  if (auto* s = spec.get_if<owf::CompleteOdd>()) {
    for (int a = 0; a < s->v; ++a)
      for (int b = a + 1; b < s->v; ++b) add(a, b);
  } else if (auto* s = spec.get_if<owf::CompleteMinusI>()) {
    for (int a = 0; a < s->v; ++a)
      for (int b = a + 1; b < s->v; ++b) add(a, b);
    if (s->one_factor.empty()) {
      for (int i = 0; i < s->v / 2; ++i) add(2 * i, 2 * i + 1, -1);
    } else {
      for (const auto& e : s->one_factor) add(e.u, e.v, -1);
    }
  } else if (auto* s = spec.get_if<owf::CompletePlusJ>()) {
    for (int a = 0; a < s->v; ++a)
      for (int b = a + 1; b < s->v; ++b) add(a, b, b == a + 1 && a % 2 == 0 ? 2 : 1);
  } else if (auto* s = spec.get_if<owf::LambdaComplete>()) {
    for (int a = 0; a < s->v; ++a)
      for (int b = a + 1; b < s->v; ++b) add(a, b, s->lambda);
  } else if (auto* s = spec.get_if<owf::Equipartite>()) {
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        if (a / s->part_size != b / s->part_size) add(a, b);
  } else if (auto* s = spec.get_if<owf::BlownCycle>()) {
    const int n = s->group.order();
    for (int i = 0; i < s->g; ++i)
      for (int x = 0; x < n; ++x)
        for (int d : s->connection) add(i * n + x, ((i + 1) % s->g) * n + s->group.add(x, d));
  } else if (auto* s = spec.get_if<owf::Circulant>()) {
    for (int a = 0; a < s->n; ++a)
      for (int b = a + 1; b < s->n; ++b) {
        int d = b - a;
        d = std::min(d, s->n - d);
        if (std::find(s->connection.begin(), s->connection.end(), d) != s->connection.end()) add(a, b);
      }
  }
  return m;
}

inline int edge_total(const Matrix& m) {
  int t = 0;
  for (size_t a = 0; a < m.size(); ++a)
    for (size_t b = a + 1; b < m.size(); ++b) t += m[a][b];
  return t;
}

/// True iff every factor is a spanning union of disjoint cycles and the
/// factors use each host edge exactly as often as the host has it.
/// Cycles of length 2 (a doubled edge) are allowed only when `allow_digons`.
inline bool is_factorization(const Matrix& host, const std::vector<owf::TwoFactor>& factors, bool allow_digons) {
  const int v = static_cast<int>(host.size());
  Matrix used(v, std::vector<int>(v, 0));
  for (const auto& f : factors) {
    std::vector<int> seen(v, 0);
    for (const auto& c : f.cycles) {
      const int len = static_cast<int>(c.size());
      if (len < 2 || (len == 2 && !allow_digons)) return false;
      for (int k = 0; k < len; ++k) {
        int a = c[k], b = c[(k + 1) % len];
        if (a < 0 || a >= v || b < 0 || b >= v || a == b) return false;
        if (++seen[a] != 1) return false;
        ++used[a][b];
        ++used[b][a];
      }
    }
    for (int x : seen)
      if (x != 1) return false;
  }
  return used == host;
}

/// Multiset of cycle lengths, sorted.
inline std::vector<int> lengths(const owf::TwoFactor& f) {
  std::vector<int> out;
  for (const auto& c : f.cycles) out.push_back(static_cast<int>(c.size()));
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of partitions of v into parts >= 3.
inline long long partitions_min3(int v) {
  std::vector<long long> p(v + 1, 0);
  p[0] = 1;
  for (int part = 3; part <= v; ++part)
    for (int s = part; s <= v; ++s) p[s] += p[s - part];
  return p[v];
}

/// All 2-factors of a simple graph with at most 64 edges whose sorted cycle
/// lengths equal `want`, as edge bitmasks over the index map `eid`.
inline std::vector<std::uint64_t> two_factors(const Matrix& host, const std::vector<int>& want,
                                              const std::vector<std::vector<int>>& eid) {
  const int v = static_cast<int>(host.size());
  std::vector<std::uint64_t> out;
  std::vector<int> left = want;  // remaining lengths
  std::vector<char> used(v, 0);
  std::vector<int> path;
  std::set<std::uint64_t> uniq;
  std::function<void(std::uint64_t)> next_cycle;
  std::function<void(std::uint64_t, int)> extend = [&](std::uint64_t mask, int len) {
    if (static_cast<int>(path.size()) == len) {
      int a = path.back(), b = path.front();
      if (!host[a][b] || path[1] > path.back()) return;
      std::uint64_t m = mask | (std::uint64_t{1} << eid[a][b]);
      next_cycle(m);
      return;
    }
    for (int y = 0; y < v; ++y) {
      if (used[y] || !host[path.back()][y] || y < path.front()) continue;
      used[y] = 1;
      path.push_back(y);
      extend(mask | (std::uint64_t{1} << eid[path[path.size() - 2]][y]), len);
      path.pop_back();
      used[y] = 0;
    }
  };
  next_cycle = [&](std::uint64_t mask) {
    int start = -1;
    for (int x = 0; x < v; ++x)
      if (!used[x]) {
        start = x;
        break;
      }
    if (start < 0) {
      if (uniq.insert(mask).second) out.push_back(mask);
      return;
    }
    std::vector<int> tried;
    for (size_t i = 0; i < left.size(); ++i) {
      int len = left[i];
      if (std::find(tried.begin(), tried.end(), len) != tried.end()) continue;
      tried.push_back(len);
      left.erase(left.begin() + static_cast<long>(i));
      used[start] = 1;
      std::vector<int> saved = path;
      path = {start};
      extend(mask, len);
      path = saved;
      used[start] = 0;
      left.insert(left.begin() + static_cast<long>(i), len);
    }
  };
  next_cycle(0);
  return out;
}

/// Whether a simple host (at most 64 edges) splits into 2-factors with the
/// given sorted length lists, by exact cover over edge bitmasks.
inline bool factorization_exists(const Matrix& host, const std::vector<std::vector<int>>& types) {
  const int v = static_cast<int>(host.size());
  std::vector<std::vector<int>> eid(v, std::vector<int>(v, -1));
  int e = 0;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b)
      if (host[a][b]) eid[a][b] = eid[b][a] = e++;
  if (e > 64) return false;
  const std::uint64_t all = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  std::map<std::vector<int>, int> need;
  for (const auto& t : types) ++need[t];
  std::map<std::vector<int>, std::vector<std::uint64_t>> cand;
  for (const auto& [t, c] : need) cand[t] = two_factors(host, t, eid);
  std::function<bool(std::uint64_t)> go = [&](std::uint64_t covered) -> bool {
    if (covered == all) return true;
    const std::uint64_t low = ~covered & (covered + 1);
    for (auto& [t, c] : need) {
      if (c == 0) continue;
      --c;
      for (std::uint64_t m : cand[t]) {
        if ((m & low) && !(m & covered) && go(covered | m)) {
          ++c;
          return true;
        }
      }
      ++c;
    }
    return false;
  };
  return go(0);
}

/// Multiset of differences +-(b - a) over the non-infinity edges of a
/// starter on Z_n (infinity written as -1).
inline std::vector<int> starter_differences(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> out;
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int a = c[k], b = c[(k + 1) % c.size()];
      if (a < 0 || b < 0) continue;
      out.push_back(((b - a) % n + n) % n);
      out.push_back(((a - b) % n + n) % n);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The index-8 condition by explicit cosets: x in the subgroup of squares,
/// and pairwise distinct cosets of the subgroup of eighth powers.
inline bool coset_condition(long long p) {
  if (p % 16 != 1) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  std::vector<char> square(p, 0), eighth(p, 0);
  for (long long x = 1; x < p; ++x) {
    long long s = x * x % p;
    square[s] = 1;
    long long e = s * s % p;
    e = e * e % p;
    eighth[e] = 1;
  }
  for (int x = 1; x <= 4; ++x)
    if (!square[x]) return false;
  // x, y lie in the same coset of the eighth powers iff x / y is an eighth power.
  auto inv = [&](long long a) {
    long long r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (int x = 1; x <= 4; ++x)
    for (int y = x + 1; y <= 4; ++y)
      if (eighth[x * inv(y) % p]) return false;
  return true;
}

}  // namespace oracle
