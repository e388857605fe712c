#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/search/budget.hpp"
#include "owf/verify.hpp"

namespace owf {

/// Sorted, deduplicated connection set in [1, n/2]; throws unless Circ(n; +-S)
/// is connected and 2|S|-regular.
inline std::vector<int> normalize_circulant_set(int n, std::vector<int> s) {
  if (n < 3) throw PreconditionError("circulant needs n >= 3");
  for (int& d : s) {
    d = ((d % n) + n) % n;
    d = std::min(d, n - d);
    if (d == 0) throw PreconditionError("connection set may not contain 0");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw PreconditionError("connection set is empty");
  if (n % 2 == 0 && s.back() == n / 2) {
    throw PreconditionError("difference n/2 gives a 1-factor; Circ(" + std::to_string(n) + ") is not 2|S|-regular");
  }
  int gcd = n;
  for (int d : s) gcd = std::gcd(gcd, d);
  if (gcd != 1) throw PreconditionError("Circ(" + std::to_string(n) + ") is disconnected: gcd " + std::to_string(gcd));
  return s;
}

/// Hamilton decomposition of Circ(n; +-S) by backtracking. Each cycle starts
/// at 0 and leaves through 0's smallest remaining neighbour; after each cycle
/// the remaining graph must stay connected.
inline SearchOutcome<std::vector<Cycle>> find_ham_decomp(int n, std::vector<int> s, const SearchBudget& budget = {}) {
  s = normalize_circulant_set(n, std::move(s));
  const GraphSpec host = GraphSpec::circulant(n, s);
  BudgetMeter meter(budget);
  std::vector<char> adj(static_cast<size_t>(n * n), 0);
  auto at = [&](int u, int v) -> char& { return adj[static_cast<size_t>(u * n + v)]; };
  for (int x = 0; x < n; ++x) {
    for (int d : s) {
      at(x, (x + d) % n) = 1;
      at((x + d) % n, x) = 1;
    }
  }
  std::vector<Cycle> cycles;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  std::vector<int> path;

  auto connected = [&]() {
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (at(u, w) && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };

  // The last 2-regular remainder must itself be a Hamilton cycle.
  auto remainder_cycle = [&]() -> std::optional<Cycle> {
    Cycle c{0};
    int prev = -1;
    int cur = 0;
    while (true) {
      int next = -1;
      for (int w = 0; w < n; ++w) {
        if (at(cur, w) && w != prev) {
          next = w;
          break;
        }
      }
      if (next < 0) return std::nullopt;
      if (next == 0) break;
      c.push_back(next);
      prev = cur;
      cur = next;
      if (static_cast<int>(c.size()) > n) return std::nullopt;
    }
    if (static_cast<int>(c.size()) != n) return std::nullopt;
    return c;
  };

  auto feasible = [&]() {
    const int tip = path.back();
    for (int w = 0; w < n; ++w) {
      if (visited[static_cast<size_t>(w)]) continue;
      int ends = 0;
      for (int u = 0; u < n && ends < 2; ++u) {
        if (at(w, u) && (!visited[static_cast<size_t>(u)] || u == 0 || u == tip)) ++ends;
      }
      if (ends < 2) return false;
    }
    return true;
  };

  std::function<bool()> next_cycle;
  std::function<bool()> extend = [&]() -> bool {
    if (!meter.tick()) return false;
    const int tip = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (!at(tip, 0) || tip < path[1]) return false;
      at(tip, 0) = at(0, tip) = 0;
      Cycle c = path;
      cycles.push_back(c);
      bool ok = connected() && next_cycle();
      if (!ok) cycles.pop_back();
      at(tip, 0) = at(0, tip) = 1;
      path = std::move(c);
      return ok;
    }
    for (int w = 1; w < n; ++w) {
      if (visited[static_cast<size_t>(w)] || !at(tip, w)) continue;
      if (path.size() == 1) {
        // First edge: 0's smallest remaining neighbour only.
        bool smaller = false;
        for (int u = 1; u < w; ++u) smaller = smaller || at(0, u);
        if (smaller) break;
      }
      at(tip, w) = at(w, tip) = 0;
      visited[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      bool ok = feasible() && extend();
      path.pop_back();
      visited[static_cast<size_t>(w)] = 0;
      at(tip, w) = at(w, tip) = 1;
      if (ok) return true;
      if (meter.broken()) return false;
    }
    return false;
  };
  next_cycle = [&]() -> bool {
    if (cycles.size() + 1 == s.size()) {
      if (auto c = remainder_cycle()) {
        cycles.push_back(std::move(*c));
        return true;
      }
      return false;
    }
    std::fill(visited.begin(), visited.end(), 0);
    visited[0] = 1;
    path.assign(1, 0);
    bool ok = extend();
    if (!ok) {
      // Restore the visited marks of the enclosing cycle, if any.
      std::fill(visited.begin(), visited.end(), 1);
    }
    return ok;
  };

  std::optional<std::vector<Cycle>> found;
  if (next_cycle()) {
    std::vector<TwoFactor> factors;
    for (const Cycle& c : cycles) factors.push_back(TwoFactor{{c}});
    VerifyReport r = verify_certificate(make_cert(host, factors));
    if (!r.ok()) throw ConstructionError("Hamilton decomposition failed verification: " + r.violations[0].detail);
    found = cycles;
  }
  return meter.finish(std::move(found));
}

}  // namespace owf
