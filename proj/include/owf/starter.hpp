#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "owf/factor.hpp"
#include "owf/group.hpp"
#include "owf/search/budget.hpp"

namespace owf {

/// The point fixed by the group action; serialized as -1.
inline constexpr int kInfinity = -1;

/// A 2-regular graph on G u {inf}, the seed of a 1-rotational factorization.
struct StarterGraph {
  FiniteAbelianGroup group;
  std::vector<Cycle> cycles;

  bool operator==(const StarterGraph&) const = default;
};

enum class StarterKind { TwofoldTwoStarter, TwoStarter, NotAStarter };

struct StarterClass {
  StarterKind kind = StarterKind::NotAStarter;
  int involution = 0;  // valid for TwoStarter
  std::string reason;  // set for NotAStarter

  bool twofold() const { return kind != StarterKind::NotAStarter; }
};

inline const char* to_string(StarterKind k) {
  switch (k) {
    case StarterKind::TwofoldTwoStarter: return "TwofoldTwoStarter";
    case StarterKind::TwoStarter: return "TwoStarter";
    case StarterKind::NotAStarter: return "NotAStarter";
  }
  return "?";
}

/// Why `f` is not a simple 2-regular graph on exactly G u {inf}, if it isn't.
inline std::optional<std::string> starter_shape_error(const StarterGraph& f) {
  const int n = f.group.order();
  std::vector<int> seen(static_cast<size_t>(n), 0);
  int inf_seen = 0;
  for (const Cycle& c : f.cycles) {
    if (c.size() < 3) return "cycle shorter than 3";
    for (int x : c) {
      if (x == kInfinity) {
        ++inf_seen;
      } else if (!f.group.contains(x)) {
        return "vertex " + std::to_string(x) + " outside the group";
      } else if (++seen[static_cast<size_t>(x)] > 1) {
        return "vertex " + std::to_string(x) + " repeated: not 2-regular";
      }
    }
  }
  if (inf_seen != 1) return "infinity must appear exactly once";
  for (int x = 0; x < n; ++x) {
    if (!seen[static_cast<size_t>(x)]) return "vertex " + std::to_string(x) + " missing";
  }
  return std::nullopt;
}

/// Differences x-y and y-x for every edge {x,y} not touching infinity, in
/// traversal order.
inline std::vector<int> delta_list(const StarterGraph& f) {
  std::vector<int> out;
  for (const Cycle& c : f.cycles) {
    if (c.size() < 2) continue;
    for (size_t k = 0; k < c.size(); ++k) {
      int x = c[k];
      int y = c[(k + 1) % c.size()];
      if (x == kInfinity || y == kInfinity) continue;
      out.push_back(f.group.sub(y, x));
      out.push_back(f.group.sub(x, y));
    }
  }
  return out;
}

inline StarterGraph translate(const StarterGraph& f, int a) {
  StarterGraph out = f;
  for (Cycle& c : out.cycles) {
    for (int& x : c) {
      if (x != kInfinity) x = f.group.add(x, a);
    }
  }
  return out;
}

/// Sorted edge list; equal for equal graphs regardless of cycle order.
inline std::vector<Edge> starter_edge_set(const StarterGraph& f) {
  std::vector<Edge> out;
  for (const Cycle& c : f.cycles) {
    auto e = cycle_edges(c);
    out.insert(out.end(), e.begin(), e.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cycle type with infinity counted as an ordinary vertex.
inline CycleType starter_cycle_type(const StarterGraph& f) {
  std::vector<int> lengths;
  for (const Cycle& c : f.cycles) lengths.push_back(static_cast<int>(c.size()));
  return CycleType::from_lengths(lengths, 1);
}

inline StarterClass classify_starter(const StarterGraph& f) {
  StarterClass out;
  if (auto err = starter_shape_error(f)) {
    out.reason = *err;
    return out;
  }
  const int n = f.group.order();
  std::vector<int> count(static_cast<size_t>(n), 0);
  for (int d : delta_list(f)) ++count[static_cast<size_t>(d)];
  if (count[0] != 0) {
    out.reason = "zero difference";
    return out;
  }
  for (int d = 1; d < n; ++d) {
    if (count[static_cast<size_t>(d)] != 2) {
      out.reason = "difference " + std::to_string(d) + " occurs " +
                   std::to_string(count[static_cast<size_t>(d)]) + " times, expected 2";
      return out;
    }
  }
  out.kind = StarterKind::TwofoldTwoStarter;
  const auto edges = starter_edge_set(f);
  for (int y : f.group.involutions()) {
    if (starter_edge_set(translate(f, y)) == edges) {
      out.kind = StarterKind::TwoStarter;
      out.involution = y;
      break;
    }
  }
  return out;
}

enum class DevelopMode { Orbit, Development };

/// Orbit mode: the distinct translates of a 2-starter, a 1-rotational
/// factorization of K_{|G|+1}. Development mode: all |G| translates of a
/// twofold 2-starter, a factorization of 2K_{|G|+1}. Group element e is
/// vertex e and infinity is vertex |G|.
inline FactorizationCert develop(const StarterGraph& f, DevelopMode mode) {
  StarterClass cls = classify_starter(f);
  if (mode == DevelopMode::Orbit && cls.kind != StarterKind::TwoStarter) {
    throw PreconditionError("orbit development needs a 2-starter (got " +
                            std::string(to_string(cls.kind)) + ")");
  }
  if (mode == DevelopMode::Development && !cls.twofold()) {
    throw PreconditionError("development needs a twofold 2-starter: " + cls.reason);
  }
  const int n = f.group.order();
  auto relabel = [n](const Cycle& c) {
    Cycle out = c;
    for (int& x : out) {
      if (x == kInfinity) x = n;
    }
    return out;
  };
  std::vector<TwoFactor> factors;
  std::set<std::vector<Edge>> seen;
  for (int a = 0; a < n; ++a) {
    StarterGraph t = translate(f, a);
    if (mode == DevelopMode::Orbit && !seen.insert(starter_edge_set(t)).second) continue;
    TwoFactor tf;
    for (const Cycle& c : t.cycles) tf.cycles.push_back(relabel(c));
    factors.push_back(std::move(tf));
  }
  GraphSpec host = mode == DevelopMode::Orbit ? GraphSpec::complete_odd(n + 1)
                                              : GraphSpec::lambda_complete(2, n + 1);
  return make_cert(std::move(host), std::move(factors));
}

/// Reads a graceful labelling of a 2-regular graph of order v (labels
/// 0..v-2 plus infinity, plain differences |x-y| realizing 1..v-2 once each)
/// modulo v-1, giving a twofold 2-starter of Z_{v-1}.
inline StarterGraph graceful_to_starter(const std::vector<Cycle>& labelled) {
  int v = 0;
  for (const Cycle& c : labelled) v += static_cast<int>(c.size());
  if (v < 3) throw PreconditionError("graceful labelling needs order >= 3");
  const int top = v - 2;
  std::vector<int> seen(static_cast<size_t>(top + 1), 0);
  int inf = 0;
  for (const Cycle& c : labelled) {
    if (c.size() < 3) throw PreconditionError("cycles must have length >= 3");
    for (int x : c) {
      if (x == kInfinity) {
        ++inf;
      } else if (x < 0 || x > top) {
        throw PreconditionError("label " + std::to_string(x) + " outside 0.." + std::to_string(top));
      } else if (++seen[static_cast<size_t>(x)] > 1) {
        throw PreconditionError("duplicate label " + std::to_string(x));
      }
    }
  }
  if (inf != 1) throw PreconditionError("exactly one vertex must be infinity");
  std::vector<int> diff(static_cast<size_t>(top + 1), 0);
  for (const Cycle& c : labelled) {
    for (size_t k = 0; k < c.size(); ++k) {
      int x = c[k];
      int y = c[(k + 1) % c.size()];
      if (x == kInfinity || y == kInfinity) continue;
      int d = std::abs(x - y);
      if (++diff[static_cast<size_t>(d)] > 1) {
        throw PreconditionError("plain difference " + std::to_string(d) + " repeated");
      }
    }
  }
  for (int d = 1; d <= top; ++d) {
    if (diff[static_cast<size_t>(d)] != 1) {
      throw PreconditionError("plain difference " + std::to_string(d) + " missing");
    }
  }
  StarterGraph out{FiniteAbelianGroup::cyclic(v - 1), labelled};
  if (!classify_starter(out).twofold()) {
    throw ConstructionError("graceful reduction did not give a twofold 2-starter");
  }
  return out;
}

/// A 2-starter of Z_{2n} lifted from a twofold 2-starter of Z_n. Cycle
/// indices refer to the non-infinity cycles of the input in order; a cycle
/// in `doubled` lifts to one cycle of twice its length, a cycle in `split`
/// to two copies of itself.
struct LiftResult {
  StarterGraph starter;
  std::vector<int> doubled;
  std::vector<int> split;
  std::uint64_t nodes = 0;
};

/// Every partition (as a mask over the non-infinity cycles of h, true =
/// doubled) under which f has the doubled cycle structure of h:
/// [2*l_inf - 1] u [2*l_i : doubled] u [l_j, l_j : split].
inline std::vector<std::vector<bool>> doubling_partitions(const StarterGraph& h, const StarterGraph& f) {
  int inf_len = 0;
  std::vector<int> rest;
  for (const Cycle& c : h.cycles) {
    bool has_inf = std::find(c.begin(), c.end(), kInfinity) != c.end();
    if (has_inf) {
      inf_len = static_cast<int>(c.size());
    } else {
      rest.push_back(static_cast<int>(c.size()));
    }
  }
  const CycleType target = starter_cycle_type(f);
  std::vector<std::vector<bool>> out;
  const size_t t = rest.size();
  if (t > 20) throw PreconditionError("too many cycles to enumerate partitions");
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    std::vector<int> lengths{2 * inf_len - 1};
    std::vector<bool> part(t);
    for (size_t j = 0; j < t; ++j) {
      part[j] = (mask >> j) & 1u;
      if (part[j]) {
        lengths.push_back(2 * rest[j]);
      } else {
        lengths.push_back(rest[j]);
        lengths.push_back(rest[j]);
      }
    }
    if (CycleType::from_lengths(lengths, 1) == target) out.push_back(std::move(part));
  }
  return out;
}

/// Doubles a twofold 2-starter h of Z_n into a 2-starter of Z_{2n} fixed by
/// the involution n. Every edge of h gets a lift bit (x -> y or x -> y+n);
/// the search backtracks over these bits, keeping each lifted difference at
/// multiplicity at most two, and returns the lexicographically least
/// assignment.
inline LiftResult doubling_lift(const StarterGraph& h, const SearchBudget& budget = {}) {
  if (!h.group.is_cyclic()) throw PreconditionError("doubling lift is implemented for cyclic groups");
  StarterClass cls = classify_starter(h);
  if (!cls.twofold()) throw PreconditionError("doubling lift needs a twofold 2-starter: " + cls.reason);
  const int n = h.group.order();
  const int m2 = 2 * n;

  // Path through the infinity cycle, starting after infinity.
  std::vector<int> path;
  std::vector<Cycle> others;
  for (const Cycle& c : h.cycles) {
    auto it = std::find(c.begin(), c.end(), kInfinity);
    if (it == c.end()) {
      others.push_back(c);
      continue;
    }
    size_t pos = static_cast<size_t>(it - c.begin());
    for (size_t k = 1; k < c.size(); ++k) path.push_back(c[(pos + k) % c.size()]);
  }

  struct Var {
    int x, y;
  };
  std::vector<Var> vars;
  for (size_t k = 0; k + 1 < path.size(); ++k) vars.push_back({path[k], path[k + 1]});
  std::vector<size_t> cycle_start;
  for (const Cycle& c : others) {
    cycle_start.push_back(vars.size());
    for (size_t k = 0; k < c.size(); ++k) vars.push_back({c[k], c[(k + 1) % c.size()]});
  }

  std::vector<int> count(static_cast<size_t>(m2), 0);
  count[static_cast<size_t>(n)] = 2;  // the edge {a, a+n} closing the lifted infinity path
  std::vector<int> bits(vars.size(), 0);
  BudgetMeter meter(budget);
  auto diff = [&](size_t k, int s) { return ((vars[k].y + s * n - vars[k].x) % m2 + m2) % m2; };

  std::function<bool(size_t)> assign = [&](size_t k) -> bool {
    if (k == vars.size()) return true;
    if (!meter.tick()) return false;
    for (int s = 0; s <= 1; ++s) {
      int d = diff(k, s);
      int nd = (m2 - d) % m2;
      if (count[static_cast<size_t>(d)] + 2 > 2 || count[static_cast<size_t>(nd)] + 2 > 2) continue;
      count[static_cast<size_t>(d)] += 2;
      count[static_cast<size_t>(nd)] += 2;
      bits[k] = s;
      if (assign(k + 1)) return true;
      count[static_cast<size_t>(d)] -= 2;
      count[static_cast<size_t>(nd)] -= 2;
      if (meter.broken()) return false;
    }
    return false;
  };
  if (!assign(0)) {
    throw ConstructionError(meter.broken() ? "doubling lift: search budget exhausted"
                               : "doubling lift: no lift exists (unexpected for a twofold 2-starter)");
  }

  LiftResult out;
  out.nodes = meter.nodes();
  out.starter.group = FiniteAbelianGroup::cyclic(m2);
  auto shift = [&](int x) { return (x + n) % m2; };

  // Infinity cycle: inf, path, path + n reversed.
  Cycle inf_cycle{kInfinity};
  std::vector<int> lifted{path[0]};
  int parity = 0;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    parity ^= bits[k];
    lifted.push_back(path[k + 1] + parity * n);
  }
  inf_cycle.insert(inf_cycle.end(), lifted.begin(), lifted.end());
  for (size_t k = lifted.size(); k-- > 0;) inf_cycle.push_back(shift(lifted[k]));
  out.starter.cycles.push_back(std::move(inf_cycle));

  for (size_t j = 0; j < others.size(); ++j) {
    const Cycle& c = others[j];
    std::vector<int> lift{c[0]};
    int p = 0;
    for (size_t k = 0; k + 1 < c.size(); ++k) {
      p ^= bits[cycle_start[j] + k];
      lift.push_back(c[k + 1] + p * n);
    }
    int total = p ^ bits[cycle_start[j] + c.size() - 1];
    if (total) {
      Cycle big = lift;
      for (int x : lift) big.push_back(shift(x));
      out.starter.cycles.push_back(std::move(big));
      out.doubled.push_back(static_cast<int>(j));
    } else {
      Cycle second;
      for (int x : lift) second.push_back(shift(x));
      out.starter.cycles.push_back(lift);
      out.starter.cycles.push_back(std::move(second));
      out.split.push_back(static_cast<int>(j));
    }
  }

  StarterClass got = classify_starter(out.starter);
  if (got.kind != StarterKind::TwoStarter || got.involution != n) {
    throw ConstructionError("doubling lift produced " + std::string(to_string(got.kind)) +
                            (got.reason.empty() ? "" : ": " + got.reason));
  }
  return out;
}

}  // namespace owf
