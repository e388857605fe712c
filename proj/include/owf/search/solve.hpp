#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/search/budget.hpp"
#include "owf/verify.hpp"

namespace owf {

struct SolveOptions {
  /// Isomorph rejection: canonical first factor on fully symmetric hosts and
  /// ordering of same-type factors. Turning it off keeps the search complete
  /// but slower; useful as a differential check.
  bool symmetry_breaking = true;
};

namespace detail {

class FactorizationSolver {
 public:
  FactorizationSolver(const GraphSpec& spec, std::vector<CycleType> types, const SearchBudget& budget,
                      SolveOptions opts)
      : spec_(spec), types_(std::move(types)), meter_(budget), opts_(opts) {
    n_ = spec.num_vertices();
    mult_.assign(static_cast<size_t>(n_ * n_), 0);
    for (const auto& [e, m] : spec.edges()) {
      at(e.u, e.v) += m;
      at(e.v, e.u) += m;
      if (m > 1) multigraph_ = true;
    }
    std::sort(types_.begin(), types_.end(), std::greater<>());
    for (const CycleType& t : types_) {
      std::vector<int> lens = t.lengths();
      std::sort(lens.begin(), lens.end(), std::greater<>());
      remaining_.push_back(lens);
    }
    min_nb_.assign(types_.size(), -1);
    covered_.assign(static_cast<size_t>(n_), 0);
  }

  std::optional<std::vector<TwoFactor>> run() {
    size_t first = 0;
    if (opts_.symmetry_breaking && !types_.empty() &&
        (spec_.get_if<CompleteOdd>() || spec_.get_if<LambdaComplete>())) {
      // Any factor of the first type can be relabelled to consecutive cycles.
      TwoFactor f;
      int next = 0;
      std::vector<int> lens = types_[0].lengths();
      for (int len : lens) {
        Cycle c;
        for (int k = 0; k < len; ++k) c.push_back(next++);
        for (const Edge& e : cycle_edges(c)) {
          --at(e.u, e.v);
          --at(e.v, e.u);
        }
        f.cycles.push_back(std::move(c));
      }
      min_nb_[0] = 1;
      factors_.push_back(std::move(f));
      first = 1;
    }
    if (solve_factor(first)) return factors_;
    return std::nullopt;
  }

  const BudgetMeter& meter() const { return meter_; }

 private:
  int& at(int u, int v) { return mult_[static_cast<size_t>(u * n_ + v)]; }

  bool solve_factor(size_t fi) {
    if (fi == types_.size()) return true;
    std::fill(covered_.begin(), covered_.end(), 0);
    factors_.emplace_back();
    if (next_cycle(fi)) return true;
    factors_.pop_back();
    return false;
  }

  bool next_cycle(size_t fi) {
    int anchor = -1;
    for (int x = 0; x < n_; ++x) {
      if (!covered_[static_cast<size_t>(x)]) {
        anchor = x;
        break;
      }
    }
    if (anchor < 0) {
      auto saved = covered_;
      if (solve_factor(fi + 1)) return true;
      covered_ = std::move(saved);
      return false;
    }
    std::vector<int>& lens = remaining_[fi];
    for (size_t k = 0; k < lens.size(); ++k) {
      if (k > 0 && lens[k] == lens[k - 1]) continue;
      int len = lens[k];
      lens.erase(lens.begin() + static_cast<long>(k));
      path_.assign(1, anchor);
      covered_[static_cast<size_t>(anchor)] = 1;
      bool ok = extend(fi, len);
      covered_[static_cast<size_t>(anchor)] = 0;
      lens.insert(lens.begin() + static_cast<long>(k), len);
      if (ok) return true;
      if (meter_.broken()) return false;
    }
    return false;
  }

  bool same_type_as_previous(size_t fi) const { return fi > 0 && types_[fi] == types_[fi - 1]; }

  bool extend(size_t fi, int len) {
    if (!meter_.tick()) return false;
    const int anchor = path_.front();
    const int tip = path_.back();
    if (static_cast<int>(path_.size()) == len) {
      if (at(tip, anchor) < 1) return false;
      if (len >= 3 && path_[1] > tip) return false;
      --at(tip, anchor);
      --at(anchor, tip);
      Cycle c = path_;
      factors_.back().cycles.push_back(c);
      bool ok = feasible() && next_cycle(fi);
      if (!ok) factors_.back().cycles.pop_back();
      ++at(tip, anchor);
      ++at(anchor, tip);
      if (ok) return true;
      path_ = std::move(c);
      return false;
    }
    const bool last_step = static_cast<int>(path_.size()) == len - 1;
    for (int w = 0; w < n_; ++w) {
      if (covered_[static_cast<size_t>(w)] || at(tip, w) < 1) continue;
      if (path_.size() == 1) {
        if (opts_.symmetry_breaking && anchor == 0 && same_type_as_previous(fi)) {
          int prev = min_nb_[fi - 1];
          if (multigraph_ ? w < prev : w <= prev) continue;
        }
      } else if (last_step && len >= 3 && w < path_[1]) {
        continue;
      }
      --at(tip, w);
      --at(w, tip);
      covered_[static_cast<size_t>(w)] = 1;
      path_.push_back(w);
      if (path_.size() == 2 && anchor == 0) min_nb_[fi] = w;
      bool ok = feasible() && extend(fi, len);
      path_.pop_back();
      covered_[static_cast<size_t>(w)] = 0;
      ++at(tip, w);
      ++at(w, tip);
      if (ok) return true;
      if (meter_.broken()) return false;
    }
    return false;
  }

  // Every vertex still to be placed in this factor needs two edge ends
  // towards vertices it could still be joined to.
  bool feasible() {
    const int anchor = path_.empty() ? -1 : path_.front();
    const int tip = path_.empty() ? -1 : path_.back();
    for (int w = 0; w < n_; ++w) {
      if (covered_[static_cast<size_t>(w)]) continue;
      int ends = 0;
      for (int u = 0; u < n_ && ends < 2; ++u) {
        if (u == w) continue;
        if (!covered_[static_cast<size_t>(u)] || u == anchor || u == tip) ends += std::min(at(w, u), 2);
      }
      if (ends < 2) return false;
    }
    return true;
  }

  const GraphSpec& spec_;
  std::vector<CycleType> types_;
  BudgetMeter meter_;
  SolveOptions opts_;
  int n_ = 0;
  bool multigraph_ = false;
  std::vector<int> mult_;
  std::vector<std::vector<int>> remaining_;
  std::vector<int> min_nb_;
  std::vector<char> covered_;
  std::vector<int> path_;
  std::vector<TwoFactor> factors_;
};

}  // namespace detail

/// Exact backtracking search for a 2-factorization of `spec` whose factors
/// have the given types (one entry per factor). ProvedNone means the whole
/// canonical search tree was explored.
inline SearchOutcome<FactorizationCert> solve_exhaustive(const GraphSpec& spec, std::vector<CycleType> types,
                                                         const SearchBudget& budget = {},
                                                         SolveOptions opts = {}) {
  if (spec.degree() % 2 != 0 || static_cast<int>(types.size()) != spec.degree() / 2) {
    throw PreconditionError("host " + spec.describe() + " needs " + std::to_string(spec.degree() / 2) +
                            " factors, got " + std::to_string(types.size()) + " types");
  }
  for (const CycleType& t : types) {
    if (t.order() != spec.num_vertices()) {
      throw PreconditionError("type " + t.to_string() + " has order " + std::to_string(t.order()) +
                              ", host has " + std::to_string(spec.num_vertices()) + " vertices");
    }
  }
  detail::FactorizationSolver solver(spec, std::move(types), budget, opts);
  auto factors = solver.run();
  std::optional<FactorizationCert> cert;
  if (factors) {
    cert = make_cert(spec, std::move(*factors));
    VerifyReport r = verify_certificate(*cert);
    if (!r.ok()) throw ConstructionError("solver produced an invalid certificate: " + r.violations[0].detail);
  }
  return solver.meter().finish(std::move(cert));
}

}  // namespace owf
