#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "owf/error.hpp"
#include "owf/search/budget.hpp"
#include "owf/starter.hpp"

namespace owf {

enum class StarterGoal { Twofold, TwoStarter };

namespace detail {

/// DFS over 2-regular graphs on G u {inf} of a fixed cycle type whose
/// differences never exceed multiplicity two. The visitor returns true to
/// stop the enumeration.
class StarterEnumerator {
 public:
  StarterEnumerator(const FiniteAbelianGroup& g, const CycleType& t, bool fix_translation, BudgetMeter& meter)
      : group_(g), meter_(meter), fix_translation_(fix_translation) {
    n_ = g.order();
    lens_ = t.lengths();
    used_.assign(static_cast<size_t>(n_), 0);
    count_.assign(static_cast<size_t>(n_), 0);
  }

  bool run(const std::function<bool(const StarterGraph&)>& visit) {
    visit_ = &visit;
    // The first cycle holds infinity.
    for (size_t k = 0; k < lens_.size(); ++k) {
      if (k > 0 && lens_[k] == lens_[k - 1]) continue;
      int len = lens_[k];
      lens_.erase(lens_.begin() + static_cast<long>(k));
      path_.assign(1, kInfinity);
      bool stop = extend(len);
      lens_.insert(lens_.begin() + static_cast<long>(k), len);
      if (stop || meter_.broken()) return stop;
    }
    return false;
  }

 private:
  bool add_edge(int x, int y) {
    if (x == kInfinity || y == kInfinity) return true;
    int d = group_.sub(y, x);
    int e = group_.sub(x, y);
    if (d == e) {
      if (count_[static_cast<size_t>(d)] + 2 > 2) return false;
    } else if (count_[static_cast<size_t>(d)] + 1 > 2 || count_[static_cast<size_t>(e)] + 1 > 2) {
      return false;
    }
    ++count_[static_cast<size_t>(d)];
    ++count_[static_cast<size_t>(e)];
    return true;
  }

  void remove_edge(int x, int y) {
    if (x == kInfinity || y == kInfinity) return;
    --count_[static_cast<size_t>(group_.sub(y, x))];
    --count_[static_cast<size_t>(group_.sub(x, y))];
  }

  // Integer order with infinity first.
  static int rank(int x) { return x == kInfinity ? -1 : x; }

  bool next_cycle() {
    int anchor = -1;
    for (int x = 0; x < n_; ++x) {
      if (!used_[static_cast<size_t>(x)]) {
        anchor = x;
        break;
      }
    }
    if (anchor < 0) return (*visit_)(StarterGraph{group_, cycles_});
    for (size_t k = 0; k < lens_.size(); ++k) {
      if (k > 0 && lens_[k] == lens_[k - 1]) continue;
      int len = lens_[k];
      lens_.erase(lens_.begin() + static_cast<long>(k));
      path_.assign(1, anchor);
      used_[static_cast<size_t>(anchor)] = 1;
      bool stop = extend(len);
      used_[static_cast<size_t>(anchor)] = 0;
      lens_.insert(lens_.begin() + static_cast<long>(k), len);
      if (stop || meter_.broken()) return stop;
    }
    return false;
  }

  bool extend(int len) {
    if (!meter_.tick()) return false;
    const int anchor = path_.front();
    const int tip = path_.back();
    if (static_cast<int>(path_.size()) == len) {
      if (rank(path_[1]) > rank(tip)) return false;
      if (!add_edge(tip, anchor)) return false;
      Cycle c = path_;
      cycles_.push_back(c);
      bool stop = next_cycle();
      cycles_.pop_back();
      remove_edge(tip, anchor);
      path_ = std::move(c);
      return stop;
    }
    const bool last_step = static_cast<int>(path_.size()) == len - 1;
    for (int w = 0; w < n_; ++w) {
      if (used_[static_cast<size_t>(w)]) continue;
      if (path_.size() == 1 && anchor == kInfinity && fix_translation_ && w != 0) break;
      if (last_step && path_.size() >= 2 && rank(w) < rank(path_[1])) continue;
      if (!add_edge(tip, w)) continue;
      used_[static_cast<size_t>(w)] = 1;
      path_.push_back(w);
      bool stop = extend(len);
      path_.pop_back();
      used_[static_cast<size_t>(w)] = 0;
      remove_edge(tip, w);
      if (stop || meter_.broken()) return stop;
    }
    return false;
  }

  FiniteAbelianGroup group_;
  BudgetMeter& meter_;
  bool fix_translation_;
  int n_ = 0;
  std::vector<int> lens_;
  std::vector<char> used_;
  std::vector<int> count_;
  std::vector<int> path_;
  std::vector<Cycle> cycles_;
  const std::function<bool(const StarterGraph&)>* visit_ = nullptr;
};

inline void check_starter_order(const FiniteAbelianGroup& g, const CycleType& t) {
  if (t.order() != g.order() + 1) {
    throw PreconditionError("type " + t.to_string() + " has order " + std::to_string(t.order()) + ", expected " +
                            std::to_string(g.order() + 1));
  }
}

inline bool meets_goal(const StarterGraph& f, StarterGoal goal) {
  StarterClass c = classify_starter(f);
  return goal == StarterGoal::Twofold ? c.twofold() : c.kind == StarterKind::TwoStarter;
}

}  // namespace detail

/// First starter (in search order) of type t, up to translation.
inline SearchOutcome<StarterGraph> find_starter(const FiniteAbelianGroup& g, const CycleType& t, StarterGoal goal,
                                                const SearchBudget& budget = {}) {
  detail::check_starter_order(g, t);
  BudgetMeter meter(budget);
  std::optional<StarterGraph> found;
  detail::StarterEnumerator e(g, t, true, meter);
  e.run([&](const StarterGraph& f) {
    if (!detail::meets_goal(f, goal)) return false;
    found = f;
    return true;
  });
  return meter.finish(std::move(found));
}

/// Every labelled starter of type t meeting the goal. With
/// `up_to_translation` only those whose infinity cycle starts (inf, 0, ...)
/// are listed.
inline SearchOutcome<std::vector<StarterGraph>> enumerate_starters(const FiniteAbelianGroup& g, const CycleType& t,
                                                                   StarterGoal goal, bool up_to_translation,
                                                                   const SearchBudget& budget = {}) {
  detail::check_starter_order(g, t);
  BudgetMeter meter(budget);
  std::vector<StarterGraph> all;
  detail::StarterEnumerator e(g, t, up_to_translation, meter);
  e.run([&](const StarterGraph& f) {
    if (detail::meets_goal(f, goal)) all.push_back(f);
    return false;
  });
  SearchOutcome<std::vector<StarterGraph>> out;
  out.nodes = meter.nodes();
  out.seconds = meter.elapsed();
  out.status = meter.broken() ? SearchStatus::Exhausted : SearchStatus::Found;
  out.value = std::move(all);
  return out;
}

}  // namespace owf
