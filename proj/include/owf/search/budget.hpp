#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace owf {

struct SearchBudget {
  double max_seconds = 60.0;
  std::uint64_t max_nodes = 100'000'000;
  std::uint64_t seed = 0;
};

enum class SearchStatus { Found, ProvedNone, Exhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ProvedNone: return "ProvedNone";
    case SearchStatus::Exhausted: return "Exhausted";
  }
  return "?";
}

/// Result of a bounded exact search. ProvedNone is only reported when the
/// whole search tree was explored without hitting the budget.
template <class T>
struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<T> value;
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  bool found() const { return status == SearchStatus::Found; }
};

/// Node and wall-clock accounting shared by the backtracking searches.
class BudgetMeter {
 public:
  explicit BudgetMeter(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; false once the budget is spent.
  bool tick() {
    if (broken_) return false;
    ++nodes_;
    if (nodes_ > budget_.max_nodes) {
      broken_ = true;
    } else if ((nodes_ & 0xfff) == 0 && elapsed() > budget_.max_seconds) {
      broken_ = true;
    }
    return !broken_;
  }

  bool broken() const { return broken_; }
  std::uint64_t nodes() const { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  template <class T>
  SearchOutcome<T> finish(std::optional<T> value) const {
    SearchOutcome<T> out;
    out.nodes = nodes_;
    out.seconds = elapsed();
    if (value) {
      out.status = SearchStatus::Found;
      out.value = std::move(value);
    } else {
      out.status = broken_ ? SearchStatus::Exhausted : SearchStatus::ProvedNone;
    }
    return out;
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool broken_ = false;
};

}  // namespace owf
