#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "owf/construct/rsm.hpp"
#include "owf/error.hpp"
#include "owf/search/budget.hpp"

namespace owf {

/// Searches for a row-sum matrix over (group, S, g) whose row-sum orders
/// form the multiset `target_orders`. Column 0 is S in the given order (row
/// permutations are free); later columns are filled row by row, and the
/// last column is pruned against the orders still to be realized. A
/// nonzero seed shuffles the candidate order.
inline SearchOutcome<RowSumMatrix> find_rsm(const FiniteAbelianGroup& group, std::vector<int> connection, int g,
                                            std::vector<int> target_orders, const SearchBudget& budget = {}) {
  if (target_orders.size() != connection.size()) {
    throw PreconditionError("need one target order per element of S (" + std::to_string(connection.size()) +
                            "), got " + std::to_string(target_orders.size()));
  }
  if (g < 2) throw PreconditionError("row-sum matrix needs g >= 2");
  RowSumMatrix m{group, connection, g, {}};
  m.rows.assign(connection.size(), std::vector<int>(static_cast<size_t>(g), 0));
  for (size_t r = 0; r < connection.size(); ++r) m.rows[r][0] = connection[r];
  {
    // The constant-row matrix checks S and g with the shared validator.
    RowSumMatrix probe = m;
    for (auto& row : probe.rows) std::fill(row.begin(), row.end(), row[0]);
    validate(probe);
  }

  const size_t k = connection.size();
  std::map<int, int> need;
  for (int w : target_orders) ++need[w];
  std::vector<int> partial(k);
  for (size_t r = 0; r < k; ++r) partial[r] = connection[r];
  std::vector<char> used(k, 0);
  std::vector<size_t> order(k);
  for (size_t j = 0; j < k; ++j) order[j] = j;
  std::mt19937_64 rng(budget.seed);
  BudgetMeter meter(budget);

  std::function<bool(int, size_t)> fill = [&](int col, size_t row) -> bool {
    if (col == g) return true;
    if (row == k) {
      std::fill(used.begin(), used.end(), 0);
      bool ok = fill(col + 1, 0);
      if (!ok) std::fill(used.begin(), used.end(), 1);
      return ok;
    }
    if (!meter.tick()) return false;
    std::vector<size_t> cand = order;
    if (budget.seed != 0) std::shuffle(cand.begin(), cand.end(), rng);
    const bool last = col == g - 1;
    for (size_t j : cand) {
      if (used[j]) continue;
      int next = group.add(partial[row], connection[j]);
      int ord = 0;
      if (last) {
        ord = group.element_order(next);
        auto it = need.find(ord);
        if (it == need.end() || it->second == 0) continue;
        --it->second;
      }
      used[j] = 1;
      int before = partial[row];
      partial[row] = next;
      m.rows[row][static_cast<size_t>(col)] = connection[j];
      bool ok = fill(col, row + 1);
      if (ok) return true;
      partial[row] = before;
      used[j] = 0;
      if (last) ++need[ord];
      if (meter.broken()) return false;
    }
    return false;
  };

  std::optional<RowSumMatrix> found;
  if (fill(1, 0)) {
    validate(m);
    std::vector<int> got = row_sum_orders(m);
    std::vector<int> want = target_orders;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) throw ConstructionError("row-sum search returned a matrix with the wrong orders");
    found = m;
  }
  return meter.finish(std::move(found));
}

}  // namespace owf
