#pragma once

#include <algorithm>
#include <vector>

#include "owf/factor.hpp"
#include "owf/group.hpp"
#include "owf/verify.hpp"

namespace owf {

/// |S| x g matrix over a finite abelian group whose columns are each a
/// permutation of S.
struct RowSumMatrix {
  FiniteAbelianGroup group;
  std::vector<int> connection;         // S
  int g = 2;
  std::vector<std::vector<int>> rows;  // |S| rows of g entries

  bool operator==(const RowSumMatrix&) const = default;
};

inline void validate(const RowSumMatrix& m) {
  if (m.g < 2) throw PreconditionError("row-sum matrix needs g >= 2");
  if (m.connection.empty()) throw PreconditionError("row-sum matrix needs a nonempty S");
  std::vector<int> s = m.connection;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw PreconditionError("S has repeated elements");
  for (int d : s) {
    if (!m.group.contains(d)) throw PreconditionError("S element outside the group");
  }
  if (m.rows.size() != s.size()) throw PreconditionError("row-sum matrix must have |S| rows");
  for (const auto& row : m.rows) {
    if (static_cast<int>(row.size()) != m.g) throw PreconditionError("row-sum matrix rows must have g entries");
  }
  for (int col = 0; col < m.g; ++col) {
    std::vector<int> c;
    for (const auto& row : m.rows) c.push_back(row[static_cast<size_t>(col)]);
    std::sort(c.begin(), c.end());
    if (c != s) throw PreconditionError("column " + std::to_string(col) + " is not a permutation of S");
  }
}

inline int row_sum(const RowSumMatrix& m, size_t r) {
  int acc = 0;
  for (int x : m.rows[r]) acc = m.group.add(acc, x);
  return acc;
}

/// Orders of the row sums, row by row.
inline std::vector<int> row_sum_orders(const RowSumMatrix& m) {
  std::vector<int> out;
  for (size_t r = 0; r < m.rows.size(); ++r) out.push_back(m.group.element_order(row_sum(m, r)));
  return out;
}

/// One 2-factor of C_g[group, S] per row: row r joins (i, x) to
/// (i+1, x + m[r][i]), so every cycle of that factor has length
/// g * ord(row sum). Together the factors partition the host.
inline FactorizationCert rsm_apply(const RowSumMatrix& m) {
  validate(m);
  const int ord = m.group.order();
  GraphSpec host = GraphSpec::blown_cycle(m.g, m.group, m.connection);
  std::vector<TwoFactor> factors;
  for (size_t r = 0; r < m.rows.size(); ++r) {
    const int expect = m.g * m.group.element_order(row_sum(m, r));
    std::vector<char> visited(static_cast<size_t>(m.g * ord), 0);
    TwoFactor f;
    for (int start = 0; start < ord; ++start) {
      if (visited[static_cast<size_t>(start)]) continue;
      Cycle c;
      int layer = 0;
      int x = start;
      do {
        visited[static_cast<size_t>(layer * ord + x)] = 1;
        c.push_back(layer * ord + x);
        x = m.group.add(x, m.rows[r][static_cast<size_t>(layer)]);
        layer = (layer + 1) % m.g;
      } while (!(layer == 0 && x == start));
      if (static_cast<int>(c.size()) != expect) {
        throw ConstructionError("row " + std::to_string(r) + " produced a cycle of length " +
                                std::to_string(c.size()) + ", expected " + std::to_string(expect));
      }
      f.cycles.push_back(std::move(c));
    }
    factors.push_back(std::move(f));
  }
  return make_cert(std::move(host), std::move(factors));
}

}  // namespace owf
