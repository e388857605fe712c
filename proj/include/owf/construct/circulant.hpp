#pragma once

#include <numeric>
#include <vector>

#include "owf/error.hpp"
#include "owf/search/hamdecomp.hpp"

namespace owf {

/// Hamilton decomposition of Circ(n; +-S). A single difference coprime to n
/// is its own Hamilton cycle; anything larger is searched.
inline std::vector<Cycle> circulant_ham_decomp(int n, std::vector<int> s, const SearchBudget& budget = {}) {
  s = normalize_circulant_set(n, std::move(s));
  if (s.size() == 1) {
    Cycle c;
    for (int k = 0; k < n; ++k) c.push_back(static_cast<int>((static_cast<long long>(k) * s[0]) % n));
    return {c};
  }
  auto r = find_ham_decomp(n, s, budget);
  if (!r.found()) {
    throw ConstructionError(std::string("Hamilton decomposition search ended with ") + to_string(r.status));
  }
  return *r.value;
}

}  // namespace owf
