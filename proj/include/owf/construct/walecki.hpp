#pragma once

#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"

namespace owf {

/// Hamilton decomposition of K_v (v odd) or K_v - I (v even, canonical I).
///
/// The zigzag path 0, 1, -1, 2, -2, ... on Z_{2m} and its first m
/// translates partition K_{2m}; a point at infinity closes each path into a
/// Hamilton cycle of K_{2m+1}. For v = 2m+2 the middle edge of each path is
/// cut and both halves are joined through two infinite points; the cut edges
/// together with the edge between the infinite points form the missing
/// 1-factor, which a relabelling moves onto the canonical I.
inline FactorizationCert walecki(int v) {
  if (v < 3) throw PreconditionError("Walecki construction needs v >= 3");
  const bool odd = v % 2 == 1;
  const int m = odd ? (v - 1) / 2 : (v - 2) / 2;
  const int z = 2 * m;
  auto mod = [z](int x) { return ((x % z) + z) % z; };
  std::vector<int> zigzag;
  zigzag.reserve(static_cast<size_t>(z));
  zigzag.push_back(0);
  for (int k = 1; k <= m; ++k) {
    zigzag.push_back(mod(k));
    if (k < m) zigzag.push_back(mod(-k));
  }
  // Even case: x and x+m pair up under the removed 1-factor; map that pair
  // to {2x, 2x+1} and the infinite pair to {z, z+1}.
  std::vector<int> label(static_cast<size_t>(z + 2));
  for (int x = 0; x < m; ++x) {
    label[static_cast<size_t>(x)] = 2 * x;
    label[static_cast<size_t>(x + m)] = 2 * x + 1;
  }
  label[static_cast<size_t>(z)] = z;
  label[static_cast<size_t>(z + 1)] = z + 1;

  std::vector<TwoFactor> factors;
  for (int i = 0; i < m; ++i) {
    Cycle path;
    for (int p : zigzag) path.push_back(mod(p + i));
    Cycle c;
    if (odd) {
      c.push_back(z);
      c.insert(c.end(), path.begin(), path.end());
    } else {
      // Middle edge joins positions m-1 and m.
      c.push_back(label[static_cast<size_t>(z)]);
      for (int k = 0; k < m; ++k) c.push_back(label[static_cast<size_t>(path[static_cast<size_t>(k)])]);
      c.push_back(label[static_cast<size_t>(z + 1)]);
      for (int k = m; k < z; ++k) c.push_back(label[static_cast<size_t>(path[static_cast<size_t>(k)])]);
    }
    factors.push_back(TwoFactor{{std::move(c)}});
  }
  GraphSpec host = odd ? GraphSpec::complete_odd(v) : GraphSpec::complete_minus_i(v);
  return make_cert(std::move(host), std::move(factors));
}

}  // namespace owf
