#pragma once

#include <vector>

#include "owf/cycle_type.hpp"
#include "owf/graph.hpp"

namespace owf {

using Cycle = std::vector<int>;

/// A spanning 2-regular subgraph given as its cycles. A 2-element cycle
/// (u, v) stands for a digon over two parallel u-v edges.
struct TwoFactor {
  std::vector<Cycle> cycles;

  bool operator==(const TwoFactor&) const = default;
};

/// Edges traversed by a closed walk, including the closing edge.
inline std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  if (c.size() < 2) return out;
  out.reserve(c.size());
  for (size_t k = 0; k < c.size(); ++k) out.emplace_back(c[k], c[(k + 1) % c.size()]);
  return out;
}

inline std::vector<Edge> factor_edges(const TwoFactor& f) {
  std::vector<Edge> out;
  for (const Cycle& c : f.cycles) {
    auto e = cycle_edges(c);
    out.insert(out.end(), e.begin(), e.end());
  }
  return out;
}

/// Cycle lengths of a factor. Two 2-regular graphs are isomorphic exactly
/// when these agree.
inline CycleType cycle_type_of(const TwoFactor& f) {
  std::vector<int> lengths;
  lengths.reserve(f.cycles.size());
  for (const Cycle& c : f.cycles) lengths.push_back(static_cast<int>(c.size()));
  return CycleType::from_lengths(lengths, 1);
}

/// Claimed factorization of `host`. With `block_size` n > 1 every entry of a
/// factor is a blown-up cycle C_g[n] written as g consecutive groups of n
/// vertices, and the claimed type describes the underlying g-cycles.
struct FactorizationCert {
  GraphSpec host;
  std::vector<TwoFactor> factors;
  std::vector<CycleType> claimed_types;
  int block_size = 1;

  bool operator==(const FactorizationCert&) const = default;
};

/// Certificate whose claimed types are read off the factors themselves.
inline FactorizationCert make_cert(GraphSpec host, std::vector<TwoFactor> factors) {
  FactorizationCert cert{std::move(host), std::move(factors), {}, 1};
  cert.claimed_types.reserve(cert.factors.size());
  for (const TwoFactor& f : cert.factors) cert.claimed_types.push_back(cycle_type_of(f));
  return cert;
}

}  // namespace owf
