#pragma once

#include <functional>
#include <vector>

#include "owf/construct/haggkvist.hpp"
#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/verify.hpp"

namespace owf {

/// Replaces every vertex of a uniform C_g-factorization of K_m[z] by n
/// copies. Each g-cycle becomes a C_g[n] block, written as g consecutive
/// groups of n vertices, so the result is a block certificate on
/// K_m[nz] with block size n. Vertex p*z + k maps to p*nz + k*n + c.
inline FactorizationCert blowup(const FactorizationCert& cert, int n) {
  const auto* eq = cert.host.get_if<Equipartite>();
  if (!eq) throw PreconditionError("blow-up needs an equipartite host, got " + cert.host.describe());
  if (n < 1) throw PreconditionError("blow-up factor must be >= 1");
  if (cert.block_size != 1) throw PreconditionError("blow-up input must be an ordinary certificate");
  VerifyReport r = verify_certificate(cert);
  if (!r.ok()) throw PreconditionError("blow-up input does not verify: " + r.violations[0].detail);
  int g = 0;
  for (const TwoFactor& f : cert.factors) {
    CycleType t = cycle_type_of(f);
    if (!t.is_uniform() || (g != 0 && t.min_length() != g)) {
      throw PreconditionError("blow-up input must be a uniform C_g-factorization");
    }
    g = t.min_length();
  }
  if (n == 1) return cert;
  const int z = eq->part_size;
  auto copy = [&](int u, int c) { return (u / z) * n * z + (u % z) * n + c; };
  FactorizationCert out;
  out.host = GraphSpec::equipartite(eq->parts, n * z);
  out.block_size = n;
  for (const TwoFactor& f : cert.factors) {
    TwoFactor blocks;
    for (const Cycle& cyc : f.cycles) {
      Cycle b;
      for (int u : cyc) {
        for (int c = 0; c < n; ++c) b.push_back(copy(u, c));
      }
      blocks.cycles.push_back(std::move(b));
    }
    out.factors.push_back(std::move(blocks));
    out.claimed_types.push_back(cycle_type_of(f));
  }
  VerifyReport rb = verify_certificate(out);
  if (!rb.ok()) throw ConstructionError("blow-up failed block verification: " + rb.violations[0].detail);
  return out;
}

/// Turns a block certificate of C_g[2] blocks into an ordinary one: every
/// block is split into two factors of the bipartite type chosen by
/// `block_type(g)` (default a single 2g-cycle), giving twice as many factors.
inline FactorizationCert split_doubled_blocks(const FactorizationCert& cert,
                                              const std::function<CycleType(int)>& block_type = {}) {
  if (cert.block_size != 2) throw PreconditionError("expected a block certificate with block size 2");
  VerifyReport r = verify_certificate(cert);
  if (!r.ok()) throw PreconditionError("block certificate does not verify: " + r.violations[0].detail);
  std::vector<TwoFactor> factors;
  for (const TwoFactor& f : cert.factors) {
    TwoFactor a;
    TwoFactor b;
    for (const Cycle& block : f.cycles) {
      const int g = static_cast<int>(block.size()) / 2;
      CycleType t = block_type ? block_type(g) : CycleType::uniform(2 * g, 1);
      DoubledPair p = haggkvist_double(g, t);
      auto place = [&](const TwoFactor& src, TwoFactor& dst) {
        for (const Cycle& c : src.cycles) {
          Cycle mapped;
          for (int x : c) mapped.push_back(block[static_cast<size_t>(x)]);
          dst.cycles.push_back(std::move(mapped));
        }
      };
      place(p.first, a);
      place(p.second, b);
    }
    factors.push_back(std::move(a));
    factors.push_back(std::move(b));
  }
  FactorizationCert out = make_cert(cert.host, std::move(factors));
  VerifyReport ro = verify_certificate(out);
  if (!ro.ok()) throw ConstructionError("split certificate does not verify: " + ro.violations[0].detail);
  return out;
}

}  // namespace owf
