#pragma once

#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/verify.hpp"

namespace owf {

/// Joins a 2-factorization of K_m[w] with one factorization of K_w (w odd)
/// or K_w - I (w even) per part. Part p occupies vertices p*w .. p*w+w-1.
/// The equipartite factors are kept; the j-th factors of all parts unite
/// into one spanning factor. The result factors K_{mw} or K_{mw} - I.
inline FactorizationCert compose_equipartite(const FactorizationCert& eq, const std::vector<FactorizationCert>& parts) {
  const auto* ep = eq.host.get_if<Equipartite>();
  if (!ep) throw PreconditionError("first certificate must be on an equipartite host");
  if (eq.block_size != 1) throw PreconditionError("equipartite certificate must be ordinary (split blocks first)");
  const int m = ep->parts;
  const int w = ep->part_size;
  if (static_cast<int>(parts.size()) != m) {
    throw PreconditionError("need " + std::to_string(m) + " part certificates, got " + std::to_string(parts.size()));
  }
  if (w < 3) throw PreconditionError("parts must have at least 3 vertices");
  VerifyReport r = verify_certificate(eq);
  if (!r.ok()) throw PreconditionError("equipartite certificate does not verify: " + r.violations[0].detail);
  const bool odd = w % 2 == 1;
  if (odd && m % 2 == 0) throw PreconditionError("odd parts with an even number of parts give odd degree");
  const GraphSpec part_host = odd ? GraphSpec::complete_odd(w) : GraphSpec::complete_minus_i(w);
  size_t count = 0;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (!(parts[p].host == part_host)) {
      throw PreconditionError("part " + std::to_string(p) + " must be on " + part_host.describe() + ", got " +
                              parts[p].host.describe());
    }
    VerifyReport pr = verify_certificate(parts[p]);
    if (!pr.ok()) throw PreconditionError("part " + std::to_string(p) + " does not verify: " + pr.violations[0].detail);
    if (p == 0) count = parts[p].factors.size();
    if (parts[p].factors.size() != count) throw PreconditionError("part certificates have different factor counts");
  }
  std::vector<TwoFactor> factors = eq.factors;
  for (size_t j = 0; j < count; ++j) {
    TwoFactor f;
    for (size_t p = 0; p < parts.size(); ++p) {
      const int base = static_cast<int>(p) * w;
      for (const Cycle& c : parts[p].factors[j].cycles) {
        Cycle mapped;
        for (int x : c) mapped.push_back(base + x);
        f.cycles.push_back(std::move(mapped));
      }
    }
    factors.push_back(std::move(f));
  }
  GraphSpec host = odd ? GraphSpec::complete_odd(m * w) : GraphSpec::complete_minus_i(m * w);
  FactorizationCert out = make_cert(std::move(host), std::move(factors));
  VerifyReport ro = verify_certificate(out);
  if (!ro.ok()) throw ConstructionError("composed certificate does not verify: " + ro.violations[0].detail);
  return out;
}

}  // namespace owf
