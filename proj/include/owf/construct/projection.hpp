#pragma once

#include <algorithm>
#include <vector>

#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/verify.hpp"

namespace owf {

/// A directed Hamilton cycle h of K_n (a permutation of Z_n read cyclically)
/// projected onto C_g[n], shifted by `shift` layers.
struct ProjectionInput {
  std::vector<int> h;
  int g = 3;
  int shift = 0;
  bool reversed = false;
};

inline void validate(const ProjectionInput& p) {
  const int n = static_cast<int>(p.h.size());
  if (n % 2 == 0 || p.g % 2 == 0) throw PreconditionError("projection needs g and n odd");
  if (p.g < 3 || p.g > n) throw PreconditionError("projection needs 3 <= g <= n");
  std::vector<int> sorted = p.h;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < n; ++k) {
    if (sorted[static_cast<size_t>(k)] != k) throw PreconditionError("h must be a permutation of Z_n");
  }
}

/// Layer of the j-th vertex: once around Z_g, then alternating between the
/// last two layers visited. Reversed projections run the other way.
inline int projection_layer(int j, int g, int shift, bool reversed) {
  int step = j < g ? j : (j - g) % 2;
  int layer = reversed ? shift - step : shift + step;
  return ((layer % g) + g) % g;
}

/// The n-cycle of C_g[Z_n, Z_n]; vertex (layer, x) is layer * n + x.
inline Cycle project(const ProjectionInput& p) {
  validate(p);
  const int n = static_cast<int>(p.h.size());
  Cycle c;
  c.reserve(p.h.size());
  for (int j = 0; j < n; ++j) {
    c.push_back(projection_layer(j, p.g, p.shift, p.reversed) * n + p.h[static_cast<size_t>(j)]);
  }
  return c;
}

/// All g shifted projections of h: g disjoint n-cycles spanning C_g[n].
inline TwoFactor projection_factor(const std::vector<int>& h, int g, bool reversed) {
  TwoFactor f;
  for (int i = 0; i < g; ++i) f.cycles.push_back(project({h, g, i, reversed}));
  return f;
}

/// +-S as a sorted subset of Z_n.
inline std::vector<int> symmetric_closure(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int d : s) {
    int a = ((d % n) + n) % n;
    out.push_back(a);
    out.push_back((n - a) % n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// C_n-factorization of C_g[Z_n, +-S] from a Hamilton decomposition of
/// Circ(n; +-S): each Hamilton cycle contributes its forward and its
/// reversed projection factor.
inline FactorizationCert cn_factorize_blown(int g, int n, const std::vector<int>& s,
                                            const std::vector<Cycle>& hamdecomp) {
  if (n % 2 == 0 || g % 2 == 0 || g < 3 || g > n) throw PreconditionError("need g, n odd with 3 <= g <= n");
  std::vector<int> norm;
  for (int d : s) {
    int a = ((d % n) + n) % n;
    norm.push_back(std::min(a, n - a));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  if (!norm.empty() && norm.front() == 0) throw PreconditionError("projections cannot realize difference 0");
  std::vector<TwoFactor> hams;
  for (const Cycle& c : hamdecomp) hams.push_back(TwoFactor{{c}});
  VerifyReport r = verify_certificate(make_cert(GraphSpec::circulant(n, norm), hams));
  if (!r.ok()) throw PreconditionError("invalid Hamilton decomposition: " + r.violations[0].detail);

  std::vector<TwoFactor> factors;
  for (const Cycle& c : hamdecomp) {
    factors.push_back(projection_factor(c, g, false));
    factors.push_back(projection_factor(c, g, true));
  }
  GraphSpec host = GraphSpec::blown_cycle(g, FiniteAbelianGroup::cyclic(n), symmetric_closure(n, norm));
  return make_cert(std::move(host), std::move(factors));
}

}  // namespace owf
