#pragma once

#include <string>
#include <vector>

#include "owf/factor.hpp"

namespace owf {

enum class ViolationCode {
  EdgeNotInHost,
  EdgeMultiplicity,
  NotSpanning,
  NotTwoRegular,
  TypeMismatch,
  CountMismatch,
};

inline const char* to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::EdgeNotInHost: return "EDGE_NOT_IN_HOST";
    case ViolationCode::EdgeMultiplicity: return "EDGE_MULTIPLICITY";
    case ViolationCode::NotSpanning: return "NOT_SPANNING";
    case ViolationCode::NotTwoRegular: return "NOT_2_REGULAR";
    case ViolationCode::TypeMismatch: return "TYPE_MISMATCH";
    case ViolationCode::CountMismatch: return "COUNT_MISMATCH";
  }
  return "UNKNOWN";
}

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool has(ViolationCode c) const {
    for (const auto& v : violations) {
      if (v.code == c) return true;
    }
    return false;
  }

  void add(ViolationCode c, std::string detail) { violations.push_back({c, std::move(detail)}); }
};

namespace detail {

inline std::string edge_str(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

/// Checks one factor against the host's edge counter. Appends violations and
/// the factor's edges to `used`.
inline void check_factor(const GraphSpec& host, const EdgeCounter& host_edges, const TwoFactor& f,
                         const std::string& where, VerifyReport& report, EdgeCounter* used) {
  const int n = host.num_vertices();
  std::vector<int> seen(static_cast<size_t>(n), 0);
  EdgeCounter mine;
  for (size_t ci = 0; ci < f.cycles.size(); ++ci) {
    const Cycle& c = f.cycles[ci];
    bool in_range = true;
    for (int x : c) {
      if (x < 0 || x >= n) {
        report.add(ViolationCode::NotSpanning,
                   where + "cycle " + std::to_string(ci) + " has vertex " + std::to_string(x) +
                       " outside the host");
        in_range = false;
      } else if (++seen[static_cast<size_t>(x)] == 2) {
        report.add(ViolationCode::NotTwoRegular,
                   where + "vertex " + std::to_string(x) + " appears more than once");
      }
    }
    if (c.size() < 2) {
      report.add(ViolationCode::NotTwoRegular,
                 where + "cycle " + std::to_string(ci) + " has fewer than 2 vertices");
      continue;
    }
    if (!in_range) continue;
    for (const Edge& e : cycle_edges(c)) {
      if (e.u == e.v) {
        report.add(ViolationCode::NotTwoRegular, where + "loop at " + std::to_string(e.u));
        continue;
      }
      ++mine[e.key()];
    }
  }
  for (int x = 0; x < n; ++x) {
    if (seen[static_cast<size_t>(x)] == 0) {
      report.add(ViolationCode::NotSpanning, where + "vertex " + std::to_string(x) + " not covered");
    }
  }
  for (const auto& [key, count] : mine) {
    Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
    auto it = host_edges.find(key);
    if (it == host_edges.end()) {
      report.add(ViolationCode::EdgeNotInHost, where + "edge " + edge_str(e) + " not in host");
    } else if (count > it->second) {
      // A digon over a simple edge: the factor is not a 2-regular subgraph.
      report.add(count == 2 && it->second == 1 ? ViolationCode::NotTwoRegular
                                               : ViolationCode::EdgeMultiplicity,
                 where + "edge " + edge_str(e) + " used " + std::to_string(count) +
                     " times, host multiplicity " + std::to_string(it->second));
    }
    if (used) (*used)[key] += count;
  }
}

inline VerifyReport verify_blocks(const FactorizationCert& cert) {
  VerifyReport report;
  const GraphSpec& host = cert.host;
  const int n = host.num_vertices();
  const int bs = cert.block_size;
  EdgeCounter host_edges = to_counter(host.edges());
  EdgeCounter used;
  if (host.degree() % (2 * bs) != 0 ||
      static_cast<int>(cert.factors.size()) != host.degree() / (2 * bs)) {
    report.add(ViolationCode::CountMismatch,
               "expected " + std::to_string(host.degree() / (2 * bs)) + " block factors, got " +
                   std::to_string(cert.factors.size()));
  }
  if (cert.claimed_types.size() != cert.factors.size()) {
    report.add(ViolationCode::CountMismatch, "claimed type count differs from factor count");
  }
  for (size_t fi = 0; fi < cert.factors.size(); ++fi) {
    const std::string where = "factor " + std::to_string(fi) + ": ";
    std::vector<int> seen(static_cast<size_t>(n), 0);
    std::vector<int> base_lengths;
    EdgeCounter mine;
    for (const Cycle& block : cert.factors[fi].cycles) {
      if (block.size() % static_cast<size_t>(bs) != 0 || block.size() / bs < 3) {
        report.add(ViolationCode::NotTwoRegular, where + "block size not a multiple of the blow-up");
        continue;
      }
      const int g = static_cast<int>(block.size()) / bs;
      base_lengths.push_back(g);
      bool in_range = true;
      for (int x : block) {
        if (x < 0 || x >= n) {
          report.add(ViolationCode::NotSpanning, where + "vertex " + std::to_string(x) + " outside host");
          in_range = false;
        } else if (++seen[static_cast<size_t>(x)] == 2) {
          report.add(ViolationCode::NotTwoRegular, where + "vertex " + std::to_string(x) + " repeated");
        }
      }
      if (!in_range) continue;
      for (int i = 0; i < g; ++i) {
        int j = (i + 1) % g;
        for (int a = 0; a < bs; ++a) {
          for (int b = 0; b < bs; ++b) {
            ++mine[Edge(block[static_cast<size_t>(i * bs + a)], block[static_cast<size_t>(j * bs + b)]).key()];
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      if (!seen[static_cast<size_t>(x)]) {
        report.add(ViolationCode::NotSpanning, where + "vertex " + std::to_string(x) + " not covered");
      }
    }
    for (const auto& [key, count] : mine) {
      auto it = host_edges.find(key);
      Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
      if (it == host_edges.end()) {
        report.add(ViolationCode::EdgeNotInHost, where + "edge " + edge_str(e) + " not in host");
      } else if (count > it->second) {
        report.add(ViolationCode::EdgeMultiplicity, where + "edge " + edge_str(e) + " overused");
      }
      used[key] += count;
    }
    if (fi < cert.claimed_types.size()) {
      CycleType got = CycleType::from_lengths(base_lengths, 1);
      if (!(got == cert.claimed_types[fi])) {
        report.add(ViolationCode::TypeMismatch, where + "block type " + got.to_string() +
                                                    " but claimed " + cert.claimed_types[fi].to_string());
      }
    }
  }
  for (const auto& [key, count] : used) {
    auto it = host_edges.find(key);
    if (it != host_edges.end() && count > it->second) {
      Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
      report.add(ViolationCode::EdgeMultiplicity,
                 "edge " + edge_str(e) + " covered " + std::to_string(count) + " times");
    }
  }
  for (const auto& [key, mult] : host_edges) {
    auto it = used.find(key);
    int got = it == used.end() ? 0 : it->second;
    if (got < mult) {
      Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
      report.add(ViolationCode::EdgeMultiplicity,
                 "host edge " + edge_str(e) + " covered " + std::to_string(got) + " of " +
                     std::to_string(mult) + " times");
    }
  }
  return report;
}

}  // namespace detail

/// Checks that `f` is a spanning 2-regular subgraph of the host.
inline VerifyReport verify_two_factor(const GraphSpec& spec, const TwoFactor& f) {
  VerifyReport report;
  EdgeCounter host_edges = to_counter(spec.edges());
  detail::check_factor(spec, host_edges, f, "", report, nullptr);
  return report;
}

/// Exact check of a claimed factorization: the factors are spanning
/// 2-regular subgraphs, their edge multisets add up to the host's, each has
/// its claimed type and there are degree/2 of them. Every violation is
/// reported, not just the first.
inline VerifyReport verify_certificate(const FactorizationCert& cert) {
  if (cert.block_size > 1) return detail::verify_blocks(cert);
  VerifyReport report;
  const GraphSpec& host = cert.host;
  if (cert.block_size < 1) report.add(ViolationCode::CountMismatch, "block size must be >= 1");
  EdgeCounter host_edges = to_counter(host.edges());
  if (host.degree() % 2 != 0 || static_cast<int>(cert.factors.size()) != host.degree() / 2) {
    report.add(ViolationCode::CountMismatch,
               "host degree " + std::to_string(host.degree()) + " needs " +
                   std::to_string(host.degree() / 2) + " factors, got " +
                   std::to_string(cert.factors.size()));
  }
  if (cert.claimed_types.size() != cert.factors.size()) {
    report.add(ViolationCode::CountMismatch, "claimed type count " +
                                                 std::to_string(cert.claimed_types.size()) +
                                                 " differs from factor count " +
                                                 std::to_string(cert.factors.size()));
  }
  EdgeCounter used;
  used.reserve(host_edges.size() * 2);
  for (size_t fi = 0; fi < cert.factors.size(); ++fi) {
    const std::string where = "factor " + std::to_string(fi) + ": ";
    detail::check_factor(host, host_edges, cert.factors[fi], where, report, &used);
    if (fi < cert.claimed_types.size()) {
      CycleType got = cycle_type_of(cert.factors[fi]);
      if (!(got == cert.claimed_types[fi])) {
        report.add(ViolationCode::TypeMismatch,
                   where + "type " + got.to_string() + " but claimed " + cert.claimed_types[fi].to_string());
      }
    }
  }
  for (const auto& [key, count] : used) {
    auto it = host_edges.find(key);
    if (it != host_edges.end() && count > it->second) {
      Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
      report.add(ViolationCode::EdgeMultiplicity, "edge " + detail::edge_str(e) + " covered " +
                                                      std::to_string(count) + " times, host has " +
                                                      std::to_string(it->second));
    }
  }
  for (const auto& [key, mult] : host_edges) {
    auto it = used.find(key);
    int got = it == used.end() ? 0 : it->second;
    if (got < mult) {
      Edge e(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu));
      report.add(ViolationCode::EdgeMultiplicity, "host edge " + detail::edge_str(e) + " covered " +
                                                      std::to_string(got) + " of " +
                                                      std::to_string(mult) + " times");
    }
  }
  return report;
}

}  // namespace owf
