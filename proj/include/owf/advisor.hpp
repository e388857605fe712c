#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "owf/cycle_type.hpp"
#include "owf/error.hpp"
#include "owf/graph.hpp"

namespace owf {

enum class ProblemKind { OP, HWP, GOP };

inline const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::OP: return "OP";
    case ProblemKind::HWP: return "HWP";
    case ProblemKind::GOP: return "GOP";
  }
  return "?";
}

struct FactorClass {
  CycleType type;
  int multiplicity = 1;

  bool operator==(const FactorClass&) const = default;
};

struct ProblemInstance {
  ProblemKind kind = ProblemKind::OP;
  GraphSpec host;
  std::vector<FactorClass> factors;
};

enum class VerdictKind { Exists, NotExists, Unknown };

inline const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Exists: return "Exists";
    case VerdictKind::NotExists: return "NotExists";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string rule;      // empty for Unknown
  std::string citation;  // theorem and clause
  std::vector<std::string> nearest_rules;  // rules whose exception clauses matched
};

// ---------------------------------------------------------------------------
// Number theory helpers

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

inline long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

inline long long pow_mod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * b % m);
    b = static_cast<long long>(static_cast<__int128>(b) * b % m);
    e >>= 1;
  }
  return r;
}

inline long long primitive_root(long long p) {
  std::vector<long long> factors;
  long long phi = p - 1;
  long long x = phi;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      factors.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) factors.push_back(x);
  for (long long g = 2; g < p; ++g) {
    bool ok = true;
    for (long long q : factors) ok = ok && pow_mod(g, phi / q, p) != 1;
    if (ok) return g;
  }
  return 1;
}

/// Saturating 7^e * c; negative exponents give 0.
inline long long seven_power_times(int e, long long c) {
  if (e < 0) return 0;
  long double r = static_cast<long double>(c);
  for (int k = 0; k < e; ++k) r *= 7;
  return r > 4e18L ? static_cast<long long>(4e18) : static_cast<long long>(r);
}

// ---------------------------------------------------------------------------
// Predicates exposed on their own

/// Existence of a C_g-factorization of K_m[z]; "even when m = 2" applies to g.
inline bool liu_exists(int g, int m, int z) {
  if (g < 3 || m < 2 || z < 1) throw PreconditionError("liu_exists needs g >= 3, m >= 2, z >= 1");
  if ((static_cast<long long>(m) * z) % g != 0) return false;
  if (((m - 1) * static_cast<long long>(z)) % 2 != 0) return false;
  if (m == 2 && g % 2 != 0) return false;
  const int bad[4][3] = {{3, 3, 2}, {3, 6, 2}, {3, 3, 6}, {6, 2, 6}};
  for (const auto& b : bad) {
    if (g == b[0] && m == b[1] && z == b[2]) return false;
  }
  return true;
}

namespace detail {

inline bool coprime(long long a, long long n) { return std::gcd(a, n) == 1; }

inline std::uint64_t bit(int x) { return std::uint64_t{1} << (x - 1); }

inline std::uint64_t interval_mask(int a, int b) {
  std::uint64_t m = 0;
  for (int x = a; x <= b; ++x) m |= bit(x);
  return m;
}

/// Every block of the seven circulant shapes lying inside `s`, over
/// [1, k] with k = (n-1)/2.
inline std::vector<std::uint64_t> eligible_blocks(int n, std::uint64_t s) {
  const int k = (n - 1) / 2;
  std::unordered_set<std::uint64_t> out;
  auto add = [&](std::uint64_t m) {
    if (m != 0 && (m & ~s) == 0) out.insert(m);
  };
  std::vector<int> units;
  for (int x = 1; x <= k; ++x) {
    if (coprime(x, n)) units.push_back(x);
  }
  for (int a : units) add(bit(a));                              // {a}
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      if (std::gcd(std::gcd(a, b), n) == 1) add(bit(a) | bit(b));  // {a, b}
    }
  }
  for (int a = 1; a <= k; ++a) {
    for (int b = a; b <= k; ++b) {
      const std::uint64_t iv = interval_mask(a, b);
      if (__builtin_popcountll(iv & ~s) > 1) continue;
      if ((b - a + 1) % 2 == 0) add(iv);                          // [a, b], even size
      for (int x : units) {
        if (!(iv & bit(x))) add(iv | bit(x));                     // [a, b] u {x}
      }
      if ((b - a) % 2 == 0) {
        for (int y = a; y <= b; ++y) {
          const std::uint64_t holed = iv & ~bit(y);
          add(holed);                                             // [a, b] \ {y}
          for (int x : units) {
            if (!(holed & bit(x))) add(holed | bit(x));           // ([a, b] \ {y}) u {x}
          }
        }
      }
    }
  }
  for (int b = 2; b <= k; ++b) {
    for (int z = 1; z < b; ++z) {
      if (coprime(b - z, n)) add(bit(z) | interval_mask(b, k));   // {z} u [b, k]
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace detail

/// Whether S (a subset of [1, (n-1)/2]) splits into blocks for which
/// C_g[Z_n, +-S] is known to have a C_n-factorization.
inline bool s_eligible(int n, const std::vector<int>& s) {
  if (n < 3 || n % 2 == 0) throw PreconditionError("s_eligible needs odd n >= 3");
  const int k = (n - 1) / 2;
  if (k > 64) throw PreconditionError("s_eligible supports n <= 129");
  std::uint64_t mask = 0;
  for (int d : s) {
    if (d < 1 || d > k) throw PreconditionError("S must lie in [1, (n-1)/2]");
    mask |= detail::bit(d);
  }
  if (mask == 0) return false;
  const auto blocks = detail::eligible_blocks(n, mask);
  std::unordered_set<std::uint64_t> dead;
  std::function<bool(std::uint64_t)> cover = [&](std::uint64_t rest) -> bool {
    if (rest == 0) return true;
    if (dead.count(rest)) return false;
    const std::uint64_t low = rest & (~rest + 1);
    for (std::uint64_t b : blocks) {
      if ((b & low) && (b & ~rest) == 0 && cover(rest & ~b)) return true;
    }
    dead.insert(rest);
    return false;
  };
  return cover(mask);
}

/// Parameters of the single-flip bound for one reading of F as
/// [h, 2l_1, ..., 2l_r, ^2 l_{r+1}, ..., ^2 l_s].
struct BoundParams {
  int h = 0;
  std::vector<int> L;  // l_1..l_s
  std::vector<int> L0;
  std::vector<int> L1;
  long long h0 = 0;
  long long h1 = 0;
  long long bound = 0;  // h must exceed this
};

inline BoundParams bound_params(int h, std::vector<int> L) {
  BoundParams p;
  p.h = h;
  p.L = std::move(L);
  for (int l : p.L) {
    if (l % 2 == 0 && l > 2) p.L0.push_back(l);
    if (l % 2 == 1) p.L1.push_back(l);
  }
  const long long n0 = static_cast<long long>(p.L0.size());
  const long long max0 = p.L0.empty() ? 0 : *std::max_element(p.L0.begin(), p.L0.end());
  const long long max1 = p.L1.empty() ? 0 : *std::max_element(p.L1.begin(), p.L1.end());
  p.h0 = n0 == 0 ? -1 : 2 * n0 * (max0 + 3) - 1;
  p.h1 = seven_power_times(static_cast<int>(p.L.size()) - static_cast<int>(n0) - 1, 2 * max1 + 1);
  p.bound = 16 * std::max(1LL, p.h0) + 20 * std::max(3LL, p.h1) + 29;
  return p;
}

/// Every way of reading `f` in the single-flip shape, with the smallest
/// bound first; empty if f has no such reading.
inline std::vector<BoundParams> single_flip_readings(const CycleType& f) {
  std::vector<BoundParams> out;
  for (const auto& [h, hm] : f.parts()) {
    if (h < 3 || h % 2 == 0) continue;
    std::map<int, int> rest = f.parts();
    if (--rest[h] == 0) rest.erase(h);
    // Each length either contributes one single cycle 2l (even lengths
    // only, at most once) and pairs for the remainder.
    std::vector<std::pair<int, int>> parts(rest.begin(), rest.end());
    std::function<void(size_t, std::vector<int>&)> go = [&](size_t i, std::vector<int>& L) {
      if (i == parts.size()) {
        out.push_back(bound_params(h, L));
        return;
      }
      const auto [len, c] = parts[i];
      for (int single = 0; single <= 1; ++single) {
        if (single && (len % 2 != 0 || len < 4)) continue;
        if ((c - single) % 2 != 0) continue;
        const size_t mark = L.size();
        if (single) L.push_back(len / 2);
        for (int k = 0; k < (c - single) / 2; ++k) L.push_back(len);
        go(i + 1, L);
        L.resize(mark);
      }
    };
    std::vector<int> L;
    go(0, L);
  }
  std::sort(out.begin(), out.end(), [](const BoundParams& a, const BoundParams& b) {
    return a.h - a.bound > b.h - b.bound;
  });
  return out;
}

/// Bound on the large cycle for the twofold complete graph theorem, with
/// `h` removed from f; nullopt when no case applies.
inline std::optional<long long> twofold_bound(const CycleType& f, int h) {
  std::map<int, int> rest = f.parts();
  if (!rest.count(h)) return std::nullopt;
  if (--rest[h] == 0) rest.erase(h);
  long long r = 0, s = 0, l = 0, lp = 0;
  for (auto [len, c] : rest) {
    if (len % 2 == 0) {
      r += c;
      l = std::max<long long>(l, len);
    } else {
      s += c;
      lp = std::max<long long>(lp, len);
    }
  }
  if (r > 0 && s > 0) {
    long long p = seven_power_times(static_cast<int>(s), 2 * lp + 1);
    return 12 * r * (l + 3) + p - 6;
  }
  if (r > 0) return 2 * (r + 1) * (l + 1) + 5;
  if (s > 0) return 3 * seven_power_times(static_cast<int>(s - 1), 2 * lp + 1);
  return std::nullopt;
}

/// The prime-order circulant condition: v = 1 (mod 16) prime, 1..4 in the
/// index-2 subgroup of Z_v^*, and 1..4 in distinct cosets of the index-8
/// subgroup. Abstains (nullopt) beyond the checked range.
inline std::optional<bool> prime_index_condition(long long v) {
  if (v % 16 != 1 || !is_prime(v)) return false;
  if (v > 2'000'000'000LL) return std::nullopt;
  const long long g = primitive_root(v);
  // Index of x modulo 8 via x^((v-1)/8) compared with powers of g^((v-1)/8).
  const long long step = pow_mod(g, (v - 1) / 8, v);
  auto ind8 = [&](long long x) {
    long long t = pow_mod(x, (v - 1) / 8, v);
    long long acc = 1;
    for (int k = 0; k < 8; ++k) {
      if (acc == t) return k;
      acc = static_cast<long long>(static_cast<__int128>(acc) * step % v);
    }
    return -1;
  };
  int idx[5];
  for (int x = 1; x <= 4; ++x) {
    idx[x] = ind8(x);
    if (idx[x] < 0 || idx[x] % 2 != 0) return false;
  }
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      if (idx[a] == idx[b]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rule catalog

namespace detail {

struct Facts {
  const ProblemInstance* inst;
  int v = 0;
  int degree = 0;
  bool kstar = false;  // K_v or K_v - I
  bool k_odd = false;
  bool k_minus_i = false;
  std::vector<FactorClass> classes;  // merged, sorted by type
  bool all_uniform = true;
  bool all_bipartite = true;
};

struct RuleHit {
  VerdictKind kind;
  std::string clause;
};

struct Rule {
  std::string id;
  std::string citation;
  std::function<std::optional<RuleHit>(const Facts&)> apply;
};

inline std::optional<RuleHit> exists(std::string clause) { return RuleHit{VerdictKind::Exists, std::move(clause)}; }
inline std::optional<RuleHit> none(std::string clause) { return RuleHit{VerdictKind::NotExists, std::move(clause)}; }
inline std::optional<RuleHit> unknown(std::string clause) { return RuleHit{VerdictKind::Unknown, std::move(clause)}; }

inline int uniform_length(const CycleType& t) { return t.min_length(); }

/// Uniform two-type instance as (M, alpha, N, beta) with M < N.
struct Pair {
  int M, alpha, N, beta;
};

inline std::optional<Pair> uniform_pair(const Facts& f) {
  if (f.inst->kind != ProblemKind::HWP || f.classes.size() != 2 || !f.all_uniform) return std::nullopt;
  Pair p{uniform_length(f.classes[0].type), f.classes[0].multiplicity, uniform_length(f.classes[1].type),
         f.classes[1].multiplicity};
  if (p.M > p.N) {
    std::swap(p.M, p.N);
    std::swap(p.alpha, p.beta);
  }
  return p;
}

inline std::string num(long long x) { return std::to_string(x); }

inline const std::vector<Rule>& rule_catalog() {
  static const std::vector<Rule> rules = {
      {"R0", "necessary conditions: regular host of even degree, factor count = degree/2, factor order = |V|",
       [](const Facts& f) -> std::optional<RuleHit> {
         int total = 0;
         for (const auto& c : f.classes) total += c.multiplicity;
         if (f.degree % 2 != 0) return none("host degree " + num(f.degree) + " is odd");
         if (total != f.degree / 2) {
           return none("factor count " + num(total) + " differs from degree/2 = " + num(f.degree / 2));
         }
         for (const auto& c : f.classes) {
           if (c.type.order() != f.v) {
             return none("factor " + c.type.to_string() + " has order " + num(c.type.order()) + ", host has " +
                         num(f.v) + " vertices");
           }
         }
         return std::nullopt;
       }},
      {"R1", "small Oberwolfach exceptions: no OP(K_v^*; F) for F in {[3^2],[3^4],[4,5],[3^2,5]}",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::OP || !f.kstar) return std::nullopt;
         const CycleType& t = f.classes[0].type;
         for (const char* bad : {"[3^2]", "[3^4]", "[4,5]", "[3^2,5]"}) {
           if (t == parse_cycle_type(bad)) return none("F = " + t.to_string());
         }
         return std::nullopt;
       }},
      {"R2", "Oberwolfach problem settled for all orders up to 60 (outside the four exceptions)",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind == ProblemKind::OP && f.kstar && f.v <= 60) return exists("v = " + num(f.v) + " <= 60");
         return std::nullopt;
       }},
      {"R3", "uniform Oberwolfach problem on K_v^* settled",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind == ProblemKind::OP && f.kstar && f.all_uniform) {
           return exists("F uniform of length " + num(f.classes[0].type.min_length()));
         }
         return std::nullopt;
       }},
      {"R4", "Oberwolfach problem on K_v^* with a two-component factor settled",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind == ProblemKind::OP && f.kstar && f.classes[0].type.num_cycles() == 2) {
           return exists("F has exactly two cycles");
         }
         return std::nullopt;
       }},
      {"R5", "bipartite Oberwolfach problem on K_v - I settled",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind == ProblemKind::OP && f.k_minus_i && f.all_bipartite) return exists("F bipartite, v even");
         return std::nullopt;
       }},
      {"R6", "uniform Oberwolfach problem on K_2n + J settled",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::OP || !f.inst->host.get_if<CompletePlusJ>() || !f.all_uniform) {
           return std::nullopt;
         }
         // Triangle factors of K_6 + J and K_12 + J are left open here.
         if (f.classes[0].type.min_length() == 3 && (f.v == 6 || f.v == 12)) {
           return unknown("triangle factors on " + num(f.v) + " vertices are not covered");
         }
         return exists("F uniform");
       }},
      {"R7", "HWP(K_15; ^6 3, ^1 5) does not exist",
       [](const Facts& f) -> std::optional<RuleHit> {
         auto p = uniform_pair(f);
         if (!p || !f.k_odd || f.v != 15) return std::nullopt;
         if (p->M == 3 && p->alpha == 6 && p->N == 5 && p->beta == 1) return none("v = 15, ^6 3, ^1 5");
         return std::nullopt;
       }},
      {"R8", "uniform bipartite Hamilton-Waterloo on K_v - I: 2m | v, 2n | v and alpha + beta = (v-2)/2",
       [](const Facts& f) -> std::optional<RuleHit> {
         auto p = uniform_pair(f);
         if (!p || !f.k_minus_i || p->M % 2 != 0 || p->N % 2 != 0) return std::nullopt;
         if (f.v % p->M != 0 || f.v % p->N != 0) return none("2m or 2n does not divide v");
         const int m = p->M / 2;
         const int n = p->N / 2;
         const bool m_divides = n % m == 0;
         if (f.v % 4 == 0 && !m_divides && (p->alpha == 1 || p->beta == 1)) {
           return unknown("exception 1: v = 0 (mod 4), m does not divide n, 1 in {alpha, beta}");
         }
         if (f.v % 4 == 2 && !m_divides && p->alpha % 2 == 1 && p->beta % 2 == 1) {
           return unknown("exception 2: v = 2 (mod 4), m does not divide n, alpha and beta odd");
         }
         return exists("2m = " + num(p->M) + ", 2n = " + num(p->N) + " divide v = " + num(f.v));
       }},
      {"R9", "uniform Hamilton-Waterloo on K_v^*, three parameter families (s in item 3 read as beta)",
       [](const Facts& f) -> std::optional<RuleHit> {
         auto p = uniform_pair(f);
         if (!p || !f.kstar) return std::nullopt;
         const long long v = f.v;
         const long long M = p->M, N = p->N, a = p->alpha, b = p->beta;
         const long long l = lcm_ll(M, N);
         if (M % 2 == 1 && N % 2 == 1 && M >= 3) {
           if (v % l != 0) return std::nullopt;
           const long long u = v / l;
           if (u == 1 || u == 2 || u == 4 || u == 6) return unknown("item 1 exception: v = lcm * " + num(u));
           if (a == 1) return unknown("item 1 exception: alpha = 1");
           if (b == 1 || b == 3) return unknown("item 1 exception: beta in {1,3}");
           if (v % 2 == 0 && M == 5 && N == 7 && b == 5) return unknown("item 1 exception: (5,7,5), v even");
           return exists("item 1: odd M < N, lcm(M,N) | v");
         }
         if (M % 2 == 0 && N % 2 == 0 && M >= 4 && N % M != 0 && a % 2 == 1 && b % 2 == 1) {
           if (a == 1 || b == 1) return unknown("item 2 exception: 1 in {alpha, beta}");
           if (b == 3 && v % 4 == 2 && std::gcd(M, N) == 2) {
             return unknown("item 2 exception: beta = 3, v = 2 (mod 4), gcd = 2");
           }
           if (v == l && v % 4 == 2) return unknown("item 2 exception: v = lcm(M,N) = 2 (mod 4)");
           return exists("item 2: even M < N, M does not divide N, alpha and beta odd");
         }
         if ((M % 2) != (N % 2)) {
           // Item 3: the odd length plays M, the even one N = 2^k n.
           const long long Mo = M % 2 == 1 ? M : N;
           const long long Ne = M % 2 == 1 ? N : M;
           const long long bo = M % 2 == 1 ? b : a;  // multiplicity of the even length
           const long long ao = M % 2 == 1 ? a : b;
           long long n = Ne;
           int k = 0;
           while (n % 2 == 0) {
             n /= 2;
             ++k;
           }
           if (n % Mo == 0 && v > 6 * Ne && 6 * Ne > 36 * Mo && bo >= 3) {
             return exists("item 3(a): M | n, v > 6N > 36M, s = beta >= 3");
           }
           long long four_k = 1;
           for (int j = 0; j < k; ++j) four_k *= 4;
           const long long base = four_k * lcm_ll(Mo, n);
           if (std::gcd(Mo, n) >= 3 && v % base == 0 && v / base >= 3 && ao != 1 && bo != 1) {
             return exists("item 3(b): gcd(M,n) >= 3, 4^k lcm(M,n) | v with quotient >= 3");
           }
         }
         return std::nullopt;
       }},
      {"R10", "uniform Hamilton-Waterloo on K_v^* with M, N > 3 and M | v, N | v (abelian and dihedral row sums)",
       [](const Facts& f) -> std::optional<RuleHit> {
         auto p = uniform_pair(f);
         if (!p || !f.kstar || p->M <= 3 || p->N <= 3) return std::nullopt;
         const long long v = f.v;
         const long long g = std::gcd(p->M, p->N);
         const long long l = lcm_ll(p->M, p->N);
         if (v % p->M != 0 || v % p->N != 0) return none("M or N does not divide v");
         if (g == 1 || g == 2) return unknown("exception 1: gcd(M,N) in {1,2}");
         if (v % l != 0 || (v / l) % 4 != 0) return unknown("exception 2: 4 does not divide v/lcm");
         if (v / (4 * l) == 1 || v / (4 * l) == 2) return unknown("exception 3: v/(4 lcm) in {1,2}");
         if (v == 16 * l && g % 2 == 1) return unknown("exception 4: v = 16 lcm, gcd odd");
         if (v == 24 * l && g == 3) return unknown("exception 5: v = 24 lcm, gcd = 3");
         return exists("M | v, N | v, no exception clause applies");
       }},
      {"R11", "uniform generalized Oberwolfach on K_v, v odd: N = lcm | v and sum alpha = (v-1)/2",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (!f.k_odd || !f.all_uniform) return std::nullopt;
         long long N = 1, g = 0;
         for (const auto& c : f.classes) {
           N = lcm_ll(N, c.type.min_length());
           g = std::gcd(g, static_cast<long long>(c.type.min_length()));
         }
         if (f.v % N != 0) return none("N = " + num(N) + " does not divide v");
         const size_t t = f.classes.size();
         if (t > 1) {
           bool some_one = false, all_small = true;
           for (const auto& c : f.classes) {
             long long a = c.multiplicity;
             some_one = some_one || a == 1;
             all_small = all_small && ((a >= 2 && a <= (N - 3) / 2) || a == (N + 1) / 2);
           }
           if (some_one) return unknown("exception 1: some alpha_i = 1");
           if (all_small) return unknown("exception 2: every alpha_i in [2,(N-3)/2] u {(N+1)/2}");
           if (g == 1) return unknown("exception 3: gcd = 1");
           if (f.v == N) return unknown("exception 4: v = N");
         }
         return exists("N = " + num(N) + " | v, gcd = " + num(g));
       }},
      {"R12", "bipartite Hamilton-Waterloo on K_v - I when one factor refines the other",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::HWP || !f.k_minus_i || f.classes.size() != 2 || !f.all_bipartite) {
           return std::nullopt;
         }
         const CycleType& a = f.classes[0].type;
         const CycleType& b = f.classes[1].type;
         if (is_refinement(a, b) || is_refinement(b, a)) {
           return exists(a.to_string() + " and " + b.to_string() + " are related by refinement");
         }
         return std::nullopt;
       }},
      {"R13", "bipartite generalized Oberwolfach on K_v - I via doubled Hamilton cycles",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (!f.k_minus_i || !f.all_bipartite) return std::nullopt;
         for (size_t i = 0; i < f.classes.size(); ++i) {
           bool others_even = true;
           for (size_t j = 0; j < f.classes.size(); ++j) {
             if (j != i && f.classes[j].multiplicity % 2 != 0) others_even = false;
           }
           if (!others_even) continue;
           const int a1 = f.classes[i].multiplicity;
           if (f.v % 4 == 2 && a1 % 2 == 0) return exists("v = 2 (mod 4), every alpha even");
           if (f.v % 4 == 0 && a1 >= 3 && a1 % 2 == 1) {
             return exists("v = 0 (mod 4), alpha_1 = " + num(a1) + " >= 3 odd, the rest even");
           }
         }
         return std::nullopt;
       }},
      {"R14", "bipartite Oberwolfach on K_r[n]: exists iff n even, except K_2[6] into [6,6]",
       [](const Facts& f) -> std::optional<RuleHit> {
         const auto* eq = f.inst->host.get_if<Equipartite>();
         if (!eq || f.inst->kind != ProblemKind::OP || !f.all_bipartite) return std::nullopt;
         if (eq->part_size % 2 != 0) return none("part size " + num(eq->part_size) + " is odd");
         if (eq->parts == 2 && eq->part_size == 6 && f.classes[0].type == parse_cycle_type("[6^2]")) {
           return none("K_2[6] into [6,6]");
         }
         return exists("part size even");
       }},
      {"R15", "prime orders v = 1 (mod 16) with 1,2,3,4 in distinct cosets of the index-8 subgroup",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::OP || !f.k_odd) return std::nullopt;
         auto ok = prime_index_condition(f.v);
         if (ok && *ok) return exists("v = " + num(f.v) + " satisfies the subgroup conditions");
         return std::nullopt;
       }},
      {"R16", "OP(K_2p - I; F) for every F when p = 5 (mod 8) is prime",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::OP || !f.k_minus_i || f.v % 2 != 0) return std::nullopt;
         const int p = f.v / 2;
         if (p % 8 == 5 && is_prime(p)) return exists("p = " + num(p) + " = 5 (mod 8) prime");
         return std::nullopt;
       }},
      {"R17", "OP(2K_v; F) 1-rotational when the largest-cycle bound holds",
       [](const Facts& f) -> std::optional<RuleHit> {
         const auto* lk = f.inst->host.get_if<LambdaComplete>();
         if (!lk || lk->lambda != 2 || f.inst->kind != ProblemKind::OP) return std::nullopt;
         const CycleType& t = f.classes[0].type;
         if (t.min_length() < 3) return std::nullopt;
         for (const auto& [h, c] : t.parts()) {
           auto b = twofold_bound(t, h);
           if (b && h > *b) return exists("h = " + num(h) + " > " + num(*b));
         }
         return std::nullopt;
       }},
      {"R18", "OP(K_2n+1; F) 1-rotational for single-flip shaped F above the bound",
       [](const Facts& f) -> std::optional<RuleHit> {
         if (f.inst->kind != ProblemKind::OP || !f.k_odd) return std::nullopt;
         for (const BoundParams& p : single_flip_readings(f.classes[0].type)) {
           if (p.h > p.bound) return exists("h = " + num(p.h) + " > " + num(p.bound));
         }
         return std::nullopt;
       }},
  };
  return rules;
}

inline Facts collect_facts(const ProblemInstance& inst) {
  Facts f;
  f.inst = &inst;
  f.v = inst.host.num_vertices();
  f.degree = inst.host.degree();
  f.k_odd = inst.host.get_if<CompleteOdd>() != nullptr;
  f.k_minus_i = inst.host.get_if<CompleteMinusI>() != nullptr;
  f.kstar = f.k_odd || f.k_minus_i;
  std::map<CycleType, int> merged;
  for (const auto& c : inst.factors) {
    if (c.multiplicity < 1) throw PreconditionError("factor multiplicities must be positive");
    merged[c.type] += c.multiplicity;
  }
  for (const auto& [t, m] : merged) {
    f.classes.push_back({t, m});
    f.all_uniform = f.all_uniform && t.is_uniform();
    f.all_bipartite = f.all_bipartite && t.is_bipartite();
  }
  return f;
}

}  // namespace detail

/// Ids and citations of the rule catalog, in firing order.
inline std::vector<std::pair<std::string, std::string>> advisor_rules() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& r : detail::rule_catalog()) out.emplace_back(r.id, r.citation);
  return out;
}

/// First rule giving a definite answer, in catalog order. Rules whose
/// "except possibly" clauses match are collected as nearest rules and do not
/// stop the evaluation.
inline Verdict advise(const ProblemInstance& inst) {
  if (inst.factors.empty()) throw PreconditionError("instance has no factors");
  detail::Facts facts = detail::collect_facts(inst);
  const size_t t = facts.classes.size();
  if (inst.kind == ProblemKind::OP && t != 1) throw PreconditionError("OP needs exactly one factor type");
  if (inst.kind == ProblemKind::HWP && t != 2) throw PreconditionError("HWP needs exactly two factor types");
  if (inst.kind == ProblemKind::GOP && t < 2) throw PreconditionError("GOP needs at least two factor types");
  Verdict out;
  for (const auto& rule : detail::rule_catalog()) {
    auto hit = rule.apply(facts);
    if (!hit) continue;
    if (hit->kind == VerdictKind::Unknown) {
      out.nearest_rules.push_back(rule.id + ": " + hit->clause);
      continue;
    }
    out.kind = hit->kind;
    out.rule = rule.id;
    out.citation = rule.citation + "; " + hit->clause;
    return out;
  }
  return out;
}

}  // namespace owf
