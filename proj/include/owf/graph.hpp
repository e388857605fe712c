#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "owf/error.hpp"
#include "owf/group.hpp"

namespace owf {

/// Undirected edge with u <= v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  auto operator<=>(const Edge&) const = default;
};

/// Edge multiset as sorted (edge, multiplicity) pairs.
using EdgeMultiset = std::vector<std::pair<Edge, int>>;

/// Hash multiset used for linear-time comparisons.
using EdgeCounter = std::unordered_map<std::uint64_t, int>;

inline EdgeMultiset to_multiset(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  EdgeMultiset out;
  for (const Edge& e : edges) {
    if (!out.empty() && out.back().first == e) {
      ++out.back().second;
    } else {
      out.emplace_back(e, 1);
    }
  }
  return out;
}

inline EdgeCounter to_counter(const EdgeMultiset& ms) {
  EdgeCounter c;
  c.reserve(ms.size() * 2);
  for (const auto& [e, m] : ms) c[e.key()] += m;
  return c;
}

inline std::size_t edge_count(const EdgeMultiset& ms) {
  std::size_t n = 0;
  for (const auto& p : ms) n += static_cast<std::size_t>(p.second);
  return n;
}

// Host graph families. Vertices are always 0..num_vertices()-1.

/// K_v, v odd.
struct CompleteOdd {
  int v = 0;
  bool operator==(const CompleteOdd&) const = default;
};

/// K_v minus a 1-factor, v even. An empty `one_factor` means the canonical
/// one {2i, 2i+1}.
struct CompleteMinusI {
  int v = 0;
  std::vector<Edge> one_factor;
  bool operator==(const CompleteMinusI&) const = default;
};

/// K_v plus a second copy of the canonical 1-factor {2i, 2i+1}, v even.
struct CompletePlusJ {
  int v = 0;
  bool operator==(const CompletePlusJ&) const = default;
};

/// lambda-fold K_v.
struct LambdaComplete {
  int lambda = 1;
  int v = 0;
  bool operator==(const LambdaComplete&) const = default;
};

/// K_m[n]; vertex p*n + k is the k-th vertex of part p.
struct Equipartite {
  int parts = 0;
  int part_size = 0;
  bool operator==(const Equipartite&) const = default;
};

/// C_g[group, S] on Z_g x group with edges (i,x)(i+1,d+x), d in S. Vertex
/// (i, x) is labelled i*|group| + x.
struct BlownCycle {
  int g = 0;
  FiniteAbelianGroup group;
  std::vector<int> connection;
  bool operator==(const BlownCycle&) const = default;
};

/// Circ(n; +-S) with S a subset of [1, n/2].
struct Circulant {
  int n = 0;
  std::vector<int> connection;
  bool operator==(const Circulant&) const = default;
};

class GraphSpec {
 public:
  using Variant = std::variant<CompleteOdd, CompleteMinusI, CompletePlusJ, LambdaComplete,
                               Equipartite, BlownCycle, Circulant>;

  GraphSpec() : GraphSpec(CompleteOdd{3}) {}

  // Implicit on purpose so each family converts directly.
  GraphSpec(Variant spec) : spec_(std::move(spec)) { validate(); }

  static GraphSpec complete_odd(int v) { return GraphSpec(CompleteOdd{v}); }
  static GraphSpec complete_minus_i(int v) { return GraphSpec(CompleteMinusI{v, {}}); }
  static GraphSpec complete_plus_j(int v) { return GraphSpec(CompletePlusJ{v}); }
  static GraphSpec lambda_complete(int lambda, int v) { return GraphSpec(LambdaComplete{lambda, v}); }
  static GraphSpec equipartite(int parts, int part_size) {
    return GraphSpec(Equipartite{parts, part_size});
  }
  static GraphSpec blown_cycle(int g, FiniteAbelianGroup group, std::vector<int> connection) {
    return GraphSpec(BlownCycle{g, std::move(group), std::move(connection)});
  }
  static GraphSpec circulant(int n, std::vector<int> connection) {
    return GraphSpec(Circulant{n, std::move(connection)});
  }
  /// K_v for odd v, K_v - I for even v.
  static GraphSpec complete_star(int v) {
    return v % 2 ? complete_odd(v) : complete_minus_i(v);
  }

  const Variant& variant() const { return spec_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&spec_);
  }

  int num_vertices() const {
    return std::visit(
        [](const auto& s) -> int {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Equipartite>) {
            return s.parts * s.part_size;
          } else if constexpr (std::is_same_v<T, BlownCycle>) {
            return s.g * s.group.order();
          } else if constexpr (std::is_same_v<T, Circulant>) {
            return s.n;
          } else {
            return s.v;
          }
        },
        spec_);
  }

  /// Common vertex degree (every family here is regular).
  int degree() const {
    return std::visit(
        [](const auto& s) -> int {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CompleteOdd>) {
            return s.v - 1;
          } else if constexpr (std::is_same_v<T, CompleteMinusI>) {
            return s.v - 2;
          } else if constexpr (std::is_same_v<T, CompletePlusJ>) {
            return s.v;
          } else if constexpr (std::is_same_v<T, LambdaComplete>) {
            return s.lambda * (s.v - 1);
          } else if constexpr (std::is_same_v<T, Equipartite>) {
            return (s.parts - 1) * s.part_size;
          } else if constexpr (std::is_same_v<T, BlownCycle>) {
            return 2 * static_cast<int>(s.connection.size());
          } else {
            int deg = 2 * static_cast<int>(s.connection.size());
            if (s.n % 2 == 0 &&
                std::find(s.connection.begin(), s.connection.end(), s.n / 2) != s.connection.end()) {
              --deg;
            }
            return deg;
          }
        },
        spec_);
  }

  /// The removed 1-factor of a CompleteMinusI host (explicit or canonical).
  std::vector<Edge> removed_one_factor() const {
    const auto* s = get_if<CompleteMinusI>();
    if (!s) return {};
    if (!s->one_factor.empty()) return s->one_factor;
    std::vector<Edge> out;
    for (int i = 0; i < s->v / 2; ++i) out.emplace_back(2 * i, 2 * i + 1);
    return out;
  }

  /// Exact edge multiset, sorted.
  EdgeMultiset edges() const {
    std::vector<Edge> out;
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CompleteOdd>) {
            add_complete(out, s.v, 1);
          } else if constexpr (std::is_same_v<T, CompleteMinusI>) {
            std::set<Edge> removed;
            for (const Edge& e : removed_one_factor()) removed.insert(e);
            for (int a = 0; a < s.v; ++a) {
              for (int b = a + 1; b < s.v; ++b) {
                if (!removed.count(Edge(a, b))) out.emplace_back(a, b);
              }
            }
          } else if constexpr (std::is_same_v<T, CompletePlusJ>) {
            add_complete(out, s.v, 1);
            for (int i = 0; i < s.v / 2; ++i) out.emplace_back(2 * i, 2 * i + 1);
          } else if constexpr (std::is_same_v<T, LambdaComplete>) {
            add_complete(out, s.v, s.lambda);
          } else if constexpr (std::is_same_v<T, Equipartite>) {
            int n = s.parts * s.part_size;
            for (int a = 0; a < n; ++a) {
              for (int b = a + 1; b < n; ++b) {
                if (a / s.part_size != b / s.part_size) out.emplace_back(a, b);
              }
            }
          } else if constexpr (std::is_same_v<T, BlownCycle>) {
            int ord = s.group.order();
            for (int i = 0; i < s.g; ++i) {
              int next = (i + 1) % s.g;
              for (int x = 0; x < ord; ++x) {
                for (int d : s.connection) {
                  out.emplace_back(i * ord + x, next * ord + s.group.add(d, x));
                }
              }
            }
          } else {
            for (int d : s.connection) {
              int count = (2 * d == s.n) ? s.n / 2 : s.n;
              for (int x = 0; x < count; ++x) out.emplace_back(x, (x + d) % s.n);
            }
          }
        },
        spec_);
    return to_multiset(std::move(out));
  }

  /// Short human-readable name, e.g. "K7", "K6-I", "2K5", "K3[4]".
  std::string describe() const {
    return std::visit(
        [](const auto& s) -> std::string {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CompleteOdd>) {
            return "K" + std::to_string(s.v);
          } else if constexpr (std::is_same_v<T, CompleteMinusI>) {
            return "K" + std::to_string(s.v) + "-I";
          } else if constexpr (std::is_same_v<T, CompletePlusJ>) {
            return "K" + std::to_string(s.v) + "+J";
          } else if constexpr (std::is_same_v<T, LambdaComplete>) {
            return std::to_string(s.lambda) + "K" + std::to_string(s.v);
          } else if constexpr (std::is_same_v<T, Equipartite>) {
            return "K" + std::to_string(s.parts) + "[" + std::to_string(s.part_size) + "]";
          } else if constexpr (std::is_same_v<T, BlownCycle>) {
            std::string out = "C" + std::to_string(s.g) + "[" + s.group.to_string() + ";";
            for (size_t k = 0; k < s.connection.size(); ++k) {
              out += (k ? "," : "") + std::to_string(s.connection[k]);
            }
            return out + "]";
          } else {
            std::string out = "Circ(" + std::to_string(s.n) + ";";
            for (size_t k = 0; k < s.connection.size(); ++k) {
              out += (k ? "," : "") + std::to_string(s.connection[k]);
            }
            return out + ")";
          }
        },
        spec_);
  }

  bool operator==(const GraphSpec& o) const { return spec_ == o.spec_; }

 private:
  static void add_complete(std::vector<Edge>& out, int v, int mult) {
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        for (int k = 0; k < mult; ++k) out.emplace_back(a, b);
      }
    }
  }

  static void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
  }

  static bool distinct(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
  }

  void validate() const {
    std::visit(
        [](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CompleteOdd>) {
            require(s.v >= 3 && s.v % 2 == 1, "CompleteOdd needs odd v >= 3");
          } else if constexpr (std::is_same_v<T, CompleteMinusI>) {
            require(s.v >= 4 && s.v % 2 == 0, "CompleteMinusI needs even v >= 4");
            if (!s.one_factor.empty()) {
              require(static_cast<int>(s.one_factor.size()) == s.v / 2,
                      "explicit 1-factor must have v/2 edges");
              std::vector<int> seen(s.v, 0);
              for (const Edge& e : s.one_factor) {
                require(e.u >= 0 && e.v < s.v && e.u != e.v, "1-factor edge out of range");
                require(++seen[e.u] == 1 && ++seen[e.v] == 1, "1-factor edges must be disjoint");
              }
            }
          } else if constexpr (std::is_same_v<T, CompletePlusJ>) {
            require(s.v >= 2 && s.v % 2 == 0, "CompletePlusJ needs even v >= 2");
          } else if constexpr (std::is_same_v<T, LambdaComplete>) {
            require(s.lambda >= 1 && s.v >= 3, "LambdaComplete needs lambda >= 1, v >= 3");
          } else if constexpr (std::is_same_v<T, Equipartite>) {
            require(s.parts >= 2 && s.part_size >= 1, "Equipartite needs m >= 2 parts of size >= 1");
          } else if constexpr (std::is_same_v<T, BlownCycle>) {
            require(s.g >= 2, "BlownCycle needs g >= 2");
            require(!s.connection.empty(), "BlownCycle needs a nonempty connection set");
            for (int d : s.connection) require(s.group.contains(d), "connection element outside group");
            require(distinct(s.connection), "connection set has repeated elements");
          } else {
            require(s.n >= 3, "Circulant needs n >= 3");
            require(!s.connection.empty(), "Circulant needs a nonempty connection set");
            for (int d : s.connection) require(d >= 1 && 2 * d <= s.n, "circulant difference out of [1, n/2]");
            require(distinct(s.connection), "connection set has repeated elements");
          }
        },
        spec_);
  }

  Variant spec_;
};

/// Edges {x, x+d mod v} whose start x has the requested parity. For
/// d = v/2 each edge is listed once.
enum class Parity { Even, Odd };

inline std::vector<Edge> half_difference_edges(int v, int d, Parity parity) {
  if (v < 2 || v % 2 != 0) throw PreconditionError("half-difference edges need even v");
  if (d < 1 || 2 * d > v) throw PreconditionError("difference out of range [1, v/2]");
  std::set<Edge> out;
  for (int x = (parity == Parity::Even ? 0 : 1); x < v; x += 2) out.insert(Edge(x, (x + d) % v));
  return {out.begin(), out.end()};
}

/// The 3-regular circulant <1, 3^e>: every difference-1 edge plus the
/// difference-3 edges starting at even vertices.
inline std::vector<Edge> one_three_even_edges(int v) {
  std::vector<Edge> out = half_difference_edges(v, 1, Parity::Even);
  auto odd = half_difference_edges(v, 1, Parity::Odd);
  out.insert(out.end(), odd.begin(), odd.end());
  auto three = half_difference_edges(v, 3, Parity::Even);
  out.insert(out.end(), three.begin(), three.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace owf
