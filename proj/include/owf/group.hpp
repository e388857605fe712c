#pragma once

#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "owf/error.hpp"

namespace owf {

/// Finite abelian group Z_{n_1} x ... x Z_{n_k} in invariant-factor form
/// (n_1 | n_2 | ... | n_k, every n_j >= 2). Elements are dense indices in
/// [0, order) using mixed radix with the last factor least significant, so
/// for a cyclic group the index is the residue itself.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() : FiniteAbelianGroup(std::vector<int>{2}) {}

  explicit FiniteAbelianGroup(std::vector<int> invariant_factors)
      : factors_(std::move(invariant_factors)) {
    if (factors_.empty()) throw PreconditionError("group needs at least one invariant factor");
    long long ord = 1;
    for (size_t j = 0; j < factors_.size(); ++j) {
      if (factors_[j] < 2) throw PreconditionError("invariant factors must be >= 2");
      if (j > 0 && factors_[j] % factors_[j - 1] != 0) {
        throw PreconditionError("invariant factors must divide each other in order");
      }
      ord *= factors_[j];
      if (ord > (1 << 24)) throw PreconditionError("group too large");
    }
    order_ = static_cast<int>(ord);
  }

  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup(std::vector<int>{n}); }

  int order() const { return order_; }
  const std::vector<int>& invariant_factors() const { return factors_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  std::vector<int> coords(int a) const {
    std::vector<int> c(factors_.size());
    for (size_t j = factors_.size(); j-- > 0;) {
      c[j] = a % factors_[j];
      a /= factors_[j];
    }
    return c;
  }

  int from_coords(std::span<const int> c) const {
    if (c.size() != factors_.size()) throw PreconditionError("coordinate arity mismatch");
    int a = 0;
    for (size_t j = 0; j < factors_.size(); ++j) {
      int r = ((c[j] % factors_[j]) + factors_[j]) % factors_[j];
      a = a * factors_[j] + r;
    }
    return a;
  }

  int add(int a, int b) const {
    if (is_cyclic()) return (a + b) % order_;
    int out = 0;
    int mul = 1;
    for (size_t j = factors_.size(); j-- > 0;) {
      int n = factors_[j];
      int r = (a % n + b % n) % n;
      out += r * mul;
      mul *= n;
      a /= n;
      b /= n;
    }
    return out;
  }

  int neg(int a) const {
    if (is_cyclic()) return (order_ - a) % order_;
    int out = 0;
    int mul = 1;
    for (size_t j = factors_.size(); j-- > 0;) {
      int n = factors_[j];
      out += ((n - a % n) % n) * mul;
      mul *= n;
      a /= n;
    }
    return out;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  /// Multiplies an element by an integer scalar.
  int scale(int a, long long k) const {
    std::vector<int> c = coords(a);
    for (size_t j = 0; j < c.size(); ++j) {
      c[j] = static_cast<int>(((c[j] * (k % factors_[j])) % factors_[j] + factors_[j]) % factors_[j]);
    }
    return from_coords(c);
  }

  int element_order(int a) const {
    long long ord = 1;
    std::vector<int> c = coords(a);
    for (size_t j = 0; j < c.size(); ++j) {
      long long oj = factors_[j] / std::gcd(factors_[j], c[j]);
      ord = std::lcm(ord, oj);
    }
    return static_cast<int>(ord);
  }

  std::vector<int> involutions() const {
    std::vector<int> out;
    for (int a = 1; a < order_; ++a) {
      if (add(a, a) == 0) out.push_back(a);
    }
    return out;
  }

  bool has_unique_involution() const {
    int even = 0;
    for (int n : factors_) even += (n % 2 == 0);
    return even == 1;
  }

  bool contains(int a) const { return a >= 0 && a < order_; }

  std::string to_string() const {
    std::string s;
    for (size_t j = 0; j < factors_.size(); ++j) {
      if (j) s += 'x';
      s += "Z" + std::to_string(factors_[j]);
    }
    return s;
  }

  bool operator==(const FiniteAbelianGroup& o) const { return factors_ == o.factors_; }

 private:
  std::vector<int> factors_;
  int order_ = 0;
};

}  // namespace owf
