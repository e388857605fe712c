#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "owf/error.hpp"

namespace owf {

/// Multiset of cycle lengths of a 2-regular graph, written [3^2,5] for two
/// triangles and a pentagon. Lengths are kept ascending with their
/// multiplicities.
class CycleType {
 public:
  CycleType() = default;

  static CycleType from_lengths(std::span<const int> lengths,
                                int min_length = 3) {
    CycleType t;
    for (int len : lengths) {
      if (len < min_length) {
        throw PreconditionError("cycle length " + std::to_string(len) +
                                " below minimum " +
                                std::to_string(min_length));
      }
      ++t.parts_[len];
    }
    return t;
  }

  static CycleType from_lengths(std::initializer_list<int> lengths,
                                int min_length = 3) {
    return from_lengths(std::span<const int>(lengths.begin(), lengths.size()),
                        min_length);
  }

  static CycleType uniform(int length, int count) {
    if (length < 2 || count < 1) {
      throw PreconditionError("uniform cycle type needs length >= 2 and count >= 1");
    }
    CycleType t;
    t.parts_[length] = count;
    return t;
  }

  const std::map<int, int>& parts() const { return parts_; }

  int order() const {
    int total = 0;
    for (auto [len, mult] : parts_) total += len * mult;
    return total;
  }

  int num_cycles() const {
    int total = 0;
    for (auto [len, mult] : parts_) total += mult;
    return total;
  }

  bool empty() const { return parts_.empty(); }
  bool is_uniform() const { return parts_.size() == 1; }

  bool is_bipartite() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const auto& p) { return p.first % 2 == 0; });
  }

  int min_length() const { return parts_.empty() ? 0 : parts_.begin()->first; }
  int max_length() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }

  /// Expanded ascending list of lengths.
  std::vector<int> lengths() const {
    std::vector<int> out;
    for (auto [len, mult] : parts_) out.insert(out.end(), mult, len);
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    bool first = true;
    for (auto [len, mult] : parts_) {
      if (!first) s += ',';
      first = false;
      s += std::to_string(len);
      if (mult > 1) s += '^' + std::to_string(mult);
    }
    return s + "]";
  }

  auto operator<=>(const CycleType&) const = default;
  bool operator==(const CycleType&) const = default;

 private:
  std::map<int, int> parts_;
};

namespace detail {

inline void skip_spaces(std::string_view s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline int read_int(std::string_view s, size_t& i, std::string_view whole) {
  skip_spaces(s, i);
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (start == i || i - start > 9) {
    throw ParseError("malformed cycle type '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(s.substr(start, i - start)));
}

}  // namespace detail

/// Parses bracket notation. Items are `len`, `len^mult` or `^mult len`;
/// repeated lengths are merged.
inline CycleType parse_cycle_type(std::string_view text, int min_length = 3) {
  size_t i = 0;
  detail::skip_spaces(text, i);
  if (i >= text.size() || text[i] != '[') {
    throw ParseError("cycle type must start with '[': '" + std::string(text) + "'");
  }
  ++i;
  std::vector<int> lengths;
  detail::skip_spaces(text, i);
  if (i < text.size() && text[i] == ']') {
    throw ParseError("empty cycle type");
  }
  while (true) {
    detail::skip_spaces(text, i);
    int len = 0;
    int mult = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      mult = detail::read_int(text, i, text);
      len = detail::read_int(text, i, text);
    } else {
      len = detail::read_int(text, i, text);
      detail::skip_spaces(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        mult = detail::read_int(text, i, text);
      }
    }
    if (mult == 0) throw ParseError("zero multiplicity in '" + std::string(text) + "'");
    if (len < min_length) {
      throw ParseError("cycle length " + std::to_string(len) + " below " +
                       std::to_string(min_length) + " in '" + std::string(text) + "'");
    }
    lengths.insert(lengths.end(), mult, len);
    detail::skip_spaces(text, i);
    if (i >= text.size()) throw ParseError("unterminated cycle type '" + std::string(text) + "'");
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("unexpected character in cycle type '" + std::string(text) + "'");
  }
  detail::skip_spaces(text, i);
  if (i != text.size()) throw ParseError("trailing text after cycle type '" + std::string(text) + "'");
  return CycleType::from_lengths(lengths, min_length);
}

/// True when `fine` arises from `coarse` by replacing every cycle of `coarse`
/// with a bipartite 2-regular graph on the same vertices, i.e. the lengths of
/// `fine` split into groups whose sums are exactly the lengths of `coarse`.
/// Both types must be bipartite and of the same order.
inline bool is_refinement(const CycleType& fine, const CycleType& coarse) {
  if (!fine.is_bipartite() || !coarse.is_bipartite()) return false;
  if (fine.order() != coarse.order() || fine.empty()) return false;
  std::vector<int> pieces = fine.lengths();
  std::sort(pieces.rbegin(), pieces.rend());
  std::vector<int> room = coarse.lengths();
  std::sort(room.rbegin(), room.rend());

  std::function<bool(size_t)> place = [&](size_t k) -> bool {
    if (k == pieces.size()) return true;
    for (size_t b = 0; b < room.size(); ++b) {
      if (room[b] < pieces[k]) continue;
      // Bins with equal remaining room are interchangeable.
      bool seen = false;
      for (size_t c = 0; c < b; ++c) {
        if (room[c] == room[b]) {
          seen = true;
          break;
        }
      }
      if (seen) continue;
      int left = room[b] - pieces[k];
      if (left != 0 && left < pieces.back()) continue;
      room[b] = left;
      if (place(k + 1)) return true;
      room[b] += pieces[k];
    }
    return false;
  };
  return place(0);
}

}  // namespace owf
