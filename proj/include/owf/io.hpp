#pragma once

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "owf/advisor.hpp"
#include "owf/construct/rsm.hpp"
#include "owf/error.hpp"
#include "owf/factor.hpp"
#include "owf/starter.hpp"

namespace owf::io {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Low-level readers that turn malformed input into ParseError.

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  auto x = j.get<long long>();
  if (x < INT32_MIN || x > INT32_MAX) throw ParseError(std::string(what) + " out of range");
  return static_cast<int>(x);
}

inline std::vector<int> as_ints(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

inline std::vector<std::vector<int>> as_int_rows(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  for (const Json& row : j) out.push_back(as_ints(row, what));
  return out;
}

inline void expect_format(const Json& j, const char* format) {
  const Json& f = field(j, "format");
  if (!f.is_string() || f.get<std::string>() != format) {
    throw ParseError(std::string("expected format ") + format);
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Hosts

inline Json to_json(const FiniteAbelianGroup& g) { return Json(g.invariant_factors()); }

inline FiniteAbelianGroup group_from_json(const Json& j) {
  return detail::guarded([&] { return FiniteAbelianGroup(detail::as_ints(j, "group")); });
}

inline Json to_json(const GraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        Json j;
        if constexpr (std::is_same_v<T, CompleteOdd>) {
          j["kind"] = "CompleteOdd";
          j["v"] = s.v;
        } else if constexpr (std::is_same_v<T, CompleteMinusI>) {
          j["kind"] = "CompleteMinusI";
          j["v"] = s.v;
          if (!s.one_factor.empty()) {
            Json f = Json::array();
            for (const Edge& e : s.one_factor) f.push_back({e.u, e.v});
            j["one_factor"] = f;
          }
        } else if constexpr (std::is_same_v<T, CompletePlusJ>) {
          j["kind"] = "CompletePlusJ";
          j["v"] = s.v;
        } else if constexpr (std::is_same_v<T, LambdaComplete>) {
          j["kind"] = "LambdaComplete";
          j["lambda"] = s.lambda;
          j["v"] = s.v;
        } else if constexpr (std::is_same_v<T, Equipartite>) {
          j["kind"] = "Equipartite";
          j["parts"] = s.parts;
          j["part_size"] = s.part_size;
        } else if constexpr (std::is_same_v<T, BlownCycle>) {
          j["kind"] = "BlownCycle";
          j["g"] = s.g;
          j["group"] = to_json(s.group);
          j["connection"] = s.connection;
        } else {
          j["kind"] = "Circulant";
          j["n"] = s.n;
          j["connection"] = s.connection;
        }
        return j;
      },
      spec.variant());
}

inline GraphSpec host_from_json(const Json& j) {
  return detail::guarded([&]() -> GraphSpec {
    const Json& k = detail::field(j, "kind");
    if (!k.is_string()) throw ParseError("host kind must be a string");
    const std::string kind = k.get<std::string>();
    using detail::as_int;
    using detail::field;
    if (kind == "CompleteOdd") return GraphSpec(CompleteOdd{as_int(field(j, "v"), "v")});
    if (kind == "CompleteMinusI") {
      CompleteMinusI s{as_int(field(j, "v"), "v"), {}};
      if (j.contains("one_factor")) {
        for (const auto& e : detail::as_int_rows(j.at("one_factor"), "one_factor")) {
          if (e.size() != 2) throw ParseError("one_factor entries must be pairs");
          s.one_factor.emplace_back(e[0], e[1]);
        }
      }
      return GraphSpec(s);
    }
    if (kind == "CompletePlusJ") return GraphSpec(CompletePlusJ{as_int(field(j, "v"), "v")});
    if (kind == "LambdaComplete") return GraphSpec(LambdaComplete{as_int(field(j, "lambda"), "lambda"), as_int(field(j, "v"), "v")});
    if (kind == "Equipartite") {
      return GraphSpec(Equipartite{as_int(field(j, "parts"), "parts"), as_int(field(j, "part_size"), "part_size")});
    }
    if (kind == "BlownCycle") {
      return GraphSpec(BlownCycle{as_int(field(j, "g"), "g"), group_from_json(field(j, "group")),
                        detail::as_ints(field(j, "connection"), "connection")});
    }
    if (kind == "Circulant") {
      return GraphSpec(Circulant{as_int(field(j, "n"), "n"), detail::as_ints(field(j, "connection"), "connection")});
    }
    throw ParseError("unknown host kind '" + kind + "'");
  });
}

/// Host strings: K7, K6-I, K6+J, 2K5, K3[4], C3[Z5;1,4], Circ(9;1,2).
/// A bare K<v> with v even means K_v - I.
inline GraphSpec parse_host(const std::string& text) {
  static const std::regex complete(R"(K(\d+)\*?)");
  static const std::regex minus_i(R"(K(\d+)-I)");
  static const std::regex plus_j(R"(K(\d+)\+[JI])");
  static const std::regex lambda(R"((\d+)K(\d+))");
  static const std::regex multipartite(R"(K(\d+)\[(\d+)\])");
  static const std::regex blown(R"(C(\d+)\[Z(\d+(?:xZ\d+)*);(\d+(?:,\d+)*)\])");
  static const std::regex circ(R"(Circ\((\d+);(\d+(?:,\d+)*)\))");
  auto num = [&](const std::string& s) {
    if (s.size() > 7) throw ParseError("number too large in host '" + text + "'");
    return std::stoi(s);
  };
  auto list = [&](const std::string& s, char sep) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
      if (!item.empty() && item[0] == 'Z') item = item.substr(1);
      out.push_back(num(item));
    }
    return out;
  };
  std::smatch m;
  return detail::guarded([&]() -> GraphSpec {
    if (std::regex_match(text, m, complete)) {
      int v = num(m[1]);
      return v % 2 == 1 ? GraphSpec::complete_odd(v) : GraphSpec::complete_minus_i(v);
    }
    if (std::regex_match(text, m, minus_i)) return GraphSpec::complete_minus_i(num(m[1]));
    if (std::regex_match(text, m, plus_j)) return GraphSpec::complete_plus_j(num(m[1]));
    if (std::regex_match(text, m, lambda)) return GraphSpec::lambda_complete(num(m[1]), num(m[2]));
    if (std::regex_match(text, m, multipartite)) return GraphSpec::equipartite(num(m[1]), num(m[2]));
    if (std::regex_match(text, m, blown)) {
      std::string g = m[2];
      std::vector<int> factors;
      size_t pos = 0;
      while (pos <= g.size()) {
        size_t next = g.find("xZ", pos);
        factors.push_back(num(g.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
        if (next == std::string::npos) break;
        pos = next + 2;
      }
      return GraphSpec::blown_cycle(num(m[1]), FiniteAbelianGroup(factors), list(m[3], ','));
    }
    if (std::regex_match(text, m, circ)) return GraphSpec::circulant(num(m[1]), list(m[2], ','));
    throw ParseError("unrecognized host '" + text + "'");
  });
}

// ---------------------------------------------------------------------------
// Certificates

inline Json to_json(const TwoFactor& f) {
  Json j = Json::array();
  for (const Cycle& c : f.cycles) j.push_back(c);
  return j;
}

inline Json to_json(const FactorizationCert& cert) {
  Json j;
  j["format"] = "cert.v1";
  j["host"] = to_json(cert.host);
  Json factors = Json::array();
  for (const TwoFactor& f : cert.factors) factors.push_back(to_json(f));
  j["factors"] = factors;
  Json types = Json::array();
  for (const CycleType& t : cert.claimed_types) types.push_back(t.to_string());
  j["claimed_types"] = types;
  if (cert.block_size != 1) j["block_size"] = cert.block_size;
  return j;
}

inline FactorizationCert cert_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, "cert.v1");
    FactorizationCert cert;
    cert.host = host_from_json(detail::field(j, "host"));
    const Json& factors = detail::field(j, "factors");
    if (!factors.is_array()) throw ParseError("factors must be an array");
    for (const Json& f : factors) cert.factors.push_back(TwoFactor{detail::as_int_rows(f, "factor")});
    const Json& types = detail::field(j, "claimed_types");
    if (!types.is_array()) throw ParseError("claimed_types must be an array");
    for (const Json& t : types) {
      if (!t.is_string()) throw ParseError("claimed types must be strings");
      cert.claimed_types.push_back(parse_cycle_type(t.get<std::string>(), 1));
    }
    if (j.contains("block_size")) cert.block_size = detail::as_int(j.at("block_size"), "block_size");
    return cert;
  });
}

// ---------------------------------------------------------------------------
// Starters and row-sum matrices

inline Json to_json(const StarterGraph& f) {
  Json j;
  j["format"] = "starter.v1";
  j["group"] = to_json(f.group);
  Json cycles = Json::array();
  for (const Cycle& c : f.cycles) cycles.push_back(c);
  j["cycles"] = cycles;
  return j;
}

inline StarterGraph starter_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, "starter.v1");
    return StarterGraph{group_from_json(detail::field(j, "group")),
                        detail::as_int_rows(detail::field(j, "cycles"), "cycles")};
  });
}

inline Json to_json(const RowSumMatrix& m) {
  Json j;
  j["format"] = "rsm.v1";
  j["group"] = to_json(m.group);
  j["connection"] = m.connection;
  j["g"] = m.g;
  Json rows = Json::array();
  for (const auto& r : m.rows) rows.push_back(r);
  j["rows"] = rows;
  return j;
}

inline RowSumMatrix rsm_from_json(const Json& j) {
  return detail::guarded([&] {
    detail::expect_format(j, "rsm.v1");
    RowSumMatrix m{group_from_json(detail::field(j, "group")),
                   detail::as_ints(detail::field(j, "connection"), "connection"),
                   detail::as_int(detail::field(j, "g"), "g"), detail::as_int_rows(detail::field(j, "rows"), "rows")};
    validate(m);
    return m;
  });
}

// ---------------------------------------------------------------------------
// Factor multisets

/// Splits "a,[b,c],d" at top-level commas.
inline std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

/// One factor class for a host of order v: "6x[3]" or "6x3" is six uniform
/// factors of 3-cycles, "2x[3,4]" two factors of type [3,4], "[3,4]" one.
inline FactorClass parse_factor_class(const std::string& text, int v) {
  static const std::regex re(R"((?:(\d+)[xX])?(\[.*\]|\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw ParseError("bad factor class '" + text + "'");
  int mult = 1;
  if (m[1].matched) {
    if (m[1].length() > 6) throw ParseError("multiplicity too large");
    mult = std::stoi(m[1]);
    if (mult < 1) throw ParseError("multiplicity must be positive");
  }
  const std::string body = m[2];
  CycleType t;
  if (body[0] != '[') {
    if (body.size() > 6) throw ParseError("cycle length too large");
    int len = std::stoi(body);
    if (len < 3 || v % len != 0) throw ParseError("length " + body + " does not divide " + std::to_string(v));
    t = CycleType::uniform(len, v / len);
  } else {
    t = parse_cycle_type(body);
    if (t.num_cycles() == 1 && t.order() != v && v % t.order() == 0) t = CycleType::uniform(t.order(), v / t.order());
  }
  return {t, mult};
}

inline std::vector<FactorClass> parse_factor_classes(const std::vector<std::string>& items, int v) {
  std::vector<FactorClass> out;
  for (const std::string& item : items) {
    for (const std::string& piece : split_top_level(item)) out.push_back(parse_factor_class(piece, v));
  }
  return out;
}

/// One cycle type per factor, expanding multiplicities.
inline std::vector<CycleType> expand_types(const std::vector<FactorClass>& classes) {
  std::vector<CycleType> out;
  for (const auto& c : classes) {
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.type);
  }
  return out;
}

inline ProblemKind parse_kind(const std::string& s) {
  if (s == "OP") return ProblemKind::OP;
  if (s == "HWP") return ProblemKind::HWP;
  if (s == "GOP") return ProblemKind::GOP;
  throw ParseError("kind must be OP, HWP or GOP");
}

inline Json to_json(const ProblemInstance& inst) {
  Json j;
  j["kind"] = to_string(inst.kind);
  j["host"] = to_json(inst.host);
  Json fs = Json::array();
  for (const auto& c : inst.factors) {
    Json e;
    e["type"] = c.type.to_string();
    e["multiplicity"] = c.multiplicity;
    fs.push_back(e);
  }
  j["factors"] = fs;
  return j;
}

inline ProblemInstance instance_from_json(const Json& j) {
  return detail::guarded([&] {
    const Json& k = detail::field(j, "kind");
    if (!k.is_string()) throw ParseError("kind must be a string");
    ProblemInstance inst;
    inst.kind = parse_kind(k.get<std::string>());
    inst.host = host_from_json(detail::field(j, "host"));
    const Json& fs = detail::field(j, "factors");
    if (!fs.is_array()) throw ParseError("factors must be an array");
    for (const Json& e : fs) {
      const Json& t = detail::field(e, "type");
      if (!t.is_string()) throw ParseError("factor type must be a string");
      inst.factors.push_back({parse_cycle_type(t.get<std::string>()), detail::as_int(detail::field(e, "multiplicity"), "multiplicity")});
    }
    return inst;
  });
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["rule"] = v.rule.empty() ? Json(nullptr) : Json(v.rule);
  j["citation"] = v.citation.empty() ? Json(nullptr) : Json(v.citation);
  if (!v.nearest_rules.empty()) j["nearest_rules"] = v.nearest_rules;
  return j;
}

inline Json to_json(const VerifyReport& r) {
  Json j;
  j["ok"] = r.ok();
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json e;
    e["code"] = to_string(v.code);
    e["detail"] = v.detail;
    vs.push_back(e);
  }
  j["violations"] = vs;
  return j;
}

// ---------------------------------------------------------------------------
// Files

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace owf::io
