#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "owf/advisor.hpp"
#include "owf/io.hpp"
#include "owf/search/solve.hpp"
#include "owf/verify.hpp"

namespace owf {

/// A stored instance with either a certificate or a completed
/// non-existence search.
struct CorpusEntry {
  ProblemInstance instance;
  std::optional<FactorizationCert> cert;  // empty means ProvedNone
  std::string provenance;
};

namespace io {

inline Json to_json(const CorpusEntry& e) {
  Json j;
  j["format"] = "corpus.v1";
  j["instance"] = to_json(e.instance);
  Json a;
  if (e.cert) {
    a["status"] = "Found";
    a["cert"] = to_json(*e.cert);
  } else {
    a["status"] = "ProvedNone";
  }
  j["artifact"] = a;
  j["provenance"] = e.provenance;
  return j;
}

inline CorpusEntry corpus_entry_from_json(const Json& j) {
  detail::expect_format(j, "corpus.v1");
  CorpusEntry e;
  e.instance = instance_from_json(detail::field(j, "instance"));
  const Json& a = detail::field(j, "artifact");
  const Json& status = detail::field(a, "status");
  if (status == "Found") {
    e.cert = cert_from_json(detail::field(a, "cert"));
  } else if (status != "ProvedNone") {
    throw ParseError("artifact status must be Found or ProvedNone");
  }
  const Json& p = detail::field(j, "provenance");
  if (!p.is_string()) throw ParseError("provenance must be a string");
  e.provenance = p.get<std::string>();
  return e;
}

}  // namespace io

struct CorpusIssue {
  std::string file;
  std::string message;
};

struct CorpusReport {
  int entries = 0;
  int certificates = 0;
  int proved_none = 0;
  std::vector<CorpusIssue> failures;        // unreadable or non-verifying entries
  std::vector<CorpusIssue> contradictions;  // advisor disagrees with the artifact

  bool ok() const { return failures.empty() && contradictions.empty(); }
};

/// Checks one entry: the certificate must verify on the instance host with
/// exactly the instance's factor types, and the advisor must not contradict
/// the artifact. Returns (failure, contradiction) messages.
inline std::pair<std::string, std::string> check_entry(const CorpusEntry& e) {
  if (e.cert) {
    const FactorizationCert& c = *e.cert;
    if (!(c.host == e.instance.host)) return {"certificate host differs from instance host", ""};
    VerifyReport r = verify_certificate(c);
    if (!r.ok()) return {std::string(to_string(r.violations[0].code)) + ": " + r.violations[0].detail, ""};
    std::vector<CycleType> want = io::expand_types(e.instance.factors);
    std::vector<CycleType> have = c.claimed_types;
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want != have) return {"certificate factor types differ from the instance", ""};
  }
  Verdict v = advise(e.instance);
  if (e.cert && v.kind == VerdictKind::NotExists) return {"", "advisor says NotExists by " + v.rule};
  if (!e.cert && v.kind == VerdictKind::Exists) return {"", "advisor says Exists by " + v.rule};
  return {"", ""};
}

/// Re-verifies every *.json entry under `dir`, in file-name order.
inline CorpusReport corpus_check(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());
  CorpusReport rep;
  for (const fs::path& p : files) {
    const std::string name = p.filename().string();
    ++rep.entries;
    try {
      CorpusEntry e = io::corpus_entry_from_json(io::read_json_file(p.string()));
      (e.cert ? rep.certificates : rep.proved_none)++;
      auto [fail, contra] = check_entry(e);
      if (!fail.empty()) rep.failures.push_back({name, fail});
      if (!contra.empty()) rep.contradictions.push_back({name, contra});
    } catch (const Error& ex) {
      rep.failures.push_back({name, ex.what()});
    }
  }
  return rep;
}

namespace detail {

/// Partitions of v into parts >= 3, largest part first.
inline void cycle_types_of_order(int v, int max_part, std::vector<int>& cur, std::vector<CycleType>& out) {
  if (v == 0) {
    out.push_back(CycleType::from_lengths(std::span<const int>(cur)));
    return;
  }
  for (int p = std::min(v, max_part); p >= 3; --p) {
    if (v - p != 0 && v - p < 3) continue;
    cur.push_back(p);
    cycle_types_of_order(v - p, p, cur, out);
    cur.pop_back();
  }
}

inline std::string file_stem(const ProblemInstance& inst) {
  std::string s = std::string(to_string(inst.kind)) + "_" + inst.host.describe();
  for (const auto& c : inst.factors) {
    s += "_" + std::to_string(c.multiplicity) + "x";
    for (int len : c.type.lengths()) s += std::to_string(len) + ".";
    s.pop_back();
  }
  for (char& ch : s) {
    if (ch == '[' || ch == ']' || ch == '+' || ch == '*') ch = '-';
  }
  return s;
}

}  // namespace detail

/// All cycle types of order v with cycle lengths >= 3.
inline std::vector<CycleType> cycle_types_of_order(int v) {
  std::vector<CycleType> out;
  std::vector<int> cur;
  detail::cycle_types_of_order(v, v, cur, out);
  return out;
}

/// Solves every OP instance on K_v^* for 5 <= v <= max_order and every HWP
/// instance with two uniform types for v <= max_order, storing each result
/// that finishes within the per-instance budget. Returns the entries in
/// the order they were produced.
inline std::vector<CorpusEntry> build_corpus(int max_order, const SearchBudget& budget) {
  std::vector<CorpusEntry> out;
  auto run = [&](ProblemInstance inst) {
    auto r = solve_exhaustive(inst.host, io::expand_types(inst.factors), budget);
    if (r.status == SearchStatus::Exhausted) return;
    out.push_back({std::move(inst), r.value,
                   "solve_exhaustive nodes=" + std::to_string(r.nodes)});
  };
  for (int v = 5; v <= max_order; ++v) {
    GraphSpec host = GraphSpec::complete_star(v);
    const int count = host.degree() / 2;
    std::vector<CycleType> types = cycle_types_of_order(v);
    for (const CycleType& t : types) run({ProblemKind::OP, host, {{t, count}}});
    for (size_t a = 0; a < types.size(); ++a) {
      for (size_t b = a + 1; b < types.size(); ++b) {
        if (!types[a].is_uniform() || !types[b].is_uniform()) continue;
        for (int r = 1; r < count; ++r) run({ProblemKind::HWP, host, {{types[a], r}, {types[b], count - r}}});
      }
    }
  }
  return out;
}

/// Writes entries as <stem>.json files under `dir`; returns the paths.
inline std::vector<std::string> write_corpus(const std::string& dir, const std::vector<CorpusEntry>& entries) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> paths;
  for (const CorpusEntry& e : entries) {
    std::string path = (fs::path(dir) / (detail::file_stem(e.instance) + ".json")).string();
    io::write_json_file(path, io::to_json(e));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace owf
