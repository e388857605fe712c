// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../generators.hpp"
#include "owf/owf.hpp"

using namespace owf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

/// Partitions of `total` into even parts >= 4, non-increasing.
void even_partitions(int total, int max_part, std::vector<int>& cur, std::vector<CycleType>& out) {
  if (total == 0) {
    out.push_back(CycleType::from_lengths(cur));
    return;
  }
  for (int p = std::min(total, max_part); p >= 4; --p) {
    if (p % 2) continue;
    cur.push_back(p);
    even_partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

/// Advances a non-decreasing index list over [0, base); false after the last.
bool next_multiset(std::vector<size_t>& idx, size_t base) {
  for (size_t k = idx.size(); k-- > 0;) {
    if (idx[k] + 1 < base) {
      ++idx[k];
      for (size_t j = k + 1; j < idx.size(); ++j) idx[j] = idx[k];
      return true;
    }
  }
  return false;
}

bool uniform_cycles(const FactorizationCert& c, int len, int count) {
  for (const auto& f : c.factors) {
    if (cycle_type_of(f) != CycleType::uniform(len, count)) return false;
  }
  return true;
}

void walecki_suite(Result& r) {
  auto t0 = Clock::now();
  int runs = 0;
  for (int v = 3; v <= 101; ++v) {
    FactorizationCert c = walecki(v);
    const size_t want = static_cast<size_t>(v % 2 ? (v - 1) / 2 : (v - 2) / 2);
    if (c.factors.size() != want) r.fail("v=" + std::to_string(v) + " factor count");
    if (!uniform_cycles(c, v, 1)) r.fail("v=" + std::to_string(v) + " not Hamiltonian");
    if (!verify_certificate(c).ok()) r.fail("v=" + std::to_string(v) + " rejected");
    ++runs;
  }
  const double s = since(t0);
  if (s >= 10) r.fail("runtime " + std::to_string(s) + " s");
  r.note << runs << " orders in " << s << " s";
}

void haggkvist_suite(Result& r) {
  int cases = 0, fallbacks = 0;
  auto run = [&](int n, const CycleType& t) {
    auto p = haggkvist_double(n, t);
    fallbacks += p.used_fallback;
    auto cert = make_cert(doubled_cycle(n), {p.first, p.second});
    if (cycle_type_of(p.first) != t || cycle_type_of(p.second) != t || !verify_certificate(cert).ok()) {
      r.fail("n=" + std::to_string(n) + " " + t.to_string());
    }
    ++cases;
  };
  for (int n = 3; n <= 10; ++n) {
    std::vector<CycleType> types;
    std::vector<int> cur;
    even_partitions(2 * n, 2 * n, cur, types);
    for (const auto& t : types) run(n, t);
  }
  run(12, parse_cycle_type("[4,6,6,8]"));
  r.note << cases << " types, " << fallbacks << " fallback searches";
}

void projection_suite(Result& r) {
  int cases = 0;
  for (int n = 3; n <= 11; n += 2) {
    const int k = (n - 1) / 2;
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int a = 1; a <= k; ++a)
        if (mask >> (a - 1) & 1) s.push_back(a);
      if (!s_eligible(n, s)) continue;
      auto hd = find_ham_decomp(n, s, {60, 100'000'000, 0});
      if (!hd.found()) {
        r.fail("no Hamilton decomposition for n=" + std::to_string(n));
        continue;
      }
      for (int g = 3; g <= n; g += 2) {
        auto c = cn_factorize_blown(g, n, s, *hd.value);
        const std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n) + " mask=" + std::to_string(mask);
        if (c.factors.size() != 2 * s.size()) r.fail(tag + " factor count");
        if (!uniform_cycles(c, n, g)) r.fail(tag + " not uniform");
        if (!verify_certificate(c).ok()) r.fail(tag + " rejected");
        ++cases;
      }
    }
  }
  // The 0-projection of (0,1,4,6,5,2,7,8,3) onto C_5[9].
  Cycle p = project({{0, 1, 4, 6, 5, 2, 7, 8, 3}, 5, 0, false});
  GraphSpec host = GraphSpec::blown_cycle(5, FiniteAbelianGroup::cyclic(9), {0, 1, 2, 3, 4, 5, 6, 7, 8});
  std::set<std::uint64_t> edges;
  for (const auto& [e, m] : host.edges()) edges.insert(e.key());
  std::set<int> distinct(p.begin(), p.end());
  bool ok = p.size() == 9 && distinct.size() == 9;
  for (size_t i = 0; i < p.size(); ++i) ok = ok && edges.count(Edge(p[i], p[(i + 1) % p.size()]).key());
  if (!ok) r.fail("projection of (0,1,4,6,5,2,7,8,3) is not a 9-cycle of C_5[9]");
  r.note << cases << " (g, n, S) cases plus the C_5[9] projection";
}

void row_sum_suite(Result& r) {
  int found = 0, none = 0, exhausted = 0;
  for (int n : {3, 5, 7, 9}) {
    std::vector<int> s;
    // Z_n \ {0} listed as +-pairs.
    for (int a = 1; a <= (n - 1) / 2; ++a) s.insert(s.end(), {a, n - a});
    std::vector<int> divs;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) divs.push_back(d);
    for (int g : {3, 5}) {
      // Every non-decreasing list of |S| divisor orders.
      std::vector<size_t> idx(s.size(), 0);
      while (true) {
        std::vector<int> target;
        for (size_t i : idx) target.push_back(divs[i]);
        auto res = find_rsm(FiniteAbelianGroup::cyclic(n), s, g, target, {20, 2'000'000, 0});
        if (res.found()) {
          ++found;
          const RowSumMatrix& m = *res.value;
          auto cert = rsm_apply(m);
          if (!verify_certificate(cert).ok()) r.fail("rsm_apply rejected for n=" + std::to_string(n));
          for (size_t row = 0; row < m.rows.size(); ++row) {
            const int want = g * m.group.element_order(row_sum(m, row));
            for (const auto& c : cert.factors[row].cycles) {
              if (static_cast<int>(c.size()) != want) r.fail("cycle length differs from g * ord(row sum)");
            }
          }
        } else if (res.status == SearchStatus::ProvedNone) {
          ++none;
        } else {
          ++exhausted;
        }
        if (!next_multiset(idx, divs.size())) break;
      }
    }
  }
  if (found == 0) r.fail("no matrices found");
  r.note << found << " matrices verified, " << none << " targets proved empty, " << exhausted << " over budget";
}

void starter_suite(Result& r) {
  auto z4 = find_starter(FiniteAbelianGroup::cyclic(4), parse_cycle_type("[5]"), StarterGoal::TwoStarter);
  if (!z4.found()) {
    r.fail("no [5] two-starter over Z_4");
  } else {
    auto c = develop(*z4.value, DevelopMode::Orbit);
    if (!(c.host == GraphSpec::complete_odd(5)) || !uniform_cycles(c, 5, 1) || !verify_certificate(c).ok()) {
      r.fail("Z_4 development rejected");
    }
  }
  int lifts = 0, failures = 0;
  for (int n : {3, 5, 7}) {
    std::vector<CycleType> types = cycle_types_of_order(n + 1);
    for (const auto& t : types) {
      auto all = enumerate_starters(FiniteAbelianGroup::cyclic(n), t, StarterGoal::Twofold, true, {600, 1'000'000'000, 0});
      if (all.status == SearchStatus::Exhausted) {
        r.fail("enumeration over Z_" + std::to_string(n) + " hit the budget");
        continue;
      }
      if (!all.value) continue;
      for (const auto& h : *all.value) {
        try {
          LiftResult lr = doubling_lift(h);
          bool ok = classify_starter(lr.starter).kind == StarterKind::TwoStarter &&
                    verify_certificate(develop(lr.starter, DevelopMode::Orbit)).ok() &&
                    !doubling_partitions(h, lr.starter).empty();
          failures += !ok;
        } catch (const Error&) {
          ++failures;
        }
        ++lifts;
      }
    }
  }
  if (failures) r.fail(std::to_string(failures) + " lift failures");
  r.note << "Z_4 [5] two-starter found; " << lifts << " lifts, " << failures << " failures";
}

void nonexistence_suite(Result& r) {
  auto t0 = Clock::now();
  auto k6 = solve_exhaustive(GraphSpec::complete_minus_i(6), std::vector<CycleType>(2, parse_cycle_type("[3,3]")),
                             {60, 1'000'000'000, 0});
  const double s6 = since(t0);
  if (k6.status != SearchStatus::ProvedNone || s6 >= 60) r.fail("K6-I [3^2] not refuted in time");
  t0 = Clock::now();
  auto k9 = solve_exhaustive(GraphSpec::complete_odd(9), std::vector<CycleType>(4, parse_cycle_type("[4,5]")),
                             {1800, 100'000'000'000ULL, 0});
  const double s9 = since(t0);
  if (k9.status != SearchStatus::ProvedNone) r.fail("K9 [4,5] not refuted");
  Verdict a = advise({ProblemKind::OP, GraphSpec::complete_minus_i(6), {{parse_cycle_type("[3,3]"), 2}}});
  Verdict b = advise({ProblemKind::OP, GraphSpec::complete_odd(9), {{parse_cycle_type("[4,5]"), 4}}});
  if (a.kind != VerdictKind::NotExists || a.rule != "R1" || b.kind != VerdictKind::NotExists || b.rule != "R1") {
    r.fail("advisor does not cite R1");
  }
  r.note << "K6-I " << k6.nodes << " nodes " << s6 << " s; K9 " << k9.nodes << " nodes " << s9 << " s";
}

void refinement_suite(Result& r) {
  const CycleType coarse = parse_cycle_type("[4,16,18,22]");
  if (!is_refinement(parse_cycle_type("[4,8^3,10^2,12]"), coarse)) r.fail("positive example rejected");
  if (is_refinement(parse_cycle_type("[4,18^2,20]"), coarse)) r.fail("negative example accepted");
  r.note << "positive and negative examples";
}

void consistency_suite(Result& r) {
  int checked = 0, skipped = 0, contradictions = 0, decided = 0;
  for (int v = 3; v <= 12; ++v) {
    GraphSpec host = GraphSpec::complete_star(v);
    const int k = host.degree() / 2;
    auto types = cycle_types_of_order(v);
    std::vector<ProblemInstance> insts;
    for (const auto& t : types) insts.push_back({ProblemKind::OP, host, {{t, k}}});
    for (size_t i = 0; i < types.size(); ++i)
      for (size_t j = i + 1; j < types.size(); ++j)
        for (int a = 1; a < k; ++a) insts.push_back({ProblemKind::HWP, host, {{types[i], a}, {types[j], k - a}}});
    for (const auto& inst : insts) {
      auto res = solve_exhaustive(inst.host, io::expand_types(inst.factors), {5, 3'000'000, 0});
      if (res.status == SearchStatus::Exhausted) {
        ++skipped;
        continue;
      }
      ++checked;
      Verdict verdict = advise(inst);
      decided += verdict.kind != VerdictKind::Unknown;
      const bool bad = (res.found() && verdict.kind == VerdictKind::NotExists) ||
                       (res.status == SearchStatus::ProvedNone && verdict.kind == VerdictKind::Exists);
      if (bad) {
        ++contradictions;
        r.fail(io::to_json(inst).dump());
      }
    }
  }
  r.note << checked << " instances solved (" << decided << " decided by the advisor), " << skipped
         << " over budget, " << contradictions << " contradictions";
}

void serialization_suite(Result& r) {
  gen::Rng rng(99);
  int cases = 0;
  for (int i = 0; i < 1000; ++i) {
    auto c = gen::cert(rng);
    auto s = gen::starter(rng);
    auto m = gen::rsm(rng);
    const std::string cj = io::to_json(c).dump(2), sj = io::to_json(s).dump(2), mj = io::to_json(m).dump(2);
    try {
      auto c2 = io::cert_from_json(io::Json::parse(cj));
      auto s2 = io::starter_from_json(io::Json::parse(sj));
      auto m2 = io::rsm_from_json(io::Json::parse(mj));
      if (!(c2 == c) || io::to_json(c2).dump(2) != cj) r.fail("cert case " + std::to_string(i));
      if (!(s2 == s) || io::to_json(s2).dump(2) != sj) r.fail("starter case " + std::to_string(i));
      if (!(m2 == m) || io::to_json(m2).dump(2) != mj) r.fail("rsm case " + std::to_string(i));
    } catch (const Error& e) {
      r.fail(std::string("case ") + std::to_string(i) + ": " + e.what());
    }
    ++cases;
  }
  r.note << cases << " cases x 3 formats";
}

void pipeline_suite(Result& r) {
  auto k33 = solve_exhaustive(GraphSpec::equipartite(3, 3), std::vector<CycleType>(3, parse_cycle_type("[3^3]")));
  if (!k33.found()) {
    r.fail("no C_3-factorization of K_3[3]");
    return;
  }
  auto blown = blowup(*k33.value, 2);
  auto split = split_doubled_blocks(blown);
  auto k18 = compose_equipartite(split, std::vector<FactorizationCert>(3, walecki(6)));
  if (!verify_certificate(blown).ok()) r.fail("blow-up rejected");
  if (!verify_certificate(split).ok()) r.fail("split rejected");
  if (!(k18.host == GraphSpec::complete_minus_i(18))) r.fail("composed host is " + k18.host.describe());
  if (!verify_certificate(k18).ok()) r.fail("K18-I rejected");
  r.note << k18.host.describe() << " with " << k18.factors.size() << " factors";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Result&)>>> criteria = {
      {"Walecki suite", walecki_suite},
      {"Haggkvist suite", haggkvist_suite},
      {"Projection suite", projection_suite},
      {"Row-sum suite", row_sum_suite},
      {"Starter suite", starter_suite},
      {"Non-existence oracle", nonexistence_suite},
      {"Refinement facts", refinement_suite},
      {"Advisor-oracle consistency", consistency_suite},
      {"Serialization fuzz", serialization_suite},
      {"Blow-up/composition pipeline", pipeline_suite},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    auto t0 = Clock::now();
    try {
      criteria[i].second(r);
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << r.note.str()
              << " [" << since(t0) << " s]" << std::endl;
  }
  return failed ? 1 : 0;
}
