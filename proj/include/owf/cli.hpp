#pragma once

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "owf/advisor.hpp"
#include "owf/construct/blowup.hpp"
#include "owf/construct/compose.hpp"
#include "owf/construct/haggkvist.hpp"
#include "owf/construct/projection.hpp"
#include "owf/construct/rsm.hpp"
#include "owf/construct/walecki.hpp"
#include "owf/corpus.hpp"
#include "owf/io.hpp"
#include "owf/search/hamdecomp.hpp"
#include "owf/search/rsm_search.hpp"
#include "owf/search/solve.hpp"
#include "owf/search/starter_search.hpp"
#include "owf/starter.hpp"

namespace owf::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUndecided = 2, kUsage = 3 };

/// Comma or space separated integers.
inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  for (char& c : s) {
    if (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') c = ' ';
  }
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      size_t pos = 0;
      int x = std::stoi(tok, &pos);
      if (pos != tok.size()) throw ParseError("");
      out.push_back(x);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "' in '" + text + "'");
    }
  }
  return out;
}

/// "Z5", "Z2xZ4", "5" or "2,4".
inline FiniteAbelianGroup parse_group(const std::string& text) {
  std::string s = text;
  for (char& c : s) {
    if (c == 'Z' || c == 'x' || c == 'X') c = ' ';
  }
  std::vector<int> factors = parse_int_list(s);
  if (factors.empty()) throw ParseError("empty group '" + text + "'");
  try {
    return FiniteAbelianGroup(factors);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

namespace detail {

inline SearchBudget budget_from(double seconds, std::uint64_t nodes, std::uint64_t seed) {
  return {seconds, nodes, seed};
}

inline int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::ProvedNone: return kNegative;
    case SearchStatus::Exhausted: return kUndecided;
  }
  return kUndecided;
}

inline int verdict_code(VerdictKind k) {
  switch (k) {
    case VerdictKind::Exists: return kOk;
    case VerdictKind::NotExists: return kNegative;
    case VerdictKind::Unknown: return kUndecided;
  }
  return kUndecided;
}

template <class T, class F>
io::Json outcome_json(const SearchOutcome<T>& r, F&& value_json) {
  io::Json j;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  if (r.value) j["result"] = value_json(*r.value);
  return j;
}

/// Differences h_{j+1} - h_j of a cyclic sequence in Z_n.
inline std::vector<int> difference_support(const std::vector<int>& h, int n) {
  std::vector<int> d;
  for (size_t j = 0; j < h.size(); ++j) {
    int a = h[(j + 1) % h.size()] - h[j];
    d.push_back(((a % n) + n) % n);
  }
  return symmetric_closure(n, d);
}

}  // namespace detail

/// Runs the command line `args` (without the program name); payloads go to
/// `out`, diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-factorization toolkit: constructions, verification, search and existence advice", "owf"};
  app.require_subcommand(1);

  const char* env_budget = std::getenv("FORGE_BUDGET_SECONDS");
  double budget_seconds = 60.0;
  if (env_budget) {
    try {
      budget_seconds = std::stod(env_budget);
    } catch (const std::exception&) {
      err << "error: FORGE_BUDGET_SECONDS is not a number\n";
      return kUsage;
    }
  }
  std::uint64_t budget_nodes = 100'000'000;
  std::uint64_t seed = 0;
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget-seconds", budget_seconds, "wall-clock budget (default $FORGE_BUDGET_SECONDS or 60)");
    sub->add_option("--budget-nodes", budget_nodes, "search node budget")->capture_default_str();
    sub->add_option("--seed", seed, "seed for randomized candidate orderings")->capture_default_str();
  };

  // construct
  auto* construct = app.add_subcommand("construct", "explicit constructions; emit cert.v1");
  construct->require_subcommand(1);
  int c_v = 0;
  auto* c_walecki = construct->add_subcommand("walecki", "Hamiltonian factorization of K_v (odd) or K_v - I (even)");
  c_walecki->add_option("--v", c_v, "number of vertices")->required();

  int c_n = 0;
  std::string c_type;
  auto* c_hagg = construct->add_subcommand("haggkvist", "two factors of C_n[2] of one bipartite type");
  c_hagg->add_option("--n", c_n, "cycle length n")->required();
  c_hagg->add_option("--type", c_type, "bipartite cycle type of order 2n, e.g. [4,6,6,8]")->required();

  std::string c_group, c_s, c_matrix;
  int c_g = 0;
  auto* c_rsm = construct->add_subcommand("rsm", "factorization of C_g[G,S] from a row-sum matrix");
  c_rsm->add_option("--matrix", c_matrix, "rsm.v1 file")->required()->check(CLI::ExistingFile);
  c_rsm->add_option("--group", c_group, "group such as Z5 or Z2xZ4 (must match the matrix)");
  c_rsm->add_option("--s", c_s, "connection set (must match the matrix)");
  c_rsm->add_option("--g", c_g, "number of layers (must match the matrix)");

  std::string c_cycle;
  bool c_reverse = false;
  int c_shift = -1;
  auto* c_project = construct->add_subcommand(
      "project",
      "projections of a Hamilton cycle of Z_n onto C_g[n]; without --shift the forward and reverse factors of "
      "C_g[Z_n, +-S_H], with --shift a single projected cycle");
  c_project->add_option("--cycle", c_cycle, "Hamilton cycle of Z_n, e.g. \"0,1,4,6,5,2,7,8,3\"")->required();
  c_project->add_option("--g", c_g, "number of layers")->required();
  c_project->add_flag("--reverse", c_reverse, "reverse projection");
  c_project->add_option("--shift", c_shift, "starting layer i");

  std::string c_cert;
  auto* c_blowup = construct->add_subcommand("blowup", "replace each vertex of a C_g-factorization of K_m[z] by n copies");
  c_blowup->add_option("--cert", c_cert, "cert.v1 file on an equipartite host")->required()->check(CLI::ExistingFile);
  c_blowup->add_option("--n", c_n, "copies per vertex")->required();

  auto* c_split = construct->add_subcommand("split", "split C_g[2] blocks into two 2g-cycle factors each");
  c_split->add_option("--cert", c_cert, "block cert.v1 file with block size 2")->required()->check(CLI::ExistingFile);

  std::vector<std::string> c_parts;
  std::string c_eq;
  auto* c_compose = construct->add_subcommand("compose", "join a K_m[w] factorization with one per part");
  c_compose->add_option("--eq", c_eq, "cert.v1 on K_m[w]")->required()->check(CLI::ExistingFile);
  c_compose->add_option("--parts", c_parts, "m cert.v1 files on K_w or K_w - I")->required()->check(CLI::ExistingFile);

  std::string c_starter;
  bool c_orbit = false;
  auto* c_develop = construct->add_subcommand("develop", "develop a starter.v1 over its group");
  c_develop->add_option("--starter", c_starter, "starter.v1 file")->required()->check(CLI::ExistingFile);
  c_develop->add_flag("--orbit", c_orbit, "distinct translates only (2-starters)");

  auto* c_cn = construct->add_subcommand("cn", "C_n-factorization of C_g[Z_n, +-S] via a searched Hamilton decomposition");
  c_cn->add_option("--g", c_g, "odd number of layers")->required();
  c_cn->add_option("--n", c_n, "odd n >= g")->required();
  c_cn->add_option("--s", c_s, "connection set in [1, n/2]")->required();
  add_budget(c_cn);

  // verify
  std::vector<std::string> v_files;
  auto* verify = app.add_subcommand("verify", "verify cert.v1 files; report JSON");
  verify->add_option("files", v_files, "certificate files")->required();

  // search
  auto* search = app.add_subcommand("search", "bounded exact searches");
  search->require_subcommand(1);
  std::string s_host, s_types, s_type, s_group, s_s, s_orders, s_starter;
  bool s_no_symmetry = false, s_two = false, s_all = false;
  int s_g = 0, s_n = 0;
  auto* s_op = search->add_subcommand("op", "2-factorization with prescribed factor types");
  s_op->add_option("--host", s_host, "host such as K7, K6-I, K6+J, 2K5, K3[4]")->required();
  s_op->add_option("--types", s_types, "factor types, e.g. \"[3,3],[3,3]\" or \"2x[3,3]\"")->required();
  s_op->add_flag("--no-symmetry", s_no_symmetry, "disable symmetry breaking");
  add_budget(s_op);

  auto* s_st = search->add_subcommand("starter", "twofold 2-starter or 2-starter of a given type");
  s_st->add_option("--group", s_group, "group such as Z4")->required();
  s_st->add_option("--type", s_type, "cycle type of order |G|+1")->required();
  s_st->add_flag("--two-starter", s_two, "require invariance under an involution");
  s_st->add_flag("--all", s_all, "enumerate all starters up to translation");
  add_budget(s_st);

  auto* s_lift = search->add_subcommand("lift", "doubling lift of a twofold 2-starter of Z_n to Z_2n");
  s_lift->add_option("--starter", s_starter, "starter.v1 file")->required()->check(CLI::ExistingFile);
  add_budget(s_lift);

  auto* s_rsm = search->add_subcommand("rsm", "row-sum matrix with prescribed row-sum orders");
  s_rsm->add_option("--group", s_group, "group such as Z5")->required();
  s_rsm->add_option("--s", s_s, "connection set")->required();
  s_rsm->add_option("--g", s_g, "number of columns")->required();
  s_rsm->add_option("--orders", s_orders, "target row-sum orders, one per element of S")->required();
  add_budget(s_rsm);

  auto* s_ham = search->add_subcommand("hamdecomp", "Hamilton decomposition of Circ(n; +-S)");
  s_ham->add_option("--n", s_n, "order")->required();
  s_ham->add_option("--s", s_s, "connection set")->required();
  add_budget(s_ham);

  // advise
  std::string a_kind, a_host;
  std::vector<std::string> a_factors;
  auto* advise_cmd = app.add_subcommand("advise", "existence verdict from the rule catalogue");
  advise_cmd->add_option("--kind", a_kind, "OP, HWP or GOP")->required();
  advise_cmd->add_option("--host", a_host, "host such as K15")->required();
  advise_cmd->add_option("--factors", a_factors, "factor classes such as 6x[3] 1x[5]")->required();

  // corpus
  auto* corpus = app.add_subcommand("corpus", "certificate corpus maintenance");
  corpus->require_subcommand(1);
  std::string k_dir;
  int k_max = 8;
  auto* k_check = corpus->add_subcommand("check", "re-verify entries and check the advisor against them");
  k_check->add_option("dir", k_dir, "corpus directory")->required();
  auto* k_build = corpus->add_subcommand("build", "solve small instances and store the results");
  k_build->add_option("dir", k_dir, "output directory")->required();
  k_build->add_option("--max-order", k_max, "largest host order")->capture_default_str();
  add_budget(k_build);

  std::vector<std::string> argv_store{"owf"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e, out, err);
    }
    app.exit(e, out, err);
    return kUsage;
  }

  auto emit = [&](const io::Json& j) { out << j.dump(2) << '\n'; };
  auto budget = [&] { return detail::budget_from(budget_seconds, budget_nodes, seed); };

  try {
    if (construct->parsed()) {
      FactorizationCert cert;
      if (c_walecki->parsed()) {
        cert = walecki(c_v);
      } else if (c_hagg->parsed()) {
        cert = haggkvist_cert(c_n, parse_cycle_type(c_type));
      } else if (c_rsm->parsed()) {
        RowSumMatrix m = io::rsm_from_json(io::read_json_file(c_matrix));
        if (!c_group.empty() && !(parse_group(c_group) == m.group)) throw ParseError("--group differs from the matrix");
        if (!c_s.empty() && parse_int_list(c_s) != m.connection) throw ParseError("--s differs from the matrix");
        if (c_g != 0 && c_g != m.g) throw ParseError("--g differs from the matrix");
        cert = rsm_apply(m);
      } else if (c_project->parsed()) {
        std::vector<int> h = parse_int_list(c_cycle);
        const int n = static_cast<int>(h.size());
        std::vector<int> support = detail::difference_support(h, n);
        GraphSpec host = GraphSpec::blown_cycle(c_g, FiniteAbelianGroup::cyclic(n), support);
        if (c_shift >= 0) {
          cert = make_cert(host, {TwoFactor{{project({h, c_g, c_shift, c_reverse})}}});
        } else if (c_reverse) {
          cert = make_cert(host, {projection_factor(h, c_g, true), projection_factor(h, c_g, false)});
        } else {
          cert = make_cert(host, {projection_factor(h, c_g, false), projection_factor(h, c_g, true)});
        }
      } else if (c_blowup->parsed()) {
        cert = blowup(io::cert_from_json(io::read_json_file(c_cert)), c_n);
      } else if (c_split->parsed()) {
        cert = split_doubled_blocks(io::cert_from_json(io::read_json_file(c_cert)));
      } else if (c_compose->parsed()) {
        std::vector<FactorizationCert> parts;
        for (const auto& p : c_parts) parts.push_back(io::cert_from_json(io::read_json_file(p)));
        cert = compose_equipartite(io::cert_from_json(io::read_json_file(c_eq)), parts);
      } else if (c_develop->parsed()) {
        StarterGraph st = io::starter_from_json(io::read_json_file(c_starter));
        cert = develop(st, c_orbit ? DevelopMode::Orbit : DevelopMode::Development);
      } else if (c_cn->parsed()) {
        std::vector<int> s = parse_int_list(c_s);
        auto r = find_ham_decomp(c_n, s, budget());
        if (!r.found()) {
          err << "Hamilton decomposition search: " << to_string(r.status) << " after " << r.nodes << " nodes\n";
          return detail::status_code(r.status);
        }
        cert = cn_factorize_blown(c_g, c_n, s, *r.value);
      }
      emit(io::to_json(cert));
      return kOk;
    }

    if (verify->parsed()) {
      std::vector<io::Json> reports;
      int code = kOk;
      for (const auto& file : v_files) {
        FactorizationCert cert = io::cert_from_json(io::read_json_file(file));
        VerifyReport r = verify_certificate(cert);
        io::Json j = io::to_json(r);
        j["file"] = file;
        reports.push_back(j);
        if (!r.ok()) code = kNegative;
      }
      if (reports.size() == 1) {
        emit(reports[0]);
      } else {
        emit(io::Json(reports));
      }
      return code;
    }

    if (search->parsed()) {
      if (s_op->parsed()) {
        GraphSpec host = io::parse_host(s_host);
        std::vector<CycleType> types = io::expand_types(io::parse_factor_classes({s_types}, host.num_vertices()));
        SolveOptions opts;
        opts.symmetry_breaking = !s_no_symmetry;
        auto r = solve_exhaustive(host, types, budget(), opts);
        emit(detail::outcome_json(r, [](const FactorizationCert& c) { return io::to_json(c); }));
        return detail::status_code(r.status);
      }
      if (s_st->parsed()) {
        FiniteAbelianGroup g = parse_group(s_group);
        CycleType t = parse_cycle_type(s_type);
        StarterGoal goal = s_two ? StarterGoal::TwoStarter : StarterGoal::Twofold;
        if (s_all) {
          auto r = enumerate_starters(g, t, goal, true, budget());
          emit(detail::outcome_json(r, [](const std::vector<StarterGraph>& v) {
            io::Json a = io::Json::array();
            for (const auto& f : v) a.push_back(io::to_json(f));
            return a;
          }));
          return detail::status_code(r.status);
        }
        auto r = find_starter(g, t, goal, budget());
        emit(detail::outcome_json(r, [](const StarterGraph& f) { return io::to_json(f); }));
        return detail::status_code(r.status);
      }
      if (s_lift->parsed()) {
        StarterGraph h = io::starter_from_json(io::read_json_file(s_starter));
        LiftResult lr = doubling_lift(h, budget());
        io::Json j;
        j["status"] = "Found";
        j["nodes"] = lr.nodes;
        j["doubled"] = lr.doubled;
        j["split"] = lr.split;
        j["result"] = io::to_json(lr.starter);
        emit(j);
        return kOk;
      }
      if (s_rsm->parsed()) {
        auto r = find_rsm(parse_group(s_group), parse_int_list(s_s), s_g, parse_int_list(s_orders), budget());
        emit(detail::outcome_json(r, [](const RowSumMatrix& m) { return io::to_json(m); }));
        return detail::status_code(r.status);
      }
      if (s_ham->parsed()) {
        auto r = find_ham_decomp(s_n, parse_int_list(s_s), budget());
        emit(detail::outcome_json(r, [](const std::vector<Cycle>& cs) { return io::Json(cs); }));
        return detail::status_code(r.status);
      }
    }

    if (advise_cmd->parsed()) {
      ProblemInstance inst;
      inst.kind = io::parse_kind(a_kind);
      inst.host = io::parse_host(a_host);
      inst.factors = io::parse_factor_classes(a_factors, inst.host.num_vertices());
      Verdict v = advise(inst);
      emit(io::to_json(v));
      return detail::verdict_code(v.kind);
    }

    if (corpus->parsed()) {
      if (k_check->parsed()) {
        CorpusReport rep = corpus_check(k_dir);
        io::Json j;
        j["entries"] = rep.entries;
        j["certificates"] = rep.certificates;
        j["proved_none"] = rep.proved_none;
        auto issues = [](const std::vector<CorpusIssue>& v) {
          io::Json a = io::Json::array();
          for (const auto& i : v) a.push_back({{"file", i.file}, {"message", i.message}});
          return a;
        };
        j["failures"] = issues(rep.failures);
        j["contradictions"] = issues(rep.contradictions);
        emit(j);
        return rep.ok() ? kOk : kNegative;
      }
      if (k_build->parsed()) {
        auto entries = build_corpus(k_max, budget());
        auto paths = write_corpus(k_dir, entries);
        io::Json j;
        j["written"] = paths.size();
        j["files"] = paths;
        emit(j);
        return kOk;
      }
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError& e) {
    err << "construction failed: " << e.what() << '\n';
    return kUndecided;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace owf::cli
