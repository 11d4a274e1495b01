#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey_p5/certificate.hpp"
#include "ramsey_p5/claims.hpp"
#include "ramsey_p5/design.hpp"
#include "ramsey_p5/design_search.hpp"
#include "ramsey_p5/ramsey_search.hpp"
#include "ramsey_p5/turan.hpp"
#include "ramsey_p5/witness.hpp"

namespace ramsey_p5::cli {

enum ExitCode : int {
  success = 0,
  violated = 1,  // claim violated, or a witness was expected and is absent
  usage = 2,
  budget = 3,
};

// Node budget used when neither --nodes nor --budget is given.
constexpr std::uint64_t default_node_limit = 1'000'000'000;

namespace detail {

struct Limits {
  std::optional<double> seconds;
  std::optional<std::uint64_t> nodes;

  void attach(CLI::App* cmd) {
    auto* s = cmd->add_option("--budget", seconds, "wall-clock limit in seconds")->check(CLI::PositiveNumber);
    auto* n = cmd->add_option("--nodes", nodes, "node limit (deterministic)")->check(CLI::PositiveNumber);
    s->excludes(n);
  }

  Budget resolve() const {
    if (nodes) return Budget::nodes(*nodes);
    if (seconds) return Budget::wall(*seconds);
    return Budget::nodes(default_node_limit);
  }
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

inline std::string path_text(const MonoPath& p) {
  std::string s;
  for (std::size_t i = 0; i < p.path.size(); ++i) s += (i ? "-" : "") + std::to_string(p.path[i]);
  return s;
}

inline std::string extremal_name(long long n) {
  if (n == 0) return "empty";
  std::string s;
  for (long long a = 0; a < n / 4; ++a) s += (s.empty() ? "" : "+") + std::string("K4");
  if (n % 4) s += (s.empty() ? "" : "+") + std::string("K") + std::to_string(n % 4);
  return s;
}

inline std::string split_text(const std::array<int, 4>& s) {
  return "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
         std::to_string(s[3]) + ")";
}

}  // namespace detail

// Runs one subcommand. Machine-readable key=value lines go to `out`, human
// notes to `err`. Returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey numbers R_r(P5): Turan analysis, witnesses, certificates and exhaustive search"};
  app.name("ramsey-p5");
  app.require_subcommand(1, 1);

  long long turan_n = 0;
  auto* turan = app.add_subcommand("turan", "ex(n, P5) and its extremal graph");
  turan->add_option("n", turan_n, "order")->required()->check(CLI::NonNegativeNumber);

  int witness_r = 0;
  std::string witness_out, witness_design;
  detail::Limits witness_limits;
  auto* witness_cmd = app.add_subcommand("witness", "mono-P5-free colouring of K_{R_r(P5)-1}");
  witness_cmd->add_option("r", witness_r, "colours")->required()->check(CLI::PositiveNumber);
  witness_cmd->add_option("-o", witness_out, "write the certificate here");
  witness_cmd->add_option("--design", witness_design, "build from this design file");
  witness_limits.attach(witness_cmd);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate file");
  verify->add_option("file", verify_path, "certificate")->required();

  auto* design = app.add_subcommand("design", "resolvable block designs");
  design->require_subcommand(1, 1);
  int design_v = 0, design_classes = 0;
  std::string design_mode, design_out, design_path;
  detail::Limits design_limits;
  auto* design_search_cmd = design->add_subcommand("search", "backtracking search for a resolvable design");
  design_search_cmd->add_option("--v", design_v, "points")->required();
  design_search_cmd->add_option("--mode", design_mode, "steiner|covering|packing")
      ->required()
      ->check(CLI::IsMember({"steiner", "covering", "packing"}));
  design_search_cmd->add_option("--classes", design_classes, "parallel classes")->required();
  design_search_cmd->add_option("-o", design_out, "write the design here");
  design_limits.attach(design_search_cmd);
  auto* design_verify_cmd = design->add_subcommand("verify", "check a design file");
  design_verify_cmd->add_option("file", design_path, "design")->required();

  int search_n = 0, search_r = 0, search_jobs = 1;
  detail::Limits search_limits;
  auto* search = app.add_subcommand("search", "exhaustive search over r-colourings of K_n");
  search->add_option("--n", search_n, "order")->required();
  search->add_option("--r", search_r, "colours")->required();
  search->add_option("--jobs", search_jobs, "worker threads (RAMSEY_P5_JOBS overrides)")->check(CLI::PositiveNumber);
  search_limits.attach(search);

  std::optional<long long> claims_lemma1;
  bool claims_claim1 = false, claims_lemma3 = false, claims_all = false;
  auto* claims = app.add_subcommand("claims", "machine-check the proof steps");
  auto* l1 = claims->add_option("--lemma1", claims_lemma1, "pigeonhole chains for r = 1..R")->check(CLI::PositiveNumber);
  auto* c1 = claims->add_flag("--claim1", claims_claim1, "11-vertex P5-free graphs with 14 and 15 edges");
  auto* l3 = claims->add_flag("--lemma3", claims_lemma3, "the four-colour K11 contradiction");
  auto* all = claims->add_flag("--all", claims_all, "everything");
  l1->excludes(c1, l3, all);
  c1->excludes(l3, all);
  l3->excludes(all);

  long long table_max = 12;
  auto* table = app.add_subcommand("table", "R_r(P5) for r = 1..max");
  table->add_option("--max-r", table_max, "largest r")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (*turan) {
      out << "ex=" << ex_p5(turan_n) << " extremal=" << detail::extremal_name(turan_n) << " unique=";
      if (turan_n <= enumerate_max_order) {
        const auto all_extremal = enumerate_p5_free(static_cast<int>(turan_n), static_cast<int>(ex_p5(turan_n)));
        const bool unique = all_extremal.size() == 1 && isomorphic(all_extremal[0], extremal_p5(static_cast<int>(turan_n)));
        out << (unique ? "true" : "false") << '\n';
        return unique ? success : violated;
      }
      out << "unchecked\n";
      err << "uniqueness is enumerated only for n <= " << enumerate_max_order << '\n';
      return success;
    }

    if (*witness_cmd) {
      Certificate cert;
      std::string source;
      if (!witness_design.empty()) {
        cert.colouring = witness_from_design(read_design(detail::slurp(witness_design)), witness_r);
        source = "design file " + witness_design;
      } else {
        WitnessResult w = witness(witness_r, witness_limits.resolve());
        if (!w.colouring) {
          err << "no witness: " << w.source << (w.exhausted ? " (budget exhausted)" : "") << '\n';
          out << "r=" << witness_r << "\nfound=false\n";
          return w.exhausted ? budget : violated;
        }
        cert.colouring = std::move(*w.colouring);
        source = w.source;
      }
      cert.notes.push_back(" source: " + source);
      const CertificateVerdict v = verify_certificate(cert);
      if (!v.holds) {
        err << "constructed colouring has a monochromatic P5 in colour " << v.witness->colour << ": "
            << detail::path_text(*v.witness) << '\n';
        return violated;
      }
      if (witness_out.empty()) {
        out << write_certificate(cert);
      } else {
        detail::spill(witness_out, write_certificate(cert));
        out << "r=" << cert.colouring.colours() << "\nn=" << cert.colouring.order() << "\nverified=true\nfile="
            << witness_out << '\n';
      }
      err << "K_" << cert.colouring.order() << " " << cert.colouring.colours() << "-coloured without a monochromatic P5 ("
          << source << ")\n";
      return success;
    }

    if (*verify) {
      Certificate cert;
      try {
        cert = read_certificate(detail::slurp(verify_path));
      } catch (const parse_error& e) {
        out << "verified=false\nerror=parse\nline=" << e.line << '\n';
        err << verify_path << ": " << e.what() << '\n';
        return violated;
      }
      const CertificateVerdict v = verify_certificate(cert);
      out << "n=" << cert.colouring.order() << "\nr=" << cert.colouring.colours()
          << "\nverified=" << (v.holds ? "true" : "false") << '\n';
      if (!v.holds) {
        out << "colour=" << v.witness->colour << "\npath=" << detail::path_text(*v.witness) << '\n';
        err << "monochromatic P5 in colour " << v.witness->colour << ": " << detail::path_text(*v.witness) << '\n';
        return violated;
      }
      return success;
    }

    if (*design_search_cmd) {
      const DesignMode mode = *parse_mode(design_mode);
      const DesignSearchResult res = search_design(design_v, mode, design_classes, design_limits.resolve());
      out << "found=" << (res.design ? "true" : "false") << "\nnodes=" << res.nodes << "\nseconds=" << res.seconds
          << '\n';
      if (!res.design) {
        err << (res.exhausted ? "budget exhausted" : "search space exhausted without a design") << '\n';
        return res.exhausted ? budget : violated;
      }
      if (design_out.empty())
        out << write_design(*res.design);
      else {
        detail::spill(design_out, write_design(*res.design));
        out << "file=" << design_out << '\n';
      }
      return success;
    }

    if (*design_verify_cmd) {
      Design d;
      try {
        d = read_design(detail::slurp(design_path));
      } catch (const parse_error& e) {
        out << "verified=false\nerror=parse\nline=" << e.line << '\n';
        err << design_path << ": " << e.what() << '\n';
        return violated;
      }
      const DesignVerdict dv = verify_design(d);
      out << "v=" << d.v << "\nmode=" << to_string(d.mode) << "\nblocks=" << d.blocks.size()
          << "\nproperty=" << (dv.ok ? "true" : "false") << '\n';
      for (const auto& bad : dv.violations)
        err << "pair " << bad.a << " " << bad.b << " lies in " << bad.multiplicity << " blocks\n";
      bool ok = dv.ok;
      if (d.resolution) {
        const ResolutionVerdict rv = verify_resolution(d);
        out << "classes=" << d.resolution->size() << "\nresolution=" << (rv.ok ? "true" : "false") << '\n';
        for (const auto& p : rv.problems) err << p << '\n';
        ok = ok && rv.ok;
      }
      if (d.mode == DesignMode::packing && dv.ok && d.v <= Graph::max_order) {
        const Graph leave = leave_graph(d);
        out << "leave_edges=" << leave.edge_count() << "\nleave=" << describe(leave) << '\n';
      }
      return ok ? success : violated;
    }

    if (*search) {
      SearchConfig cfg;
      cfg.budget = search_limits.resolve();
      cfg.jobs = search_jobs;
      if (const char* env = std::getenv("RAMSEY_P5_JOBS")) {
        try {
          cfg.jobs = std::stoi(env);
        } catch (const std::exception&) {
          err << "usage error: RAMSEY_P5_JOBS must be a positive integer\n";
          return usage;
        }
        if (cfg.jobs < 1) {
          err << "usage error: RAMSEY_P5_JOBS must be a positive integer\n";
          return usage;
        }
      }
      const Verdict v = ramsey_verify(search_n, search_r, cfg);
      out << report(v);
      err << "K_" << search_n << " with " << search_r << " colours: " << to_string(v.outcome) << " after "
          << v.stats.nodes << " nodes\n";
      return v.outcome == Outcome::budget_exhausted ? budget : success;
    }

    if (*claims) {
      const bool everything = claims_all || (!claims_lemma1 && !claims_claim1 && !claims_lemma3);
      bool ok = true;
      if (claims_lemma1 || everything) {
        const long long upto = claims_lemma1.value_or(100);
        bool lemma1_ok = true;
        for (long long r = 1; r <= upto; ++r) {
          const Lemma1Report rep = lemma1_check(r);
          if (!rep.holds()) {
            lemma1_ok = false;
            err << "lemma1 r=" << r << " fails: " << rep.chain << '\n';
          }
        }
        out << "lemma1=" << (lemma1_ok ? "holds" : "violated") << " max_r=" << upto << '\n';
        ok = ok && lemma1_ok;
      }
      if (claims_claim1 || everything) {
        const Claim1Report rep = claim1_check();
        out << "claim1=" << (rep.holds() ? "holds" : "violated") << " m14=" << rep.size14.found.size()
            << " m15=" << rep.size15.found.size() << " m16=" << rep.size16.found.size() << '\n';
        for (const auto* chk : {&rep.size14, &rep.size15, &rep.size16}) {
          for (const Graph& g : chk->missing) err << "claim1 m=" << chk->m << " missing " << describe(g) << '\n';
          for (const Graph& g : chk->extra) err << "claim1 m=" << chk->m << " extra " << describe(g) << '\n';
        }
        ok = ok && rep.holds();
      }
      if (claims_lemma3 || everything) {
        const Lemma3Report rep = lemma3_check();
        out << "lemma3=" << (rep.holds() ? "holds" : "violated") << " pairs=" << rep.pairs << " ex=" << rep.turan
            << " second_lower=" << rep.second_lower << " splits=";
        for (std::size_t i = 0; i < rep.splits.size(); ++i) out << (i ? ";" : "") << detail::split_text(rep.splits[i]);
        out << " complement_k4s=" << rep.complement_k4s;
        std::uint64_t placements = 0;
        for (const auto& t : rep.tallies) placements += t.placements;
        out << " placements=" << placements << " counterexamples=" << rep.counterexamples.size() << '\n';
        for (const auto& t : rep.tallies)
          err << "G1=" << t.first << " G2=" << t.second << ": " << t.placements << " edge-disjoint placements, "
              << t.counterexamples << " counterexamples\n";
        for (const auto& c : rep.counterexamples) err << "counterexample: " << c << '\n';
        ok = ok && rep.holds();
      }
      return ok ? success : violated;
    }

    if (*table) {
      for (long long r = 1; r <= table_max; ++r) {
        const char* which = r == 4 ? "special" : r % 4 == 0 ? "3r+1" : r % 4 == 1 ? "3r+2" : "3r";
        out << "r=" << r << " R=" << ramsey_p5_value(r) << " case=" << which << '\n';
      }
      return success;
    }
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << '\n';
    return violated;
  } catch (const unsupported_r& e) {
    err << e.what() << '\n';
    return violated;
  } catch (const parameters_out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const infeasible_parameters& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return violated;
  }
  return usage;
}

}  // namespace ramsey_p5::cli
