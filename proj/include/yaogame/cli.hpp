#pragma once

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yaogame/certify.hpp"
#include "yaogame/equalize.hpp"
#include "yaogame/io.hpp"
#include "yaogame/problems.hpp"
#include "yaogame/solver.hpp"
#include "yaogame/version.hpp"

namespace yaogame::cli {

namespace detail {

inline json strategy_json(const MixedStrategy& s) {
  return json{{"labels", s.labels()}, {"weights", s.weights()}};
}

inline json solve_json(const SolveResult& res) {
  return json{{"value", res.value},
              {"f_star", strategy_json(res.f_star)},
              {"g_star", strategy_json(res.g_star)},
              {"upper", res.upper},
              {"lower", res.lower},
              {"gap", res.gap},
              {"pivots_or_iters", res.pivots_or_iters},
              {"method", to_string(res.method)},
              {"degenerate", res.degenerate},
              {"alternate_optima", res.alternate_optima}};
}

inline json certificate_json(const Certificate& cert) {
  return json{{"kind", to_string(cert.kind)},
              {"passed", cert.passed},
              {"witnessed_constant", cert.witnessed_constant},
              {"max_deviation", cert.max_deviation},
              {"tolerance", cert.tolerance},
              {"f_support", cert.f_support},
              {"g_support", cert.g_support},
              {"details", cert.details}};
}

inline json equalizer_json(const EqualizerSolution& sol) {
  json j{{"strategy", strategy_json(sol.strategy)},
         {"constant", sol.constant},
         {"residual", sol.residual},
         {"support", sol.support}};
  if (!sol.details.empty()) j["details"] = sol.details;
  return j;
}

inline json problem_summary(const Problem& p, const RatioMatrix& r, const std::string& source) {
  return json{{"source", source},
              {"kind", p.has_costs() ? "costs" : "ratio"},
              {"rows", r.rows()},
              {"cols", r.cols()},
              {"row_labels", r.row_labels()},
              {"col_labels", r.col_labels()},
              {"r_min", r.r().min_entry()},
              {"r_max", r.r().max_entry()},
              {"digest", problem_digest(p)}};
}

// Shortest round-trip decimal, shared with the JSON reports so CSV and
// report formats agree byte for byte on the same numbers.
inline std::string csv_number(double x) {
  return json(x).dump();
}

struct CommonOptions {
  double tol = 1e-6;
  double solver_tol = 1e-9;
  std::string method = "simplex";
  std::size_t fp_iters = 100000;
  std::uint64_t seed = 0;
  bool require_pass = false;
  bool deterministic = false;
  std::string format = "report";
};

inline void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--tol", o.tol, "certification tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--solver-tol", o.solver_tol, "solver feasibility/optimality tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--method", o.method, "solve method")->check(CLI::IsMember({"simplex", "fp"}));
  sub->add_option("--fp-iters", o.fp_iters, "fictitious play iterations")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "seed for generated instances");
  sub->add_flag("--require-pass", o.require_pass, "exit 1 when a requested check fails");
  sub->add_flag("--deterministic", o.deterministic, "zero out timing for byte-stable reports");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"report", "csv"}));
}

inline SolverConfig to_config(const CommonOptions& o) {
  SolverConfig config;
  config.tolerance = o.solver_tol;
  config.method = o.method == "fp" ? SolveMethod::fictitious_play : SolveMethod::simplex_lp;
  config.fp_iterations = o.fp_iters;
  config.seed = o.seed;
  return config;
}

struct ProblemSource {
  std::string file;
  std::uint32_t ski_b = 0;
  std::uint32_t horizon = 0;
};

inline void add_problem_source(CLI::App* sub, ProblemSource& src, bool allow_generated) {
  CLI::Option* file = sub->add_option("--file", src.file, "problem file (JSON); '-' reads stdin");
  if (allow_generated) {
    CLI::Option* ski =
        sub->add_option("--skirental", src.ski_b, "generate a ski-rental instance with buy cost B")
            ->check(CLI::PositiveNumber);
    sub->add_option("--horizon", src.horizon, "ski-rental adversary horizon N (default 2B)")
        ->needs(ski)
        ->check(CLI::PositiveNumber);
    ski->excludes(file);
  } else {
    file->required();
  }
}

inline Problem load_problem(const ProblemSource& src) {
  if (src.ski_b > 0) {
    std::uint32_t n = src.horizon > 0 ? src.horizon : 2 * src.ski_b;
    return Problem{ski_rental({src.ski_b, n}), false};
  }
  if (src.file.empty()) {
    throw ParseError("no problem given; pass --file or --skirental");
  }
  return problem_from_file(src.file);
}

inline std::string source_name(const ProblemSource& src) {
  if (src.ski_b > 0) {
    std::uint32_t n = src.horizon > 0 ? src.horizon : 2 * src.ski_b;
    return "skirental(B=" + std::to_string(src.ski_b) + ",N=" + std::to_string(n) + ")";
  }
  return src.file;
}

template <typename Fn>
json equalizer_side(Fn&& fn) {
  try {
    return equalizer_json(fn());
  } catch (const SingularSystem& e) {
    return json{{"error", e.what()}, {"error_kind", "singular_system"}};
  } catch (const NoFeasibleEqualizer& e) {
    return json{{"error", e.what()}, {"error_kind", "no_feasible_equalizer"}};
  }
}

}  // namespace detail

/// Runs the command-line front end on already-split arguments (program name
/// excluded). Reports go to `out`, usage and error diagnostics to `err`.
/// Exit codes: 0 success, 1 failed check under --require-pass, 2 bad input.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using detail::CommonOptions;
  using detail::ProblemSource;

  CLI::App app{"zero-sum ratio-game solver and optimality certifier for online algorithms"};
  app.name("yaogame");
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOptions opt;

  CLI::App* solve_cmd = app.add_subcommand("solve", "compute the game value and optimal f*, g*");
  ProblemSource solve_src;
  detail::add_problem_source(solve_cmd, solve_src, true);
  detail::add_common(solve_cmd, opt);

  CLI::App* bound_cmd =
      app.add_subcommand("bound", "lower-bound the competitive ratio with a randomized input");
  ProblemSource bound_src;
  std::string bound_g;
  detail::add_problem_source(bound_cmd, bound_src, false);
  bound_cmd->add_option("--g", bound_g, "adversary distribution: file, 'uniform', or 'point:<label>'")
      ->required();
  detail::add_common(bound_cmd, opt);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "check optimality certificates for a strategy pair");
  ProblemSource verify_src;
  std::string verify_f, verify_g, lemma = "all";
  detail::add_problem_source(verify_cmd, verify_src, false);
  verify_cmd->add_option("--f", verify_f, "algorithm distribution")->required();
  verify_cmd->add_option("--g", verify_g, "input distribution")->required();
  verify_cmd->add_option("--lemma", lemma, "which certificate(s) to check")
      ->check(CLI::IsMember({"sufficient", "necessary", "saddle", "all"}));
  detail::add_common(verify_cmd, opt);

  CLI::App* equalize_cmd =
      app.add_subcommand("equalize", "derive strategies that equalize the opponent's ratio");
  ProblemSource equalize_src;
  std::string support_mode = "full";
  std::size_t max_support = 0;
  detail::add_problem_source(equalize_cmd, equalize_src, true);
  equalize_cmd->add_option("--support", support_mode, "equalize on full supports or search")
      ->check(CLI::IsMember({"full", "search"}));
  equalize_cmd->add_option("--max-support", max_support,
                           "largest support cardinality for --support search (0 = min(|S|,|P|))");
  detail::add_common(equalize_cmd, opt);

  CLI::App* sweep_cmd =
      app.add_subcommand("skirental-sweep", "solve ski rental across buy costs with N = 2B");
  std::uint32_t b_min = 0, b_max = 0, b_factor = 2;
  sweep_cmd->add_option("--b-min", b_min, "smallest buy cost")->required()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--b-max", b_max, "largest buy cost")->required()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--b-factor", b_factor, "geometric step between buy costs")
      ->check(CLI::Range(static_cast<std::uint32_t>(2), std::numeric_limits<std::uint32_t>::max()));
  detail::add_common(sweep_cmd, opt);

  CLI::App* random_cmd =
      app.add_subcommand("random", "emit a reproducible random ratio problem as JSON");
  std::size_t rand_rows = 0, rand_cols = 0;
  double rand_lo = 1.0, rand_hi = 10.0;
  random_cmd->add_option("--rows", rand_rows, "strategy count")->required();
  random_cmd->add_option("--cols", rand_cols, "input count")->required();
  random_cmd->add_option("--lo", rand_lo, "lower entry bound (>= 1)");
  random_cmd->add_option("--hi", rand_hi, "upper entry bound");
  detail::add_common(random_cmd, opt);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&start, &opt]() {
    if (opt.deterministic) return 0.0;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    if (opt.format == "csv" && !sweep_cmd->parsed()) {
      err << "error: --format csv is only available for skirental-sweep\n";
      return 2;
    }

    if (solve_cmd->parsed()) {
      Problem problem = detail::load_problem(solve_src);
      RatioMatrix r = problem.ratio();
      SolveResult res = solve(r, detail::to_config(opt));
      json report{{"problem", detail::problem_summary(problem, r, detail::source_name(solve_src))},
                  {"solve", detail::solve_json(res)},
                  {"version", kVersion}};
      report["timing_ms"] = elapsed_ms();
      out << report.dump(2) << '\n';
      return 0;
    }

    if (bound_cmd->parsed()) {
      Problem problem = detail::load_problem(bound_src);
      RatioMatrix r = problem.ratio();
      MixedStrategy g = strategy_from_spec(bound_g, r.col_labels());
      double bound = yao_lower_bound(r, g);
      Certificate cert{CertificateKind::yao_bound, true,        bound,
                       0.0,                        opt.tol,     {},
                       g.support_labels(),         "lower bound from the supplied adversary"};
      json report{{"problem", detail::problem_summary(problem, r, detail::source_name(bound_src))},
                  {"bound", json{{"value", bound}, {"g", detail::strategy_json(g)}}},
                  {"certificates", json::array({detail::certificate_json(cert)})},
                  {"version", kVersion}};
      report["timing_ms"] = elapsed_ms();
      out << report.dump(2) << '\n';
      return 0;
    }

    if (verify_cmd->parsed()) {
      Problem problem = detail::load_problem(verify_src);
      RatioMatrix r = problem.ratio();
      MixedStrategy f = strategy_from_spec(verify_f, r.row_labels());
      MixedStrategy g = strategy_from_spec(verify_g, r.col_labels());

      json certificates = json::array();
      bool all_passed = true;
      auto push = [&](const Certificate& cert) {
        certificates.push_back(detail::certificate_json(cert));
        all_passed = all_passed && cert.passed;
      };
      if (lemma == "sufficient" || lemma == "all") push(check_sufficient(r, f, g, opt.tol));
      if (lemma == "necessary" || lemma == "all") push(check_necessary(r, f, g, opt.tol));
      if (lemma == "saddle" || lemma == "all") push(certify_saddle(r, f, g, opt.tol));

      json report{{"problem", detail::problem_summary(problem, r, detail::source_name(verify_src))},
                  {"certificates", std::move(certificates)},
                  {"version", kVersion}};
      report["timing_ms"] = elapsed_ms();
      out << report.dump(2) << '\n';
      return opt.require_pass && !all_passed ? 1 : 0;
    }

    if (equalize_cmd->parsed()) {
      Problem problem = detail::load_problem(equalize_src);
      RatioMatrix r = problem.ratio();
      json eq{{"mode", support_mode}};
      bool failed = false;

      if (support_mode == "full") {
        eq["f"] = detail::equalizer_side([&] { return full_support_equalizer_f(r); });
        eq["g"] = detail::equalizer_side([&] { return full_support_equalizer_g(r); });
        failed = eq["f"].contains("error") || eq["g"].contains("error");
      } else {
        try {
          EqualizerPair pair = support_search(r, max_support);
          eq["f"] = detail::equalizer_json(pair.f_solution);
          eq["g"] = detail::equalizer_json(pair.g_solution);
        } catch (const NoSupportFound& e) {
          eq["error"] = e.what();
          eq["error_kind"] = "no_support_found";
          failed = true;
        } catch (const EnumerationRefused& e) {
          eq["error"] = e.what();
          eq["error_kind"] = "enumeration_refused";
          eq["candidate_count"] = e.candidate_count;
          failed = true;
        }
      }

      json report{
          {"problem", detail::problem_summary(problem, r, detail::source_name(equalize_src))},
          {"equalize", std::move(eq)},
          {"version", kVersion}};
      report["timing_ms"] = elapsed_ms();
      out << report.dump(2) << '\n';
      return opt.require_pass && failed ? 1 : 0;
    }

    if (sweep_cmd->parsed()) {
      if (b_min > b_max) {
        err << "error: --b-min must not exceed --b-max\n";
        return 2;
      }
      json entries = json::array();
      for (std::uint64_t b = b_min; b <= b_max; b *= b_factor) {
        auto spec = SkiRentalSpec{static_cast<std::uint32_t>(b),
                                  static_cast<std::uint32_t>(2 * b)};
        SolveResult res = solve(ratio_from_costs(ski_rental(spec)), detail::to_config(opt));
        entries.push_back(json{{"B", b},
                               {"N", 2 * b},
                               {"value", res.value},
                               {"lower", res.lower},
                               {"upper", res.upper},
                               {"gap", res.gap},
                               {"pivots_or_iters", res.pivots_or_iters}});
      }
      if (opt.format == "csv") {
        out << "B,N,value,lower,upper,gap,pivots_or_iters\n";
        for (const json& e : entries) {
          out << e["B"] << ',' << e["N"] << ',' << detail::csv_number(e["value"].get<double>())
              << ',' << detail::csv_number(e["lower"].get<double>()) << ','
              << detail::csv_number(e["upper"].get<double>()) << ','
              << detail::csv_number(e["gap"].get<double>()) << ',' << e["pivots_or_iters"]
              << '\n';
        }
      } else {
        json report{{"sweep", std::move(entries)}, {"version", kVersion}};
        report["timing_ms"] = elapsed_ms();
        out << report.dump(2) << '\n';
      }
      return 0;
    }

    if (random_cmd->parsed()) {
      RatioMatrix r = random_instance(rand_rows, rand_cols, rand_lo, rand_hi, opt.seed);
      out << problem_to_json(Problem{std::move(r), false}).dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // unreachable: require_subcommand guarantees a branch above
}

}  // namespace yaogame::cli
