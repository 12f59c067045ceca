// Acceptance suite: each criterion runs standalone and prints one PASS/FAIL
// line. Run with no arguments for the full suite or with a criterion number
// (1-9) for a single check. Exit code 0 only when every executed criterion
// passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "yaogame/certify.hpp"
#include "yaogame/cli.hpp"
#include "yaogame/equalize.hpp"
#include "yaogame/game.hpp"
#include "yaogame/problems.hpp"
#include "yaogame/solver.hpp"

using namespace yaogame;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }

  void note(const std::string& what) {
    detail << (detail.str().empty() ? "" : "; ") << what;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

RatioMatrix nth_instance(std::uint64_t k) {
  auto [rows, cols] = test_helpers::instance_dims(k);
  return random_instance(rows, cols, 1.0, 10.0, k);
}

// 1. Ski rental B=4, N=8: LP value and strategy against the closed-form
//    anchor, cross-checked by fictitious play and the equalizer.
Check criterion_ski_anchor() {
  Check c;
  auto start = std::chrono::steady_clock::now();

  RatioMatrix r = ratio_from_costs(ski_rental({4, 8}));
  SolveResult lp = solve(r);
  const double anchor = 256.0 / 175.0;
  c.require(std::abs(lp.value - anchor) <= 1e-9, "LP value off the 256/175 anchor");

  const double expected_f[] = {27.0 / 175, 36.0 / 175, 48.0 / 175, 64.0 / 175};
  for (std::size_t s = 0; s < 4; ++s) {
    c.require(std::abs(lp.f_star.weight(s) - expected_f[s]) <= 1e-7,
              "f* component " + std::to_string(s + 1) + " off by more than 1e-7");
  }

  SolverConfig fp_config;
  fp_config.fp_iterations = 100000;
  SolveResult fp = fictitious_play(r, fp_config);
  c.require(std::abs(fp.value - lp.value) <= 5e-3, "fictitious play disagrees beyond 5e-3");

  EqualizerSolution eq = full_support_equalizer_f(r);
  c.require(std::abs(eq.constant - lp.value) <= 1e-8, "equalizer constant disagrees with LP");
  for (std::size_t s = 0; s < 4; ++s) {
    c.require(std::abs(eq.strategy.weight(s) - lp.f_star.weight(s)) <= 1e-8,
              "equalizer strategy disagrees with LP");
  }

  double elapsed = seconds_since(start);
  c.require(elapsed < 1.0, "runtime exceeded 1 s");
  c.detail << (c.detail.str().empty() ? "" : "; ") << "value=" << lp.value
           << ", elapsed=" << elapsed << "s";
  return c;
}

// 2. Ski-rental sweep against 1/(1-(1-1/B)^B), strict growth, and the
//    e/(e-1) limit gap at B=64.
Check criterion_ski_sweep() {
  Check c;
  auto start = std::chrono::steady_clock::now();

  double previous = 0.0, last = 0.0;
  for (std::uint32_t b : {2u, 4u, 8u, 16u, 32u, 64u}) {
    double value = solve(ratio_from_costs(ski_rental({b, 2 * b}))).value;
    double closed_form = 1.0 / (1.0 - std::pow(1.0 - 1.0 / b, static_cast<int>(b)));
    c.require(std::abs(value - closed_form) <= 1e-7,
              "B=" + std::to_string(b) + " misses the closed form");
    c.require(value > previous, "values not strictly increasing at B=" + std::to_string(b));
    previous = value;
    last = value;
  }
  const double limit = std::exp(1.0) / (std::exp(1.0) - 1.0);
  c.require(std::abs(last - limit) < 0.013, "B=64 value too far from e/(e-1)");

  double elapsed = seconds_since(start);
  c.require(elapsed < 10.0, "runtime exceeded 10 s");
  c.detail << (c.detail.str().empty() ? "" : "; ") << "value(64)=" << last
           << ", |gap to e/(e-1)|=" << std::abs(last - limit) << ", elapsed=" << elapsed << "s";
  return c;
}

// 3. Strong duality on 200 random instances, 1x1 through 20x20.
Check criterion_strong_duality() {
  Check c;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    SolveResult res = solve(nth_instance(k));
    worst = std::max(worst, res.gap);
    c.require(res.gap <= 1e-7, "gap > 1e-7 at seed " + std::to_string(k));
    if (!c.ok) break;
  }
  std::ostringstream os;
  os << "max gap " << worst;
  c.note(os.str());
  return c;
}

// 4. Lower bounds from random adversaries never exceed the solved value.
Check criterion_weak_duality() {
  Check c;
  for (std::uint64_t k = 0; k < 200 && c.ok; ++k) {
    RatioMatrix r = nth_instance(k);
    double value = solve(r).value;
    Xoshiro256StarStar rng(k + 1000000);
    for (int trial = 0; trial < 10; ++trial) {
      MixedStrategy g = test_helpers::random_strategy(r.col_labels(), rng);
      c.require(yao_lower_bound(r, g) <= value + 1e-9,
                "bound exceeded value at seed " + std::to_string(k));
    }
  }
  if (c.ok) c.note("2000 adversaries checked");
  return c;
}

// 5. Support constancy at the solver optimum, and no off-support strategy
//    does better than the support constant.
Check criterion_necessary_at_optimum() {
  Check c;
  for (std::uint64_t k = 0; k < 200 && c.ok; ++k) {
    RatioMatrix r = nth_instance(k);
    SolveResult res = solve(r);
    Certificate cert = check_necessary(r, res.f_star, res.g_star, 1e-6);
    c.require(cert.passed, "support constancy failed at seed " + std::to_string(k));
    std::vector<double> u = expected_ratio_u_all(r, res.g_star);
    double min_u = *std::min_element(u.begin(), u.end());
    c.require(std::abs(min_u - cert.witnessed_constant) <= 1e-6,
              "an off-support strategy beats the constant at seed " + std::to_string(k));
  }
  return c;
}

// 6. Paired full-support equalizers witness the game value.
Check criterion_equalizer_soundness() {
  Check c;
  std::size_t paired = 0;
  for (std::uint64_t k = 0; k < 200 && c.ok; ++k) {
    RatioMatrix r = nth_instance(k);
    std::optional<EqualizerSolution> f_eq, g_eq;
    try {
      f_eq = full_support_equalizer_f(r);
      g_eq = full_support_equalizer_g(r);
    } catch (const Error&) {
      continue;
    }
    ++paired;
    Certificate cert = check_sufficient(r, f_eq->strategy, g_eq->strategy, 1e-6);
    c.require(cert.passed, "paired equalizers fail the sufficient check at seed " +
                               std::to_string(k));
    c.require(std::abs(f_eq->constant - solve(r).value) <= 1e-7,
              "equalizer constant misses the value at seed " + std::to_string(k));
  }

  EqualizerSolution toy = full_support_equalizer_f(RatioMatrix::from_rows({{1, 3}, {2, 1}}));
  c.require(std::abs(toy.constant - 5.0 / 3.0) <= 1e-9, "2x2 constant is not 5/3");
  c.note(std::to_string(paired) + " instances with both equalizers feasible");
  return c;
}

// 7. Saddle certification at the optimum, and the constructed counterexample
//    fails for the documented reason.
Check criterion_saddle_coherence() {
  Check c;
  for (std::uint64_t k = 0; k < 200 && c.ok; ++k) {
    RatioMatrix r = nth_instance(k);
    SolveResult res = solve(r);
    c.require(certify_saddle(r, res.f_star, res.g_star, 1e-6).passed,
              "saddle check failed at seed " + std::to_string(k));
  }

  RatioMatrix two = RatioMatrix::from_rows({{1, 3}, {2, 1}});
  MixedStrategy f_opt(two.row_labels(), {1.0 / 3, 2.0 / 3});
  Certificate counter =
      certify_saddle(two, f_opt, MixedStrategy::uniform(two.col_labels()), 1e-6);
  c.require(!counter.passed, "counterexample pair unexpectedly certified");
  c.require(counter.details.find("f is not a best response to g") != std::string::npos,
            "counterexample failure reason not documented");
  return c;
}

// 8. Row-first and column-first evaluations of H agree to 1e-12.
Check criterion_fubini() {
  Check c;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 1000 && c.ok; ++k) {
    RatioMatrix r = nth_instance(k % 200);
    Xoshiro256StarStar rng(k + 2000000);
    MixedStrategy f = test_helpers::random_strategy(r.row_labels(), rng);
    MixedStrategy g = test_helpers::random_strategy(r.col_labels(), rng);

    std::vector<double> u = expected_ratio_u_all(r, g);
    std::vector<double> v = expected_ratio_v_all(r, f);
    double row_first = 0.0, col_first = 0.0;
    for (std::size_t s = 0; s < r.rows(); ++s) row_first += f.weight(s) * u[s];
    for (std::size_t p = 0; p < r.cols(); ++p) col_first += g.weight(p) * v[p];
    worst = std::max(worst, std::abs(row_first - col_first));
    c.require(std::abs(row_first - col_first) <= 1e-12,
              "summation orders disagree at seed " + std::to_string(k));
  }
  std::ostringstream os;
  os << "max discrepancy " << worst;
  c.note(os.str());
  return c;
}

// 9. Byte-identical deterministic reports and bit-identical generators.
Check criterion_determinism() {
  Check c;
  std::vector<std::string> sweep_args = {"skirental-sweep", "--b-min", "2",
                                         "--b-max",         "64",      "--deterministic"};
  std::ostringstream out_a, out_b, err_a, err_b;
  int code_a = cli::run(sweep_args, out_a, err_a);
  int code_b = cli::run(sweep_args, out_b, err_b);
  c.require(code_a == 0 && code_b == 0, "sweep did not exit cleanly");
  c.require(out_a.str() == out_b.str(), "deterministic sweep reports differ");

  RatioMatrix first = random_instance(5, 7, 1.0, 10.0, 123);
  RatioMatrix second = random_instance(5, 7, 1.0, 10.0, 123);
  c.require(first.r() == second.r(), "random_instance is not bit-identical across runs");
  return c;
}

struct Criterion {
  std::string name;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"ski-rental exact anchor", criterion_ski_anchor},
      {"ski-rental sweep vs closed form", criterion_ski_sweep},
      {"strong duality on 200 random games", criterion_strong_duality},
      {"weak duality for random adversaries", criterion_weak_duality},
      {"support constancy at the optimum", criterion_necessary_at_optimum},
      {"paired equalizers witness the value", criterion_equalizer_soundness},
      {"saddle certification coherence", criterion_saddle_coherence},
      {"summation-order agreement for H", criterion_fubini},
      {"deterministic reports and generators", criterion_determinism},
  };

  std::size_t only = 0;
  if (argc > 1) {
    only = static_cast<std::size_t>(std::atoi(argv[1]));
    if (only < 1 || only > criteria.size()) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
      return 2;
    }
  }

  bool all_ok = true;
  for (std::size_t i = 1; i <= criteria.size(); ++i) {
    if (only != 0 && i != only) continue;
    Check check = criteria[i - 1].run();
    all_ok = all_ok && check.ok;
    std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << i << ": "
              << criteria[i - 1].name;
    if (!check.detail.str().empty()) std::cout << " (" << check.detail.str() << ")";
    std::cout << '\n';
  }
  return all_ok ? 0 : 1;
}
