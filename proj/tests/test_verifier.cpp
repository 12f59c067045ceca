#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <optional>
#include <vector>

#include "helpers.hpp"
#include "yaogame/certify.hpp"
#include "yaogame/equalize.hpp"
#include "yaogame/problems.hpp"
#include "yaogame/solver.hpp"

using namespace yaogame;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kTol = 1e-6;

RatioMatrix two_by_two() {
  return RatioMatrix::from_rows({{1, 3}, {2, 1}});
}

MixedStrategy f_opt(const RatioMatrix& r) {
  return MixedStrategy(r.row_labels(), {1.0 / 3, 2.0 / 3});
}

MixedStrategy g_opt(const RatioMatrix& r) {
  return MixedStrategy(r.col_labels(), {2.0 / 3, 1.0 / 3});
}

}  // namespace

TEST_CASE("lower bound from a randomized input", "[verifier]") {
  RatioMatrix r = two_by_two();
  CHECK_THAT(yao_lower_bound(r, MixedStrategy::uniform(r.col_labels())), WithinAbs(1.5, 1e-15));
  CHECK_THAT(yao_lower_bound(r, g_opt(r)), WithinAbs(5.0 / 3, 1e-12));
  CHECK(yao_lower_bound(r, MixedStrategy::point(r.col_labels(), "p2")) == 1.0);
}

TEST_CASE("sufficient check demands both functionals constant everywhere", "[verifier]") {
  RatioMatrix r = two_by_two();

  Certificate pass = check_sufficient(r, f_opt(r), g_opt(r), kTol);
  CHECK(pass.passed);
  CHECK_THAT(pass.witnessed_constant, WithinAbs(5.0 / 3, 1e-12));

  Certificate fail = check_sufficient(r, MixedStrategy::uniform(r.row_labels()),
                                      MixedStrategy::uniform(r.col_labels()), kTol);
  CHECK_FALSE(fail.passed);

  // Ski rental: V_f is constant under the optimal algorithm, but a uniform
  // adversary does not equalize U_g, and the check requires both.
  RatioMatrix ski = ratio_from_costs(ski_rental({4, 8}));
  MixedStrategy f_ski(ski.row_labels(),
                      {27.0 / 175, 36.0 / 175, 48.0 / 175, 64.0 / 175});
  Certificate ski_fail =
      check_sufficient(ski, f_ski, MixedStrategy::uniform(ski.col_labels()), kTol);
  CHECK_FALSE(ski_fail.passed);
  CHECK_THAT(ski_fail.details, ContainsSubstring("U_g is not constant"));
}

TEST_CASE("necessary check quantifies over supports only", "[verifier]") {
  RatioMatrix r = two_by_two();

  Certificate pass = check_necessary(r, f_opt(r), g_opt(r), kTol);
  CHECK(pass.passed);
  CHECK_THAT(pass.witnessed_constant, WithinAbs(5.0 / 3, 1e-12));
  CHECK(pass.f_support == Labels{"s1", "s2"});
  CHECK(pass.g_support == Labels{"p1", "p2"});

  RatioMatrix pure = RatioMatrix::from_rows({{1, 2}, {3, 4}});
  Certificate singleton = check_necessary(pure, MixedStrategy::point(pure.row_labels(), "s1"),
                                          MixedStrategy::point(pure.col_labels(), "p2"), kTol);
  CHECK(singleton.passed);

  Certificate fail = check_necessary(r, MixedStrategy::uniform(r.row_labels()), g_opt(r), kTol);
  CHECK_FALSE(fail.passed);  // V_f = (1.5, 2) is not constant on support(g)
}

TEST_CASE("saddle certification is mutual best response", "[verifier]") {
  RatioMatrix r = two_by_two();

  Certificate pass = certify_saddle(r, f_opt(r), g_opt(r), kTol);
  CHECK(pass.passed);
  CHECK_THAT(pass.witnessed_constant, WithinAbs(5.0 / 3, 1e-12));

  // V_f is constant so the uniform g maximizes H(f,.), yet f is not a best
  // response to uniform (s2 achieves 1.5 < 5/3).
  Certificate fail = certify_saddle(r, f_opt(r), MixedStrategy::uniform(r.col_labels()), kTol);
  CHECK_FALSE(fail.passed);
  CHECK_THAT(fail.details, ContainsSubstring("f is not a best response to g"));

  RatioMatrix pure = RatioMatrix::from_rows({{1, 2}, {3, 4}});
  Certificate pure_pass = certify_saddle(pure, MixedStrategy::point(pure.row_labels(), "s1"),
                                         MixedStrategy::point(pure.col_labels(), "p2"), kTol);
  CHECK(pure_pass.passed);
  CHECK_THAT(pure_pass.witnessed_constant, WithinAbs(2.0, 1e-15));
}

TEST_CASE("duality gap of strategy pairs", "[verifier]") {
  RatioMatrix r = two_by_two();
  CHECK_THAT(gap(r, f_opt(r), g_opt(r)), WithinAbs(0.0, 1e-12));
  CHECK_THAT(gap(r, MixedStrategy::uniform(r.row_labels()),
                 MixedStrategy::uniform(r.col_labels())),
             WithinAbs(0.5, 1e-15));

  RatioMatrix single = RatioMatrix::from_rows({{4.2}});
  CHECK(gap(single, MixedStrategy::point(single.row_labels(), "s1"),
            MixedStrategy::point(single.col_labels(), "p1")) == 0.0);
}

TEST_CASE("lower bounds never exceed the solved value", "[verifier][property]") {
  for (std::uint64_t k = 0; k < 60; ++k) {
    auto [rows, cols] = test_helpers::instance_dims(k * 2);
    RatioMatrix r = random_instance(rows, cols, 1.0, 10.0, k + 31000);
    double value = solve(r).value;
    Xoshiro256StarStar rng(k);
    for (int trial = 0; trial < 5; ++trial) {
      MixedStrategy g = test_helpers::random_strategy(r.col_labels(), rng);
      REQUIRE(yao_lower_bound(r, g) <= value + 1e-9);
    }
  }
}

TEST_CASE("a passing sufficient check implies the weaker certificates", "[verifier][property]") {
  // Build pairs that equalize by construction wherever the full-support
  // equalizers exist, then check the logical ordering of the conditions.
  std::size_t confirmed = 0;
  for (std::uint64_t k = 0; k < 150; ++k) {
    std::size_t dim = (k % 3) + 2;
    RatioMatrix r = random_instance(dim, dim, 1.0, 10.0, k + 52000);
    std::optional<EqualizerSolution> f_eq, g_eq;
    try {
      f_eq = full_support_equalizer_f(r);
      g_eq = full_support_equalizer_g(r);
    } catch (const Error&) {
      continue;
    }
    // Paired equalizers force both functionals constant, so the check must pass.
    Certificate sufficient = check_sufficient(r, f_eq->strategy, g_eq->strategy, kTol);
    REQUIRE(sufficient.passed);
    ++confirmed;
    REQUIRE(check_necessary(r, f_eq->strategy, g_eq->strategy, kTol).passed);
    REQUIRE(certify_saddle(r, f_eq->strategy, g_eq->strategy, kTol).passed);
    REQUIRE_THAT(sufficient.witnessed_constant, WithinAbs(solve(r).value, kTol + 1e-9));
  }
  REQUIRE(confirmed > 10);  // the suite must actually exercise the implication
}

TEST_CASE("solver optima satisfy the support conditions", "[verifier][property]") {
  for (std::uint64_t k = 0; k < 60; ++k) {
    auto [rows, cols] = test_helpers::instance_dims(k * 3 + 1);
    RatioMatrix r = random_instance(rows, cols, 1.0, 10.0, k + 64000);
    SolveResult res = solve(r);
    REQUIRE(res.gap <= 1e-9);

    Certificate necessary = check_necessary(r, res.f_star, res.g_star, kTol);
    REQUIRE(necessary.passed);
    REQUIRE(necessary.max_deviation <= necessary.tolerance);
    std::vector<double> u = expected_ratio_u_all(r, res.g_star);
    REQUIRE_THAT(*std::min_element(u.begin(), u.end()),
                 WithinAbs(necessary.witnessed_constant, kTol));

    Certificate saddle = certify_saddle(r, res.f_star, res.g_star, kTol);
    REQUIRE(saddle.passed);
    REQUIRE(saddle.max_deviation <= saddle.tolerance);
    REQUIRE(std::isfinite(saddle.witnessed_constant));
  }
}

TEST_CASE("pair gaps are never negative", "[verifier][property]") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    auto [rows, cols] = test_helpers::instance_dims(k);
    RatioMatrix r = random_instance(rows, cols, 1.0, 10.0, k + 8);
    Xoshiro256StarStar rng(k + 17);
    MixedStrategy f = test_helpers::random_strategy(r.row_labels(), rng);
    MixedStrategy g = test_helpers::random_strategy(r.col_labels(), rng);
    REQUIRE(gap(r, f, g) >= -1e-12);
  }
}

TEST_CASE("certificates reject mismatched labels", "[verifier]") {
  RatioMatrix r = two_by_two();
  MixedStrategy wrong(Labels{"x", "y"}, {0.5, 0.5});
  CHECK_THROWS_AS(yao_lower_bound(r, wrong), LabelMismatch);
  CHECK_THROWS_AS(check_sufficient(r, wrong, g_opt(r), kTol), LabelMismatch);
  CHECK_THROWS_AS(check_necessary(r, f_opt(r), wrong, kTol), LabelMismatch);
  CHECK_THROWS_AS(certify_saddle(r, wrong, wrong, kTol), LabelMismatch);
  CHECK_THROWS_AS(gap(r, f_opt(r), wrong), LabelMismatch);
}
