#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "twophase/errors.hpp"
#include "twophase/frame.hpp"

using namespace twophase;
using twophase::testing::make_frame;

namespace {

std::vector<int> labels(const std::vector<std::size_t>& sizes) {
  std::vector<int> out;
  for (std::size_t h = 0; h < sizes.size(); ++h) out.insert(out.end(), sizes[h], static_cast<int>(h));
  return out;
}

// Include the first n_h rows of each consecutive stratum block.
std::vector<bool> first_rows(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& n) {
  std::vector<bool> out;
  for (std::size_t h = 0; h < sizes.size(); ++h) {
    for (std::size_t k = 0; k < sizes[h]; ++k) out.push_back(k < n[h]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Columns and frames
// ---------------------------------------------------------------------------

TEST_CASE("missing entries are explicit and reading them throws") {
  Column c("X", {1.0, 2.0, 3.0}, {true, false, true});
  CHECK(c.missing_count() == 1);
  CHECK_FALSE(c.fully_observed());
  CHECK(c.at(0) == 1.0);
  CHECK_THROWS_AS(c.at(1), MissingValueError);
  CHECK_THROWS_AS(c.to_vector(), MissingValueError);
  const std::vector<std::size_t> rows{0, 2};
  CHECK(c.gather(rows)(1) == 3.0);
}

TEST_CASE("frame rejects missing phase-1 data and ragged columns") {
  FrameColumns cols;
  cols.outcome = Column("Y", {1.0, 2.0});
  cols.phase1.emplace_back(Column("Z", {1.0, 2.0}, {true, false}));
  CHECK_THROWS_AS(PopulationFrame{cols}, MissingValueError);

  FrameColumns ragged;
  ragged.outcome = Column("Y", {1.0, 2.0});
  ragged.phase1.emplace_back("Z", std::vector<double>{1.0});
  CHECK_THROWS_AS(PopulationFrame{ragged}, InconsistentDesignError);

  FrameColumns dup;
  dup.outcome = Column("Y", {1.0, 2.0});
  dup.phase1.emplace_back("Z", std::vector<double>{1.0, 2.0});
  dup.auxiliary.emplace_back("Z", std::vector<double>{1.0, 2.0});
  CHECK_THROWS_AS(PopulationFrame{dup}, InconsistentDesignError);
}

TEST_CASE("frame roles and default row ids") {
  const auto f = make_frame({0, 1, 2}, {{"Z", {1, 2, 3}}}, {{"X", {4, 5, 6}}}, {{"A", {7, 8, 9}}});
  CHECK(f.n_rows() == 3);
  CHECK(f.role("X") == ColumnRole::phase2);
  CHECK(f.role("A") == ColumnRole::auxiliary);
  CHECK(f.is_phase1("Z"));
  CHECK_FALSE(f.is_phase1("X"));
  CHECK(f.row_id() == std::vector<std::int64_t>{0, 1, 2});
  CHECK_THROWS_AS(f.column("W"), DomainError);
}

// ---------------------------------------------------------------------------
// attach_design
// ---------------------------------------------------------------------------

TEST_CASE("one stratum of four with two included") {
  const auto f = make_frame({0, 1, 2, 3}, {{"Z", {1, 2, 3, 4}}});
  const auto d = attach_design(f, {0, 0, 0, 0}, {true, false, true, false});
  for (std::size_t i = 0; i < 4; ++i) CHECK(d.pi(i) == doctest::Approx(0.5));
  CHECK(d.design_weight(0) == doctest::Approx(2.0));
  CHECK(d.design_weight(2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(d.design_weight(1), DomainError);
  CHECK(d.n_included() == 2);
}

TEST_CASE("a census has unit probabilities and weights") {
  const auto f = make_frame({0, 1, 2}, {{"Z", {1, 2, 3}}});
  const auto d = attach_design(f, {0, 1, 1}, {true, true, true});
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(d.pi(i) == 1.0);
    CHECK(d.design_weight(i) == 1.0);
  }
}

TEST_CASE("strata of 90 and 10 with 9 and 5 sampled") {
  const std::vector<std::size_t> sizes{90, 10}, n{9, 5};
  const TwoPhaseDesign d(labels(sizes), first_rows(sizes, n));
  CHECK(d.pi(0) == doctest::Approx(0.1));
  CHECK(d.pi(95) == doctest::Approx(0.5));
  // Independent evaluation of n(n-1)/(N(N-1)).
  const double expected = (9.0 * 8.0) / (90.0 * 89.0);
  CHECK(d.joint_inclusion(0, 1) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(d.joint_inclusion(0, 1) == doctest::Approx(0.008989).epsilon(1e-4));
}

TEST_CASE("phase-2 values must be present on included rows") {
  FrameColumns cols;
  cols.outcome = Column("Y", {0.0, 1.0, 2.0});
  cols.phase2.emplace_back(Column("X", {1.0, 0.0, 3.0}, {true, false, true}));
  const PopulationFrame f(std::move(cols));
  CHECK_NOTHROW(attach_design(f, {0, 0, 0}, {true, false, true}));
  CHECK_THROWS_AS(attach_design(f, {0, 0, 0}, {true, true, false}), InconsistentDesignError);
  CHECK_THROWS_AS(attach_design(f, {0, 0}, {true, true}), InconsistentDesignError);
  CHECK_THROWS_AS(attach_design(f, {0, 0, 0}, {false, false, false}), InconsistentDesignError);
}

// ---------------------------------------------------------------------------
// joint_inclusion
// ---------------------------------------------------------------------------

TEST_CASE("joint inclusion on the diagonal is the marginal") {
  const std::vector<std::size_t> sizes{10}, n{3};
  const TwoPhaseDesign d(labels(sizes), first_rows(sizes, n));
  CHECK(d.joint_inclusion(1, 1) == doctest::Approx(0.3));
  CHECK_THROWS_AS(d.joint_inclusion(0, 5), DomainError);
}

TEST_CASE("joint inclusion across strata is the product") {
  const std::vector<std::size_t> sizes{5, 2}, n{1, 1};
  const TwoPhaseDesign d(labels(sizes), first_rows(sizes, n));
  CHECK(d.pi(0) == doctest::Approx(0.2));
  CHECK(d.pi(5) == doctest::Approx(0.5));
  CHECK(d.joint_inclusion(0, 5) == doctest::Approx(0.10));
  CHECK(d.joint_inclusion(5, 0) == d.joint_inclusion(0, 5));
}

TEST_CASE("joint inclusion within a stratum of five matches enumeration of all samples") {
  const std::vector<std::size_t> sizes{5}, n{2};
  const TwoPhaseDesign d(labels(sizes), first_rows(sizes, n));
  // Enumerate the C(5,2) equally likely samples and count those containing
  // both of a fixed pair.
  int samples = 0, both = 0;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      ++samples;
      if ((a == 0 || b == 0) && (a == 1 || b == 1)) ++both;
    }
  }
  CHECK(samples == 10);
  const double enumerated = static_cast<double>(both) / samples;
  CHECK(d.joint_inclusion(0, 1) == doctest::Approx(enumerated).epsilon(1e-14));
  CHECK(d.joint_inclusion(0, 1) == doctest::Approx(2.0 * 1.0 / (5.0 * 4.0)));
  // Delta_ij = pi_ij - pi_i pi_j is non-positive within a stratum.
  CHECK(d.joint_inclusion(0, 1) - d.pi(0) * d.pi(1) <= 0.0);
}

TEST_CASE("Monte Carlo co-inclusion frequency matches the formula") {
  const std::vector<std::size_t> sizes{12, 7}, n{4, 3};
  const std::vector<int> strata = labels(sizes);
  const TwoPhaseDesign d(strata, first_rows(sizes, n));
  std::mt19937_64 rng(20240601);
  const int draws = 10000;
  int within = 0, across = 0;
  for (int r = 0; r < draws; ++r) {
    const auto inc = twophase::testing::stratified_draw(strata, n, rng);
    within += inc[2] && inc[7];
    across += inc[2] && inc[15];
  }
  auto check_freq = [&](int hits, double p) {
    const double se = std::sqrt(p * (1.0 - p) / draws);
    CHECK(std::abs(static_cast<double>(hits) / draws - p) < 3.0 * se);
  };
  check_freq(within, d.joint_inclusion(0, 1));
  check_freq(across, d.joint_inclusion(0, 12));
}

TEST_CASE("Horvitz-Thompson weights reproduce stratum sizes") {
  const std::vector<std::size_t> sizes{13, 40, 7}, n{5, 11, 7};
  const TwoPhaseDesign d(labels(sizes), first_rows(sizes, n));
  std::vector<double> total(3, 0.0);
  for (std::size_t i : d.included_rows()) total[d.stratum_index(i)] += d.design_weight(i);
  for (std::size_t h = 0; h < 3; ++h) {
    CHECK(total[h] == doctest::Approx(static_cast<double>(sizes[h])).epsilon(1e-14));
    CHECK(d.strata()[h].population == sizes[h]);
    CHECK(d.strata()[h].sampled == n[h]);
  }
}

// ---------------------------------------------------------------------------
// ModelSpec
// ---------------------------------------------------------------------------

TEST_CASE("model spec validation") {
  const auto f = make_frame({0, 1, 2}, {{"Z", {1, 2, 3}}}, {{"X", {4, 5, 6}}});
  ModelSpec spec{Family::gaussian_identity, "Y", {"X", "Z"}, std::nullopt};
  CHECK_NOTHROW(validate(spec, f));
  CHECK(spec.coefficient_names() == std::vector<std::string>{"(Intercept)", "X", "Z"});
  CHECK(phase1_regressors(spec, f) == std::vector<std::string>{"Z"});
  CHECK(phase2_regressors(spec, f) == std::vector<std::string>{"X"});

  spec.family = Family::binomial_logit;
  CHECK_THROWS_AS(validate(spec, f), DomainError);  // outcome 2 is not 0/1
  spec.family = Family::gaussian_identity;
  spec.regressors = {"W"};
  CHECK_THROWS_AS(validate(spec, f), DomainError);
  CHECK(parse_family("binomial") == Family::binomial_logit);
  CHECK_THROWS_AS(parse_family("poisson"), DomainError);
}
