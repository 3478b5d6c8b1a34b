#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <set>

#include <gmono/errors.hpp>
#include <gmono/monogamy.hpp>
#include <gmono/random.hpp>
#include <gmono/state.hpp>
#include <gmono/two_mode.hpp>

#include "helpers.hpp"

using namespace gmono;

namespace {

GaussianState vacuum(int n) {
  return {Eigen::MatrixXd::Identity(2 * n, 2 * n), Eigen::VectorXd::Zero(2 * n)};
}

}  // namespace

TEST_SUITE("monogamy") {

TEST_CASE("vacuum: everything is zero") {
  const MonogamyResult r = monogamy_residual(vacuum(3), 1);
  CHECK(r.lhs == 0.0);
  CHECK(r.residual == 0.0);
  REQUIRE(r.per_partner.size() == 2);
  CHECK(r.per_partner[0].mode == 0);
  CHECK(r.per_partner[1].mode == 2);
  CHECK(r.per_partner[0].tau == 0.0);
  CHECK(r.per_partner[1].tau == 0.0);
}

TEST_CASE("two-mode squeezed vacuum saturates the inequality") {
  // e^{2r} = 2: the pivot tangle is 1/4 and the single partner carries
  // all of it, so the residual vanishes.
  const double r = 0.5 * std::log(2.0);
  const GaussianState st{testutil::tmsv_cm(r), Eigen::VectorXd::Zero(4)};
  for (int pivot : {0, 1}) {
    const MonogamyResult mr = monogamy_residual(st, pivot);
    CHECK(mr.lhs == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(mr.per_partner.size() == 1);
    CHECK(mr.per_partner[0].tau == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(mr.residual) < 1e-9);
  }
}

TEST_CASE("pure two-mode states always saturate") {
  for (std::uint64_t seed = 9000; seed < 9100; ++seed) {
    const GaussianState st = random_pure_state(2, 1.5, seed);
    const MonogamyResult mr = monogamy_residual(st, 0);
    CHECK(std::abs(mr.residual) < 1e-9);
  }
}

TEST_CASE("input validation") {
  const GaussianState thermal{1.7 * Eigen::MatrixXd::Identity(6, 6),
                              Eigen::VectorXd::Zero(6)};
  CHECK_THROWS_AS(monogamy_residual(thermal, 0), invalid_input);
  CHECK_THROWS_AS(monogamy_residual(vacuum(3), 3), invalid_input);
  CHECK_THROWS_AS(monogamy_residual(vacuum(3), -1), invalid_input);
  CHECK_THROWS_AS(monogamy_residual(vacuum(1), 0), invalid_input);
}

TEST_CASE("regression: three-mode state, seed 7, squeeze 1.5") {
  const GaussianState st = random_pure_state(3, 1.5, 7);
  const MonogamyResult mr = monogamy_residual(st, 0);
  CHECK(mr.lhs == doctest::Approx(5.3460960155121224).epsilon(1e-12));
  REQUIRE(mr.per_partner.size() == 2);
  CHECK(mr.per_partner[0].tau ==
        doctest::Approx(0.085870248569984098).epsilon(1e-10));
  CHECK(mr.per_partner[1].tau ==
        doctest::Approx(0.45072754772038343).epsilon(1e-10));
  CHECK(mr.residual == doctest::Approx(4.809498219221755).epsilon(1e-10));
  CHECK(mr.residual >= -kMonogamyTol);
}

TEST_CASE("residual is invariant under local symplectics") {
  Rng rng(2718);
  for (int trial = 0; trial < 30; ++trial) {
    const GaussianState st = random_pure_state(3, 1.2, 5000 + trial);
    const MonogamyResult base = monogamy_residual(st, 0);

    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(6, 6);
    for (int m = 0; m < 3; ++m)
      s.block<2, 2>(2 * m, 2 * m) = testutil::local_symplectic(
          rng.uniform(0.0, M_PI), rng.uniform(-0.6, 0.6),
          rng.uniform(0.0, M_PI));
    const GaussianState rotated{s * st.cm * s.transpose(),
                                Eigen::VectorXd::Zero(6)};
    const MonogamyResult moved = monogamy_residual(rotated, 0);
    const double scale = 1.0 + std::abs(base.lhs) + std::abs(base.residual);
    CHECK(std::abs(moved.lhs - base.lhs) < 1e-8 * scale);
    CHECK(std::abs(moved.residual - base.residual) < 1e-8 * scale);
  }
}

TEST_CASE("sweep: determinism and aggregate consistency") {
  const SweepReport a = sweep(3, 60, 1.0, 424243);
  const SweepReport b = sweep(3, 60, 1.0, 424243);

  REQUIRE(a.rows.size() == 180);  // 60 samples x 3 pivots
  REQUIRE(b.rows.size() == 180);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].seed == b.rows[i].seed);
    CHECK(a.rows[i].pivot == b.rows[i].pivot);
    // bitwise equality, not approximate: same seed must mean same numbers
    CHECK(a.rows[i].lhs == b.rows[i].lhs);
    CHECK(a.rows[i].sum_rhs == b.rows[i].sum_rhs);
    CHECK(a.rows[i].residual == b.rows[i].residual);
  }

  CHECK(a.violations == 0);
  CHECK(a.evaluations == 180);
  CHECK(a.pair_count == 360);
  CHECK(a.diagnostics.empty());
  CHECK(a.min_residual <= a.mean_residual);
  CHECK(a.mean_residual <= a.max_residual);
  CHECK(a.min_residual >= -1e-9);
  CHECK(a.min_tau_gap >= -1e-9);
  CHECK(a.min_chain_gap >= -1e-9);
  for (double slack : a.min_flag_slack) CHECK(slack >= -1e-9);
}

TEST_CASE("sweep: zero squeezing gives the vacuum ensemble") {
  const SweepReport rep = sweep(3, 25, 0.0, 7);
  CHECK(rep.entangled_pair_count == 0);
  for (const SweepRow& row : rep.rows) {
    CHECK(row.lhs == 0.0);
    CHECK(row.sum_rhs == 0.0);
    CHECK(row.residual == 0.0);
  }
  CHECK(rep.min_residual == 0.0);
  CHECK(rep.max_residual == 0.0);
  CHECK(rep.mean_residual == 0.0);
}

TEST_CASE("sweep: the inequality holds on a random ensemble") {
  const SweepReport rep = sweep(3, 100, 1.0, 31415);
  CHECK(rep.violations == 0);
  CHECK(rep.entangled_pair_count > 0);
}

TEST_CASE("sweep input validation") {
  CHECK_THROWS_AS(sweep(1, 10, 1.0, 0), invalid_input);
  CHECK_THROWS_AS(sweep(3, -1, 1.0, 0), invalid_input);
  CHECK_THROWS_AS(sweep(3, 10, -0.5, 0), invalid_input);
}

TEST_CASE("per-sample seeds are distinct and recorded") {
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(sample_seed(42, i));
  CHECK(seen.size() == 1000);

  const SweepReport rep = sweep(3, 10, 1.0, 42);
  for (const SweepRow& row : rep.rows)
    CHECK(row.seed == sample_seed(42, row.sample_index));
}

TEST_CASE("analyze_pair is consistent with the low-level pieces") {
  for (std::uint64_t seed : {11ull, 12ull, 13ull, 14ull, 15ull}) {
    const GaussianState st = random_pure_state(3, 1.2, seed);
    for (int partner : {1, 2}) {
      const PairReport pr = analyze_pair(st, 0, partner);
      CHECK(pr.pivot == 0);
      CHECK(pr.partner == partner);
      CHECK(pr.delta ==
            doctest::Approx(delta_invariant(st, 0, partner)).epsilon(1e-12));
      CHECK(pr.entangled == pr.bounds.has_value());
      if (pr.bounds) {
        CHECK(pr.tau == pr.bounds->tau);
        CHECK(pr.tau ==
              doctest::Approx(mixed_tangle(pr.sf)).epsilon(1e-12));
      } else {
        CHECK(pr.tau == 0.0);
      }
    }
  }
}

}  // TEST_SUITE
