#include "gmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "gmono/errors.hpp"
#include "gmono/scalar.hpp"

namespace gmono {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Per-sample accumulator, merged into the report only when the whole sample
// evaluates cleanly, so a throwing sample leaves no partial rows behind.
struct SampleEval {
  std::vector<SweepRow> rows;
  std::int64_t pair_count = 0;
  std::int64_t entangled_pair_count = 0;
  double min_tau_gap = kInf;
  double min_chain_gap = kInf;
  std::array<double, 6> min_flag_slack{kInf, kInf, kInf, kInf, kInf, kInf};
};

void fold_slack(double& acc, double slack) {
  if (std::isfinite(slack)) acc = std::min(acc, slack);
}

void fold_bounds(SampleEval& ev, const TangleBoundReport& b) {
  fold_slack(ev.min_tau_gap, b.bound_zeta - b.tau);
  fold_slack(ev.min_chain_gap, b.bound_delta - b.bound_zeta);
  fold_slack(ev.min_flag_slack[0], b.zeta1_positive.slack);
  fold_slack(ev.min_flag_slack[1], b.zeta1_le_minus_two_cminus.slack);
  fold_slack(ev.min_flag_slack[2], b.minus_two_cminus_le_sqrt_delta.slack);
  fold_slack(ev.min_flag_slack[3], b.zeta2_ge_zeta2_prime.slack);
  fold_slack(ev.min_flag_slack[4], b.zeta2_prime_ge_four.slack);
  fold_slack(ev.min_flag_slack[5], b.ratio_le_quarter_delta.slack);
}

SampleEval evaluate_sample(const GaussianState& state, std::int64_t index,
                           std::uint64_t seed) {
  const int n = state.n();
  SampleEval ev;
  ev.rows.reserve(n);
  for (int pivot = 0; pivot < n; ++pivot) {
    const double lhs = pure_tangle(state, pivot);
    double sum_rhs = 0.0;
    for (int partner = 0; partner < n; ++partner) {
      if (partner == pivot) continue;
      const PairReport pr = analyze_pair(state, pivot, partner);
      ++ev.pair_count;
      if (pr.entangled) {
        ++ev.entangled_pair_count;
        fold_bounds(ev, *pr.bounds);
      }
      sum_rhs += pr.tau;
    }
    ev.rows.push_back({index, seed, n, pivot, lhs, sum_rhs, lhs - sum_rhs});
  }
  return ev;
}

}  // namespace

PairReport analyze_pair(const GaussianState& state, int pivot, int partner) {
  PairReport rep;
  rep.pivot = pivot;
  rep.partner = partner;
  const GaussianState red = reduce(state, {pivot, partner});
  rep.sf = standard_form(red.cm);
  rep.delta = delta_invariant(state, pivot, partner);
  rep.entangled = is_entangled(rep.sf);
  if (rep.entangled) {
    rep.bounds = bound_report(rep.sf);
    rep.tau = rep.bounds->tau;
  } else {
    rep.tau = 0.0;
  }
  return rep;
}

MonogamyResult monogamy_residual(const GaussianState& state, int pivot,
                                 double tol) {
  const int n = state.n();
  if (n < 2)
    throw invalid_input("monogamy_residual: at least two modes required");
  if (pivot < 0 || pivot >= n)
    throw invalid_input("monogamy_residual: pivot out of range");
  if (!is_pure(state, tol))
    throw invalid_input(
        "monogamy_residual: state is not pure within tolerance");

  MonogamyResult res;
  res.lhs = pure_tangle(state, pivot);
  res.per_partner.reserve(n - 1);
  double sum = 0.0;
  for (int partner = 0; partner < n; ++partner) {
    if (partner == pivot) continue;
    const GaussianState red = reduce(state, {pivot, partner});
    const double tau = mixed_tangle(standard_form(red.cm));
    res.per_partner.push_back({partner, tau});
    sum += tau;
  }
  res.residual = res.lhs - sum;
  return res;
}

std::uint64_t sample_seed(std::uint64_t master_seed, std::int64_t index) {
  return master_seed ^
         (static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ULL);
}

SweepReport sweep(int n_modes, std::int64_t samples, double squeeze_max,
                  std::uint64_t seed, double tol) {
  if (n_modes < 2) throw invalid_input("sweep: at least two modes required");
  if (samples < 0) throw invalid_input("sweep: negative sample count");
  if (!(squeeze_max >= 0.0))
    throw invalid_input("sweep: squeeze_max must be nonnegative");

  SweepReport rep;
  rep.n_modes = n_modes;
  rep.samples = samples;
  rep.squeeze_max = squeeze_max;
  rep.seed = seed;
  rep.tol = tol;
  rep.min_residual = kInf;
  rep.max_residual = -kInf;
  rep.min_tau_gap = kInf;
  rep.min_chain_gap = kInf;
  rep.min_flag_slack.fill(kInf);
  rep.rows.reserve(static_cast<std::size_t>(samples) * n_modes);

  double residual_sum = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const std::uint64_t s = sample_seed(seed, i);
    try {
      const GaussianState state = random_pure_state(n_modes, squeeze_max, s);
      SampleEval ev = evaluate_sample(state, i, s);
      for (const SweepRow& row : ev.rows) {
        ++rep.evaluations;
        if (row.residual < -tol) ++rep.violations;
        rep.min_residual = std::min(rep.min_residual, row.residual);
        rep.max_residual = std::max(rep.max_residual, row.residual);
        residual_sum += row.residual;
        rep.rows.push_back(row);
      }
      rep.pair_count += ev.pair_count;
      rep.entangled_pair_count += ev.entangled_pair_count;
      fold_slack(rep.min_tau_gap, ev.min_tau_gap);
      fold_slack(rep.min_chain_gap, ev.min_chain_gap);
      for (int k = 0; k < 6; ++k)
        fold_slack(rep.min_flag_slack[k], ev.min_flag_slack[k]);
    } catch (const error& e) {
      rep.diagnostics.push_back("sample " + std::to_string(i) + " (seed " +
                                std::to_string(s) + "): " + e.what());
    }
  }

  rep.mean_residual =
      rep.evaluations > 0 ? residual_sum / rep.evaluations : 0.0;
  if (rep.evaluations == 0) {
    rep.min_residual = 0.0;
    rep.max_residual = 0.0;
  }
  // Aggregates nothing folded into (no entangled pairs, or pure-branch
  // pairs only for the zeta2 flags) read 0 rather than +inf.
  if (!std::isfinite(rep.min_tau_gap)) rep.min_tau_gap = 0.0;
  if (!std::isfinite(rep.min_chain_gap)) rep.min_chain_gap = 0.0;
  for (double& slack : rep.min_flag_slack)
    if (!std::isfinite(slack)) slack = 0.0;
  return rep;
}

}  // namespace gmono
