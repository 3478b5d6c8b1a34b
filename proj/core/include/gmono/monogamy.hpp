#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmono/state.hpp"
#include "gmono/two_mode.hpp"

namespace gmono {

/// Default tolerance separating numerical noise from genuine monogamy
/// violations: the two-mode tangle path composes a minimization (rel_tol
/// 1e-10) with tangle_of_invariant, so residuals may sit at the 1e-9 scale.
inline constexpr double kMonogamyTol = 1e-8;

/// Analysis of one (pivot, partner) two-mode reduction of a pure state.
struct PairReport {
  int pivot;
  int partner;
  StandardForm sf;
  double delta;  // -4 det(delta block)
  bool entangled;
  double tau;  // 0 when separable
  std::optional<TangleBoundReport> bounds;  // present iff entangled
};

PairReport analyze_pair(const GaussianState& state, int pivot, int partner);

struct PartnerTangle {
  int mode;
  double tau;
};

/// The monogamy residual of a pure state for one pivot mode:
///   lhs      = pure_tangle(state, pivot)        (pivot : rest split)
///   residual = lhs - sum_l tau(pivot : l)
/// The residual is the distributed multipartite entanglement left after
/// subtracting all pairwise terms; it is >= 0 up to numerical tolerance.
struct MonogamyResult {
  double lhs;
  std::vector<PartnerTangle> per_partner;
  double residual;
};

/// Computes the monogamy residual. The state must be pure within tol
/// (mixed global states are rejected: their tangle is a convex roof with no
/// closed-form procedure for n > 2) and have n >= 2 modes.
MonogamyResult monogamy_residual(const GaussianState& state, int pivot,
                                 double tol = kMonogamyTol);

/// One CSV row of a sweep campaign.
struct SweepRow {
  std::int64_t sample_index;
  std::uint64_t seed;
  int n_modes;
  int pivot;
  double lhs;
  double sum_rhs;
  double residual;
};

/// Aggregate of a random-state monogamy campaign. Bound-chain statistics
/// are accumulated over every entangled two-mode reduction encountered:
/// min_tau_gap   = min(bound_zeta - tau),
/// min_chain_gap = min(bound_delta - bound_zeta),
/// min_flag_slack = per-inequality minimum slack, in the order
/// {zeta1 > 0, zeta1 <= -2c_-, -2c_- <= sqrt(delta), zeta2 >= zeta2',
///  zeta2' >= 4, zeta1^2/zeta2 <= delta/4}.
struct SweepReport {
  int n_modes = 0;
  std::int64_t samples = 0;
  double squeeze_max = 0.0;
  std::uint64_t seed = 0;
  double tol = kMonogamyTol;

  std::int64_t evaluations = 0;  // rows = samples x pivots
  std::int64_t violations = 0;   // residual < -tol
  double min_residual = 0.0;
  double max_residual = 0.0;
  double mean_residual = 0.0;

  std::int64_t pair_count = 0;
  std::int64_t entangled_pair_count = 0;
  double min_tau_gap = 0.0;
  double min_chain_gap = 0.0;
  std::array<double, 6> min_flag_slack{};

  std::vector<SweepRow> rows;
  std::vector<std::string> diagnostics;  // per-sample engine errors
};

/// Runs `samples` random pure states with per-sample seeds derived from the
/// master seed (seed XOR sample_index * odd constant), evaluating the
/// monogamy residual for every pivot mode of every sample. Reproducible:
/// identical arguments give identical reports. A sample whose two-mode
/// engine throws is recorded in diagnostics, not propagated.
SweepReport sweep(int n_modes, std::int64_t samples, double squeeze_max,
                  std::uint64_t seed, double tol = kMonogamyTol);

/// The per-sample seed derivation used by sweep.
std::uint64_t sample_seed(std::uint64_t master_seed, std::int64_t index);

}  // namespace gmono
