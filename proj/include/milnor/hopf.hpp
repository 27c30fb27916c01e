#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/linking.hpp"
#include "milnor/trace.hpp"
#include "milnor/triple.hpp"

namespace milnor {

struct BudgetTooSmall : std::runtime_error {
  explicit BudgetTooSmall(double se)
      : std::runtime_error("Monte Carlo standard error " + std::to_string(se) +
                           " exceeds 0.5; increase the sample budget") {}
};

enum class Method { Linking, Whitehead, Both };

std::string method_name(Method m);

struct HopfDiagnostics {
  std::uint64_t seed = 0;
  int retries = 0;
  // linking
  Eigen::Vector3d q1 = Eigen::Vector3d::Zero();
  Eigen::Vector3d q2 = Eigen::Vector3d::Zero();
  int curves_q1 = 0;
  int curves_q2 = 0;
  std::uint64_t trace_points = 0;
  std::uint64_t segment_pairs = 0;
  double max_pair_residual = 0.0;
  double trace_step = 0.0;
  // whitehead
  std::uint64_t mc_pairs = 0;
  std::uint64_t mc_points = 0;
  std::uint64_t mc_batches = 0;
  double std_error = 0.0;
  double half_cutoff_raw = 0.0;  // same samples, cutoff/2 (cutoff-bias probe)
  Eigen::Vector4d pole = Eigen::Vector4d::Zero();
};

/// One Hopf-invariant estimate. `raw` is the pre-rounding number with the
/// chirality orientation already applied; `value` rounds it to the nearest
/// integer and `residual` is |raw - value| (for the linking method, raw sums
/// per-pair integers, so residual accumulates the per-pair defects).
struct HopfEstimate {
  int value = 0;
  double raw = 0.0;
  double residual = 0.0;
  Method method = Method::Linking;
  HopfDiagnostics diag;
};

struct LinkingConfig {
  TraceConfig trace;
  std::uint64_t seed = 0;
  int max_attempts = 6;          // fresh regular-value pairs after RankDrop
  int refine_limit = 2;          // step halvings after PoorConditioning
  double rv_min_angle = 0.4;     // |angle(q1, +-q2)| kept above this
};

/// Hopf invariant as the sum of linking numbers of the preimage curves of
/// two regular values. Integer-robust: every curve pair must round with
/// residual < 0.3 or the tracing is refined and retried.
HopfEstimate hopf_via_linking(const TripleMap& map, const LinkingConfig& cfg,
                              std::vector<SphereCurve>* keep_curves = nullptr);

struct WhiteheadConfig {
  std::uint64_t budget = 10'000'000;  // ordered sample pairs
  std::uint64_t seed = 0;
  double cutoff = 0.02;               // near-diagonal exclusion, R^3 units
  double grid_mixture = 0.7;          // share of draws from the |B| grid
  int grid_cells = 32;                // cells per axis
  double box_halfwidth = 6.0;
  std::uint64_t batches = 1000;
  int threads = 1;
};

/// Hopf invariant as the helicity of the field dual to the pulled-back area
/// form: project the sphere stereographically, identify the 2-form with a
/// divergence-free field B, take the Biot-Savart potential as the primitive,
/// and estimate (1/4pi) int int B(x).(B(y) x (x-y)) / |x-y|^3 by importance-
/// sampled Monte Carlo over independent batches.
HopfEstimate hopf_via_whitehead(const TripleMap& map, const WhiteheadConfig& cfg);

}  // namespace milnor
