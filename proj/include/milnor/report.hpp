#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/hopf.hpp"
#include "milnor/map.hpp"

namespace milnor {

struct EnhanceConfig {
  Method method = Method::Linking;
  double radius = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10'000'000;  // whitehead sample pairs
  double step = 0.02;                 // tracing step
  int threads = 1;
  bool mirror_check = true;
  bool radius_check = false;
  std::size_t isolated_samples = 100'000;
  double isolated_threshold = 1e-12;
  double guard_tolerance = 1e-9;
  std::optional<std::string> curve_export_path;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The assembled invariants: mu = lambda + rho by construction; the
/// independent content is that each summand comes from its own component
/// triple and that the recorded cross-checks pass.
struct EnhancementReport {
  bool valid = false;   // false: isolated-critical-point gate failed
  std::string error;
  int lambda = 0;
  int rho = 0;
  int mu = 0;
  HopfEstimate lambda_estimate;
  HopfEstimate rho_estimate;
  std::optional<HopfEstimate> lambda_whitehead;  // present when method = both
  std::optional<HopfEstimate> rho_whitehead;
  std::optional<int> mirror_lambda;
  std::vector<CheckResult> checks;
  double radius = 1.0;
  std::uint64_t seed = 0;
  std::string map_source;
  double isolated_min = 0.0;
  std::vector<SphereCurve> curves;  // traced preimages, for export

  bool all_checks_pass() const;
};

/// Hopf invariant of the normalized self-dual triple.
HopfEstimate lambda_of(const MapR4R2& F, const EnhanceConfig& cfg);

/// Hopf invariant of the normalized anti-self-dual triple.
HopfEstimate rho_of(const MapR4R2& F, const EnhanceConfig& cfg);

/// lambda + rho.
int mu_of(const MapR4R2& F, const EnhanceConfig& cfg);

/// Betti number of the fiber of z^p - w^q by monomial enumeration: counts
/// the monomials z^i w^j outside the ideal (z^(p-1), w^(q-1)).
int brieskorn_mu(int p, int q);

/// Runs the isolated-critical-point gate, both invariants, and the
/// configured cross-checks; failures are recorded, not thrown.
EnhancementReport full_report(const MapR4R2& F, const EnhanceConfig& cfg);

/// Stable-key JSON rendering (identical input, config and seed give
/// byte-identical output except the timestamp field).
std::string report_to_json(const EnhancementReport& report, bool with_timestamp = true);

/// Curve CSV: header x,y,u,v, one row per point, blank line between curves.
std::string curves_to_csv(const std::vector<SphereCurve>& curves);

}  // namespace milnor
