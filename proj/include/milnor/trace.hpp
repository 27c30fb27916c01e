#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "milnor/sphere.hpp"
#include "milnor/triple.hpp"

namespace milnor {

struct RankDrop : std::runtime_error {
  explicit RankDrop(const std::string& why)
      : std::runtime_error("constraint Jacobian lost rank: " + why) {}
};

struct MaxStepsExceeded : std::runtime_error {
  MaxStepsExceeded() : std::runtime_error("preimage tracing exceeded the step budget") {}
};

struct TraceConfig {
  double step = 0.02;
  double newton_tol = 1e-10;
  double closure_tol = 1e-6;
  std::size_t max_steps = 1'000'000;
  double cond_limit = 1e8;       // constraint-Jacobian condition bound
  std::size_t grid_density = 8192;  // coarse S^3 scan for seeds
  double seed_angle = 0.35;      // keep scan points with angle(p(x), q) below this
};

/// Closed polyline on the unit 3-sphere: one traced preimage component.
/// The final point repeats the first; `closure_residual` is the gap that
/// remained when the trace re-entered the start, before the closing point
/// was appended.
struct SphereCurve {
  std::vector<SpherePoint> points;
  bool closed = true;
  double closure_residual = 0.0;

  double length() const;
  double max_segment() const;
  double min_distance_to(const SpherePoint& x) const;
};

/// Approximate solutions of p(x) = q on the unit sphere: coarse
/// low-discrepancy scan, Newton correction onto the constraint set, distance
/// deduplication. An empty result means p misses q (valid, e.g. for constant
/// maps).
std::vector<SpherePoint> find_preimage_seeds(const TripleMap& map, const Eigen::Vector3d& q,
                                             const TraceConfig& cfg);

/// Predictor-corrector continuation of the preimage component through `seed`.
/// The returned curve is oriented so that (tangent, lifted frame of q)
/// matches the boundary orientation of the sphere; linking numbers of curves
/// oriented this way sum to the Hopf invariant.
SphereCurve trace_preimage(const TripleMap& map, const Eigen::Vector3d& q,
                           const SpherePoint& seed, const TraceConfig& cfg);

/// Seeds, traces each distinct component once, merges duplicates
/// (Hausdorff distance below 5 steps).
std::vector<SphereCurve> trace_all_preimages(const TripleMap& map, const Eigen::Vector3d& q,
                                             const TraceConfig& cfg);

}  // namespace milnor
