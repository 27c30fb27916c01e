#pragma once

#include <stdexcept>

#include "milnor/trace.hpp"

namespace milnor {

struct CurvesTooClose : std::runtime_error {
  explicit CurvesTooClose(double dist)
      : std::runtime_error("curves too close for a reliable Gauss integral (min distance " +
                           std::to_string(dist) + ")") {}
};

struct PoorConditioning : std::runtime_error {
  explicit PoorConditioning(double raw, double residual)
      : std::runtime_error("Gauss integral residual " + std::to_string(residual) +
                           " too large; refine the curves"),
        raw_value(raw) {}
  double raw_value;
};

struct LinkingResult {
  int value = 0;
  double raw = 0.0;
  double residual = 0.0;
  double min_distance = 0.0;
  std::uint64_t segment_pairs = 0;
};

/// Linking number of two disjoint closed curves on the unit 3-sphere.
///
/// Both curves are projected stereographically from a pole far from either
/// and the Gauss double line integral is summed over segment pairs with the
/// midpoint rule. Requires min pairwise distance > 10x the largest segment;
/// throws PoorConditioning when the rounded integral is off by more than 0.3.
LinkingResult linking_number(const SphereCurve& c1, const SphereCurve& c2);

}  // namespace milnor
