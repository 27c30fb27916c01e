#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "milnor/rng.hpp"

namespace milnor {

using SpherePoint = Eigen::Vector4d;  // unit vector in R^4

struct AtPole : std::runtime_error {
  AtPole() : std::runtime_error("stereographic projection evaluated at its pole") {}
};

/// Stereographic chart of S^3 minus a pole onto R^3.
///
/// The frame (E1,E2,E3) of the pole's orthogonal complement is completed so
/// that det[pole E1 E2 E3] = -1, which makes the chart orientation-preserving
/// from S^3 with its boundary-of-the-4-ball orientation (outward normal
/// first) to R^3 with the standard orientation. Linking numbers and helicity
/// computed downstream in R^3 therefore agree with their S^3 values.
class Stereographic {
 public:
  explicit Stereographic(const SpherePoint& pole);

  const SpherePoint& pole() const { return pole_; }

  Eigen::Vector3d project(const SpherePoint& x) const;
  SpherePoint unproject(const Eigen::Vector3d& xi) const;

  /// Columns are the tangent vectors d(unproject)/d(xi_j) in R^4.
  Eigen::Matrix<double, 4, 3> unproject_jacobian(const Eigen::Vector3d& xi) const;

 private:
  SpherePoint pole_;
  Eigen::Matrix<double, 4, 3> frame_;
};

/// Deterministic low-discrepancy S^3 sample: Halton points in [0,1)^3 pushed
/// through area-preserving Hopf coordinates. `offset` skips into the sequence
/// so distinct callers get distinct point sets.
std::vector<SpherePoint> sphere_grid(std::size_t n, std::size_t offset = 0);

/// Uniform random point on S^2 (Gaussian normalize).
Eigen::Vector3d random_s2(Rng& rng);

/// Uniform random point on S^3.
SpherePoint random_s3(Rng& rng);

/// Orthonormal (w1,w2) spanning the tangent plane of S^2 at q, positively
/// oriented: det[q w1 w2] > 0.
void tangent_frame_s2(const Eigen::Vector3d& q, Eigen::Vector3d& w1, Eigen::Vector3d& w2);

}  // namespace milnor
