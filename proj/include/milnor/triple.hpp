#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>

#include "milnor/map.hpp"
#include "milnor/poly4.hpp"

namespace milnor {

struct ZeroTriple : std::runtime_error {
  explicit ZeroTriple(double norm)
      : std::runtime_error("component triple vanished (norm " + std::to_string(norm) +
                           "); critical point may not be isolated at this radius") {}
};

using Omega6 = Eigen::Matrix<double, 6, 1>;

/// Evaluator for one half of the Gauss components as a map into R^3 \ {0},
/// restricted to the sphere of a fixed working radius.
///
/// The radius is folded into the coefficients (terms are rescaled so that
/// evaluating at a unit vector equals evaluating the original triple at
/// radius * x), which keeps every downstream computation on the unit sphere.
class TripleMap {
 public:
  TripleMap(const GaussComponents& g, Chirality chi, double radius, double guard_tolerance);

  Chirality chirality() const { return chirality_; }
  double radius() const { return radius_; }
  double guard_tolerance() const { return guard_; }

  /// Orientation weight of the Hopf invariant for this half.
  ///
  /// The space of oriented 2-planes in R^4 splits as a product of two
  /// 2-spheres, one seen by each half of the components, and the round
  /// orientations the splitting induces on the two factors are opposite. The
  /// invariant of the self-dual half is therefore evaluated with the reversed
  /// sphere orientation (-1 here); the anti-self-dual half uses +1. The sign
  /// pair is pinned by the Hopf-annulus maps: the enhancement of z*w must be
  /// 0 and of z*conj(w) must be 1.
  int orientation() const { return chirality_ == Chirality::SelfDual ? -1 : +1; }

  /// (A,B,C) at x; no guard applied.
  Eigen::Vector3d raw(const Eigen::Vector4d& x) const;

  /// (A,B,C)/|(A,B,C)|; throws ZeroTriple below the guard tolerance.
  Eigen::Vector3d normalized(const Eigen::Vector4d& x) const;

  /// 3x4 Jacobian of (A,B,C), exact polynomial partials.
  Eigen::Matrix<double, 3, 4> raw_jacobian(const Eigen::Vector4d& x) const;

  /// 3x4 Jacobian of the normalized map (I - n n^T) D(A,B,C) / |(A,B,C)|.
  Eigen::Matrix<double, 3, 4> normalized_jacobian(const Eigen::Vector4d& x) const;

  /// Components of (A dB^dC + B dC^dA + C dA^dB) / |(A,B,C)|^3 in the basis
  /// order dx^dy, dx^du, dx^dv, dy^du, dy^dv, du^dv. This is the pullback of
  /// the area 2-form of the unit sphere (total mass 4*pi) under the
  /// normalized map. Throws ZeroTriple below the guard tolerance.
  Omega6 omega(const Eigen::Vector4d& x) const;

  /// The 2-form above contracted with a pair of tangent vectors.
  static double contract(const Omega6& w, const Eigen::Vector4d& s, const Eigen::Vector4d& t);

 private:
  Chirality chirality_;
  double radius_;
  double guard_;
  std::array<Poly4, 3> comp_;          // A, B, C (radius-scaled)
  std::array<PolyEval, 3> comp_ev_;
  std::array<std::array<PolyEval, 4>, 3> partial_ev_;
};

/// Spec surface: the omega components for the chosen half of F at a point.
Omega6 omega_pullback(const MapR4R2& F, Chirality chi, const Eigen::Vector4d& point,
                      double guard_tolerance = 1e-12);

}  // namespace milnor
