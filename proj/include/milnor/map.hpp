#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/poly4.hpp"

namespace milnor {

/// Polynomial map F = (f,g): R^4 -> R^2 with F(0) = 0.
struct MapR4R2 {
  MapR4R2(Poly4 f_in, Poly4 g_in, std::string source = {});

  Poly4 f;
  Poly4 g;
  std::string source_text;
};

struct NonzeroConstantTerm : std::runtime_error {
  explicit NonzeroConstantTerm(const std::string& which)
      : std::runtime_error(which + " has a nonzero constant term (F(0) must be 0)") {}
};

/// Index set of the 2x2 minors of the 2x4 Jacobian, in the fixed order
/// xy, xu, xv, yu, yv, uv.
enum class MinorIx : int { XY = 0, XU = 1, XV = 2, YU = 3, YV = 4, UV = 5 };

using PluckerMinors = std::array<Poly4, 6>;

/// p_ij = f_i g_j - f_j g_i as exact polynomials.
PluckerMinors plucker_minors(const MapR4R2& F);

/// The self-dual and anti-self-dual components of df ^ dg, as polynomials:
///   aP = p_xy + p_uv   bP = p_xu - p_yv   cP = p_xv + p_yu
///   aM = p_xy - p_uv   bM = p_xu + p_yv   cM = p_xv - p_yu
struct GaussComponents {
  Poly4 aP, bP, cP;
  Poly4 aM, bM, cM;
};

GaussComponents gauss_components(const MapR4R2& F);

/// Which half of the components a downstream computation consumes.
enum class Chirality { SelfDual, AntiSelfDual };

/// F composed with the fixed orientation-reversing involution
/// r(x,y,u,v) = (x,-y,u,v). Restricts to an orientation-reversing
/// diffeomorphism of every centered sphere, so the associated link is the
/// mirror image.
MapR4R2 mirror(const MapR4R2& F);

/// 2x4 Jacobian DF at a point.
Eigen::Matrix<double, 2, 4> jacobian(const MapR4R2& F, const Eigen::Vector4d& p);

/// Max over points and both triples of the relative defect in the Gram
/// identity  A^2+B^2+C^2 = |df|^2 |dg|^2 - (df.dg)^2. Points where both sides
/// are below 1e-30 are skipped.
double gram_norm_defect(const MapR4R2& F, const std::vector<Eigen::Vector4d>& points);

/// Max over points of |p_xy p_uv - p_xu p_yv + p_xv p_yu| relative to the
/// scale sum(p_ij^2) at the point. An identity for minors of any 2x4 matrix,
/// so the result is rounding noise.
double plucker_relation_defect(const MapR4R2& F, const std::vector<Eigen::Vector4d>& points);

/// Minimum of sum(p_ij^2) over a low-discrepancy sample of the radius sphere.
/// The caller compares against its threshold; a tiny minimum signals a
/// critical point that is not isolated at this radius.
double verify_isolated(const MapR4R2& F, double radius, std::size_t n_samples);

struct RankDeficient : std::runtime_error {
  RankDeficient() : std::runtime_error("DF has rank < 2 at the requested point") {}
};

/// Deviation of each normalized component map from conformality on the
/// fiber-tangent plane ker DF: returns (sigma1-sigma2)/(sigma1+sigma2) of the
/// restricted derivative for the self-dual and anti-self-dual factor (0 when
/// both singular values vanish). Fibers of F are all minimal surfaces exactly
/// when both defects vanish (fiberwise conformality of the Gauss map).
std::pair<double, double> conformality_defect(const MapR4R2& F, const Eigen::Vector4d& point);

}  // namespace milnor
