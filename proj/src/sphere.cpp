#include "milnor/sphere.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace milnor {

Stereographic::Stereographic(const SpherePoint& pole) : pole_(pole.normalized()) {
  // Gram-Schmidt against the two coordinate axes least aligned with the pole,
  // then the determinant-fixing completion.
  int order[4] = {0, 1, 2, 3};
  std::sort(order, order + 4,
            [&](int a, int b) { return std::abs(pole_[a]) < std::abs(pole_[b]); });

  Eigen::Vector4d e1 = Eigen::Vector4d::Unit(order[0]);
  e1 -= e1.dot(pole_) * pole_;
  e1.normalize();
  Eigen::Vector4d e2 = Eigen::Vector4d::Unit(order[1]);
  e2 -= e2.dot(pole_) * pole_ + e2.dot(e1) * e1;
  e2.normalize();
  Eigen::Vector4d e3 = Eigen::Vector4d::Unit(order[2]);
  e3 -= e3.dot(pole_) * pole_ + e3.dot(e1) * e1 + e3.dot(e2) * e2;
  e3.normalize();

  Eigen::Matrix4d m;
  m.col(0) = pole_;
  m.col(1) = e1;
  m.col(2) = e2;
  m.col(3) = e3;
  if (m.determinant() > 0) e3 = -e3;

  frame_.col(0) = e1;
  frame_.col(1) = e2;
  frame_.col(2) = e3;
}

Eigen::Vector3d Stereographic::project(const SpherePoint& x) const {
  const double denom = 1.0 - x.dot(pole_);
  if (denom < 1e-14) throw AtPole();
  return frame_.transpose() * x / denom;
}

SpherePoint Stereographic::unproject(const Eigen::Vector3d& xi) const {
  const double r2 = xi.squaredNorm();
  return ((r2 - 1.0) * pole_ + 2.0 * (frame_ * xi)) / (1.0 + r2);
}

Eigen::Matrix<double, 4, 3> Stereographic::unproject_jacobian(const Eigen::Vector3d& xi) const {
  const double r2 = xi.squaredNorm();
  const double s = 1.0 + r2;
  const SpherePoint x = ((r2 - 1.0) * pole_ + 2.0 * (frame_ * xi)) / s;
  Eigen::Matrix<double, 4, 3> jac;
  for (int j = 0; j < 3; ++j) {
    jac.col(j) = (2.0 * xi[j] * pole_ + 2.0 * frame_.col(j)) / s - x * (2.0 * xi[j] / s);
  }
  return jac;
}

namespace {

double halton(std::size_t index, unsigned base) {
  double f = 1.0, r = 0.0;
  std::size_t i = index;
  while (i > 0) {
    f /= base;
    r += f * static_cast<double>(i % base);
    i /= base;
  }
  return r;
}

}  // namespace

std::vector<SpherePoint> sphere_grid(std::size_t n, std::size_t offset) {
  std::vector<SpherePoint> pts;
  pts.reserve(n);
  constexpr double kTwoPi = 6.283185307179586477;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i + offset + 1;  // skip the degenerate 0 sample
    const double t1 = halton(k, 2);
    const double t2 = halton(k, 3);
    const double t3 = halton(k, 5);
    // Hopf coordinates: sin^2(eta) uniform gives the round measure on S^3.
    const double eta = std::asin(std::sqrt(t1));
    const double c = std::cos(eta), s = std::sin(eta);
    const double a1 = kTwoPi * t2, a2 = kTwoPi * t3;
    pts.emplace_back(c * std::cos(a1), c * std::sin(a1), s * std::cos(a2), s * std::sin(a2));
  }
  return pts;
}

Eigen::Vector3d random_s2(Rng& rng) {
  while (true) {
    Eigen::Vector3d g(rng.gaussian(), rng.gaussian(), rng.gaussian());
    const double n = g.norm();
    if (n > 1e-8) return g / n;
  }
}

SpherePoint random_s3(Rng& rng) {
  while (true) {
    SpherePoint g(rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian());
    const double n = g.norm();
    if (n > 1e-8) return g / n;
  }
}

void tangent_frame_s2(const Eigen::Vector3d& q, Eigen::Vector3d& w1, Eigen::Vector3d& w2) {
  Eigen::Vector3d a = Eigen::Vector3d::UnitX();
  if (std::abs(q.x()) > 0.9) a = Eigen::Vector3d::UnitY();
  w1 = a.cross(q).normalized();
  w2 = q.cross(w1);  // det[q w1 w2] = |q x w1|^2 > 0
}

}  // namespace milnor
