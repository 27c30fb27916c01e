#include "milnor/triple.hpp"

#include <cmath>

namespace milnor {

TripleMap::TripleMap(const GaussComponents& g, Chirality chi, double radius,
                     double guard_tolerance)
    : chirality_(chi), radius_(radius), guard_(guard_tolerance) {
  const Eigen::Vector4d scale = Eigen::Vector4d::Constant(radius);
  if (chi == Chirality::SelfDual) {
    comp_ = {g.aP.scaled(scale), g.bP.scaled(scale), g.cP.scaled(scale)};
  } else {
    comp_ = {g.aM.scaled(scale), g.bM.scaled(scale), g.cM.scaled(scale)};
  }
  for (int c = 0; c < 3; ++c) {
    comp_ev_[c] = PolyEval(comp_[c]);
    for (int k = 0; k < 4; ++k) {
      partial_ev_[c][k] = PolyEval(comp_[c].partial(static_cast<Var>(k)));
    }
  }
}

Eigen::Vector3d TripleMap::raw(const Eigen::Vector4d& x) const {
  return {comp_ev_[0](x), comp_ev_[1](x), comp_ev_[2](x)};
}

Eigen::Vector3d TripleMap::normalized(const Eigen::Vector4d& x) const {
  const Eigen::Vector3d v = raw(x);
  const double n = v.norm();
  if (n <= guard_) throw ZeroTriple(n);
  return v / n;
}

Eigen::Matrix<double, 3, 4> TripleMap::raw_jacobian(const Eigen::Vector4d& x) const {
  Eigen::Matrix<double, 3, 4> j;
  for (int c = 0; c < 3; ++c)
    for (int k = 0; k < 4; ++k) j(c, k) = partial_ev_[c][k](x);
  return j;
}

Eigen::Matrix<double, 3, 4> TripleMap::normalized_jacobian(const Eigen::Vector4d& x) const {
  const Eigen::Vector3d v = raw(x);
  const double n = v.norm();
  if (n <= guard_) throw ZeroTriple(n);
  const Eigen::Vector3d unit = v / n;
  const Eigen::Matrix<double, 3, 4> j = raw_jacobian(x);
  return (j - unit * (unit.transpose() * j)) / n;
}

Omega6 TripleMap::omega(const Eigen::Vector4d& x) const {
  const Eigen::Vector3d v = raw(x);
  const double n = v.norm();
  if (n <= guard_) throw ZeroTriple(n);
  const Eigen::Matrix<double, 3, 4> j = raw_jacobian(x);

  // (i,j) index pairs matching the fixed basis order.
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Omega6 w;
  const double inv3 = 1.0 / (n * n * n);
  for (int k = 0; k < 6; ++k) {
    const int a = kPairs[k][0], b = kPairs[k][1];
    const double dBdC = j(1, a) * j(2, b) - j(1, b) * j(2, a);
    const double dCdA = j(2, a) * j(0, b) - j(2, b) * j(0, a);
    const double dAdB = j(0, a) * j(1, b) - j(0, b) * j(1, a);
    w[k] = (v[0] * dBdC + v[1] * dCdA + v[2] * dAdB) * inv3;
  }
  return w;
}

double TripleMap::contract(const Omega6& w, const Eigen::Vector4d& s, const Eigen::Vector4d& t) {
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  double acc = 0.0;
  for (int k = 0; k < 6; ++k) {
    const int a = kPairs[k][0], b = kPairs[k][1];
    acc += w[k] * (s[a] * t[b] - s[b] * t[a]);
  }
  return acc;
}

Omega6 omega_pullback(const MapR4R2& F, Chirality chi, const Eigen::Vector4d& point,
                      double guard_tolerance) {
  const TripleMap map(gauss_components(F), chi, 1.0, guard_tolerance);
  return map.omega(point);
}

}  // namespace milnor
