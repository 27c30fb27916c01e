#include "milnor/map.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "milnor/sphere.hpp"
#include "milnor/triple.hpp"

namespace milnor {

MapR4R2::MapR4R2(Poly4 f_in, Poly4 g_in, std::string source)
    : f(std::move(f_in)), g(std::move(g_in)), source_text(std::move(source)) {
  const Monomial kConst = {0, 0, 0, 0};
  if (f.terms().count(kConst)) throw NonzeroConstantTerm("f");
  if (g.terms().count(kConst)) throw NonzeroConstantTerm("g");
}

PluckerMinors plucker_minors(const MapR4R2& F) {
  std::array<Poly4, 4> df, dg;
  for (int k = 0; k < 4; ++k) {
    df[k] = F.f.partial(static_cast<Var>(k));
    dg[k] = F.g.partial(static_cast<Var>(k));
  }
  auto minor = [&](int i, int j) { return df[i] * dg[j] - df[j] * dg[i]; };
  PluckerMinors p;
  p[static_cast<int>(MinorIx::XY)] = minor(0, 1);
  p[static_cast<int>(MinorIx::XU)] = minor(0, 2);
  p[static_cast<int>(MinorIx::XV)] = minor(0, 3);
  p[static_cast<int>(MinorIx::YU)] = minor(1, 2);
  p[static_cast<int>(MinorIx::YV)] = minor(1, 3);
  p[static_cast<int>(MinorIx::UV)] = minor(2, 3);
  return p;
}

GaussComponents gauss_components(const MapR4R2& F) {
  const PluckerMinors p = plucker_minors(F);
  const Poly4& xy = p[static_cast<int>(MinorIx::XY)];
  const Poly4& xu = p[static_cast<int>(MinorIx::XU)];
  const Poly4& xv = p[static_cast<int>(MinorIx::XV)];
  const Poly4& yu = p[static_cast<int>(MinorIx::YU)];
  const Poly4& yv = p[static_cast<int>(MinorIx::YV)];
  const Poly4& uv = p[static_cast<int>(MinorIx::UV)];

  GaussComponents g;
  g.aP = xy + uv;
  g.bP = xu - yv;
  g.cP = xv + yu;
  g.aM = xy - uv;
  g.bM = xu + yv;
  g.cM = xv - yu;
  return g;
}

MapR4R2 mirror(const MapR4R2& F) {
  const Eigen::Vector4d r(1.0, -1.0, 1.0, 1.0);
  std::string src = F.source_text.empty() ? std::string{} : "mirror(" + F.source_text + ")";
  return MapR4R2(F.f.scaled(r), F.g.scaled(r), std::move(src));
}

Eigen::Matrix<double, 2, 4> jacobian(const MapR4R2& F, const Eigen::Vector4d& p) {
  Eigen::Matrix<double, 2, 4> j;
  j.row(0) = F.f.grad(p).transpose();
  j.row(1) = F.g.grad(p).transpose();
  return j;
}

double gram_norm_defect(const MapR4R2& F, const std::vector<Eigen::Vector4d>& points) {
  const GaussComponents g = gauss_components(F);
  double worst = 0.0;
  for (const auto& pt : points) {
    const Eigen::Matrix<double, 2, 4> j = jacobian(F, pt);
    const double ff = j.row(0).squaredNorm();
    const double gg = j.row(1).squaredNorm();
    const double fg = j.row(0).dot(j.row(1));
    const double rhs = ff * gg - fg * fg;
    const double lhsP = g.aP.eval(pt) * g.aP.eval(pt) + g.bP.eval(pt) * g.bP.eval(pt) +
                        g.cP.eval(pt) * g.cP.eval(pt);
    const double lhsM = g.aM.eval(pt) * g.aM.eval(pt) + g.bM.eval(pt) * g.bM.eval(pt) +
                        g.cM.eval(pt) * g.cM.eval(pt);
    for (double lhs : {lhsP, lhsM}) {
      const double scale = std::max(lhs, rhs);
      if (scale < 1e-30) continue;
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  return worst;
}

double plucker_relation_defect(const MapR4R2& F, const std::vector<Eigen::Vector4d>& points) {
  const PluckerMinors p = plucker_minors(F);
  double worst = 0.0;
  for (const auto& pt : points) {
    double v[6];
    double scale = 0.0;
    for (int k = 0; k < 6; ++k) {
      v[k] = p[k].eval(pt);
      scale += v[k] * v[k];
    }
    const double rel = v[static_cast<int>(MinorIx::XY)] * v[static_cast<int>(MinorIx::UV)] -
                       v[static_cast<int>(MinorIx::XU)] * v[static_cast<int>(MinorIx::YV)] +
                       v[static_cast<int>(MinorIx::XV)] * v[static_cast<int>(MinorIx::YU)];
    if (scale < 1e-30) continue;
    worst = std::max(worst, std::abs(rel) / scale);
  }
  return worst;
}

double verify_isolated(const MapR4R2& F, double radius, std::size_t n_samples) {
  const PluckerMinors p = plucker_minors(F);
  std::array<PolyEval, 6> ev;
  for (int k = 0; k < 6; ++k) ev[k] = PolyEval(p[k]);

  double min_sq = std::numeric_limits<double>::infinity();
  for (const auto& s : sphere_grid(n_samples)) {
    const Eigen::Vector4d pt = radius * s;
    double sum = 0.0;
    for (int k = 0; k < 6; ++k) {
      const double v = ev[k](pt);
      sum += v * v;
    }
    min_sq = std::min(min_sq, sum);
  }
  return min_sq;
}

std::pair<double, double> conformality_defect(const MapR4R2& F, const Eigen::Vector4d& point) {
  const Eigen::Matrix<double, 2, 4> j = jacobian(F, point);
  Eigen::JacobiSVD<Eigen::Matrix<double, 2, 4>> svd(j, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv[1] < 1e-12 * std::max(sv[0], 1.0)) throw RankDeficient();

  // ker DF = span of the last two right singular vectors.
  const Eigen::Vector4d k1 = svd.matrixV().col(2);
  const Eigen::Vector4d k2 = svd.matrixV().col(3);

  const GaussComponents g = gauss_components(F);
  auto defect = [&](Chirality chi) {
    const TripleMap map(g, chi, 1.0, 0.0);
    const Eigen::Matrix<double, 3, 4> dn = map.normalized_jacobian(point);
    Eigen::Matrix<double, 3, 2> m;
    m.col(0) = dn * k1;
    m.col(1) = dn * k2;
    // Closed-form singular values of the 3x2 restriction via its 2x2 Gram
    // matrix; the general decompositions are overkill at this size.
    const Eigen::Matrix2d gram = m.transpose() * m;
    const double tr = gram(0, 0) + gram(1, 1);
    const double det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double s1 = std::sqrt(std::max(0.0, 0.5 * (tr + disc)));
    const double s2 = std::sqrt(std::max(0.0, 0.5 * (tr - disc)));
    if (s1 + s2 == 0.0) return 0.0;
    return (s1 - s2) / (s1 + s2);
  };

  return {defect(Chirality::SelfDual), defect(Chirality::AntiSelfDual)};
}

}  // namespace milnor
