#include "milnor/linking.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace milnor {

namespace {

SpherePoint farthest_pole(const SphereCurve& c1, const SphereCurve& c2) {
  SpherePoint best = SpherePoint::UnitW();
  double best_score = -1.0;
  for (const auto& cand : sphere_grid(512, /*offset=*/40000)) {
    const double score = std::min(c1.min_distance_to(cand), c2.min_distance_to(cand));
    if (score > best_score) {
      best_score = score;
      best = cand;
    }
  }
  return best;
}

struct Segments {
  std::vector<Eigen::Vector3d> mid;
  std::vector<Eigen::Vector3d> dir;  // unnormalized segment vector
};

Segments project_segments(const SphereCurve& c, const Stereographic& chart) {
  Segments s;
  const std::size_t n = c.points.size();
  s.mid.reserve(n);
  s.dir.reserve(n);
  Eigen::Vector3d prev = chart.project(c.points[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const Eigen::Vector3d cur = chart.project(c.points[i]);
    s.mid.push_back(0.5 * (prev + cur));
    s.dir.push_back(cur - prev);
    prev = cur;
  }
  return s;
}

}  // namespace

LinkingResult linking_number(const SphereCurve& c1, const SphereCurve& c2) {
  double min_dist = std::numeric_limits<double>::infinity();
  for (const auto& p : c1.points) min_dist = std::min(min_dist, c2.min_distance_to(p));
  const double step_scale = std::max(c1.max_segment(), c2.max_segment());
  if (!(min_dist > 10.0 * step_scale)) throw CurvesTooClose(min_dist);

  const Stereographic chart(farthest_pole(c1, c2));
  const Segments a = project_segments(c1, chart);
  const Segments b = project_segments(c2, chart);

  double sum = 0.0;
  for (std::size_t i = 0; i < a.mid.size(); ++i) {
    const Eigen::Vector3d& ma = a.mid[i];
    const Eigen::Vector3d& da = a.dir[i];
    for (std::size_t j = 0; j < b.mid.size(); ++j) {
      const Eigen::Vector3d r = ma - b.mid[j];
      const double r2 = r.squaredNorm();
      sum += da.cross(b.dir[j]).dot(r) / (r2 * std::sqrt(r2));
    }
  }

  LinkingResult res;
  res.raw = sum / (4.0 * std::acos(-1.0));
  res.value = static_cast<int>(std::lround(res.raw));
  res.residual = std::abs(res.raw - res.value);
  res.min_distance = min_dist;
  res.segment_pairs = static_cast<std::uint64_t>(a.mid.size()) * b.mid.size();
  if (res.residual > 0.3) throw PoorConditioning(res.raw, res.residual);
  return res;
}

}  // namespace milnor
