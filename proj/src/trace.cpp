#include "milnor/trace.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace milnor {

double SphereCurve::length() const {
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) acc += (points[i + 1] - points[i]).norm();
  return acc;
}

double SphereCurve::max_segment() const {
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    m = std::max(m, (points[i + 1] - points[i]).norm());
  return m;
}

double SphereCurve::min_distance_to(const SpherePoint& x) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& p : points) m = std::min(m, (p - x).norm());
  return m;
}

namespace {

// Constraint system for the preimage of q under the normalized triple map:
//   w1 . p(x) = 0,  w2 . p(x) = 0,  (|x|^2 - 1)/2 = 0
// with (w1, w2) an oriented tangent frame at q. Zeros with q . p > 0 are the
// preimage points; the system's kernel direction is the curve tangent.
class PreimageSystem {
 public:
  PreimageSystem(const TripleMap& map, const Eigen::Vector3d& q, const TraceConfig& cfg)
      : map_(map), q_(q), cfg_(cfg) {
    tangent_frame_s2(q, w1_, w2_);
  }

  const Eigen::Vector3d& q() const { return q_; }

  Eigen::Vector3d residual(const SpherePoint& x) const {
    const Eigen::Vector3d p = map_.normalized(x);
    return {w1_.dot(p), w2_.dot(p), 0.5 * (x.squaredNorm() - 1.0)};
  }

  Eigen::Matrix<double, 3, 4> jacobian(const SpherePoint& x) const {
    const Eigen::Matrix<double, 3, 4> dp = map_.normalized_jacobian(x);
    Eigen::Matrix<double, 3, 4> j;
    j.row(0) = w1_.transpose() * dp;
    j.row(1) = w2_.transpose() * dp;
    j.row(2) = x.transpose();
    return j;
  }

  bool on_branch(const SpherePoint& x) const { return q_.dot(map_.normalized(x)) > 0.0; }

  // Newton onto the constraint set. Returns false if it fails to converge.
  bool correct(SpherePoint& x, int max_iters = 30) const {
    for (int it = 0; it < max_iters; ++it) {
      const Eigen::Vector3d g = residual(x);
      if (g.cwiseAbs().maxCoeff() < cfg_.newton_tol) return on_branch(x);
      const Eigen::Matrix<double, 3, 4> j = jacobian(x);
      const Eigen::Vector4d delta =
          j.completeOrthogonalDecomposition().solve(g);  // minimum-norm step
      x -= delta;
      if (!x.allFinite()) return false;
    }
    return false;
  }

  // Unit kernel vector of the constraint Jacobian; throws RankDrop when the
  // system is too ill-conditioned for q to be a regular value.
  Eigen::Vector4d tangent(const SpherePoint& x) const {
    const Eigen::Matrix<double, 3, 4> j = jacobian(x);
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> svd(j, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv[2] > 0.0) || sv[0] / sv[2] > cfg_.cond_limit)
      throw RankDrop("condition " + std::to_string(sv[2] > 0 ? sv[0] / sv[2] : 0.0) +
                     " at a trace point");
    return svd.matrixV().col(3);
  }

  // Sign of det[x, t, v1, v2] with dp(vi) = wi: positive when the traversal
  // direction t is the orientation the Hopf-invariant sum requires.
  double orientation_sign(const SpherePoint& x, const Eigen::Vector4d& t) const {
    const Eigen::Matrix<double, 3, 4> dp = map_.normalized_jacobian(x);
    const auto solver = dp.completeOrthogonalDecomposition();
    const Eigen::Vector4d v1 = solver.solve(w1_);
    const Eigen::Vector4d v2 = solver.solve(w2_);
    Eigen::Matrix4d m;
    m.col(0) = x;
    m.col(1) = t;
    m.col(2) = v1;
    m.col(3) = v2;
    return m.determinant();
  }

 private:
  const TripleMap& map_;
  Eigen::Vector3d q_;
  Eigen::Vector3d w1_, w2_;
  const TraceConfig& cfg_;
};

}  // namespace

std::vector<SpherePoint> find_preimage_seeds(const TripleMap& map, const Eigen::Vector3d& q,
                                             const TraceConfig& cfg) {
  const PreimageSystem sys(map, q, cfg);
  const double keep = std::cos(cfg.seed_angle);

  std::vector<SpherePoint> seeds;
  for (const auto& scan : sphere_grid(cfg.grid_density)) {
    double align;
    try {
      align = q.dot(map.normalized(scan));
    } catch (const ZeroTriple&) {
      continue;  // scan point hit the guard; the verifier gates real degeneracy
    }
    if (align < keep) continue;
    SpherePoint x = scan;
    if (!sys.correct(x)) continue;
    bool dup = false;
    for (const auto& s : seeds) {
      if ((s - x).norm() < 3.0 * cfg.step) {
        dup = true;
        break;
      }
    }
    if (!dup) seeds.push_back(x);
  }
  return seeds;
}

SphereCurve trace_preimage(const TripleMap& map, const Eigen::Vector3d& q,
                           const SpherePoint& seed, const TraceConfig& cfg) {
  const PreimageSystem sys(map, q, cfg);

  SpherePoint x = seed;
  if (!sys.correct(x)) throw RankDrop("seed failed to converge onto the preimage");

  SphereCurve curve;
  curve.points.push_back(x);

  const SpherePoint start = x;
  Eigen::Vector4d t = sys.tangent(x);
  const Eigen::Vector4d t0 = t;

  bool armed = false;  // must leave the start's neighborhood before closing
  for (std::size_t n = 0; n < cfg.max_steps; ++n) {
    Eigen::Vector4d dir = sys.tangent(x);
    if (dir.dot(t) < 0.0) dir = -dir;  // no flipping of the traversal sense
    t = dir;

    // Predictor-corrector with local step halving when the corrector balks.
    double h = cfg.step;
    SpherePoint next;
    bool ok = false;
    for (int halving = 0; halving < 7; ++halving) {
      next = x + h * t;
      if (sys.correct(next) && (next - x).norm() < 3.0 * cfg.step) {
        ok = true;
        break;
      }
      h *= 0.5;
    }
    if (!ok) throw RankDrop("corrector failed to converge along the curve");

    x = next;
    curve.points.push_back(x);

    const double gap = (x - start).norm();
    if (!armed && gap > 2.0 * cfg.step) armed = true;
    if (!armed && n > 200) throw RankDrop("curve does not leave the seed neighborhood");

    if (armed && gap <= cfg.step && t.dot(t0) > 0.5) {
      // Shrinking steps along the curve until the start is re-entered.
      const std::size_t before_attempt = curve.points.size();
      SpherePoint y = x;
      double remaining = gap;
      bool closed = true;
      for (int it = 0; it < 80 && remaining > cfg.closure_tol; ++it) {
        Eigen::Vector4d ty = sys.tangent(y);
        if (ty.dot(t) < 0.0) ty = -ty;
        SpherePoint y_next = y + std::min(cfg.step, 0.7 * remaining) * ty;
        if (!sys.correct(y_next)) {
          closed = false;
          break;
        }
        const double next_remaining = (y_next - start).norm();
        if (next_remaining >= remaining) {
          closed = false;  // not actually converging onto the start
          break;
        }
        y = y_next;
        remaining = next_remaining;
        curve.points.push_back(y);
      }
      if (closed && remaining <= cfg.closure_tol) {
        curve.closure_residual = remaining;
        curve.points.push_back(start);
        // Orient: majority over three probes of det[x, t, v1, v2].
        int votes = 0;
        const std::size_t m = curve.points.size() - 1;
        for (std::size_t probe : {std::size_t{0}, m / 3, (2 * m) / 3}) {
          std::size_t a_ix = probe, b_ix = probe + 1;
          while (b_ix < m && (curve.points[b_ix] - curve.points[a_ix]).norm() < 1e-9) ++b_ix;
          const SpherePoint& a = curve.points[a_ix];
          const Eigen::Vector4d tt = (curve.points[b_ix] - a).normalized();
          votes += sys.orientation_sign(a, tt) > 0.0 ? 1 : -1;
        }
        if (votes < 0) std::reverse(curve.points.begin(), curve.points.end());
        return curve;
      }
      // Near miss (a close approach that is not the start): discard the
      // attempt's points and keep tracing; re-arm once the trace leaves the
      // neighborhood again.
      curve.points.resize(before_attempt);
      armed = false;
    }
  }
  throw MaxStepsExceeded();
}

namespace {

double hausdorff(const SphereCurve& a, const SphereCurve& b) {
  double worst = 0.0;
  for (const auto& p : a.points) worst = std::max(worst, b.min_distance_to(p));
  for (const auto& p : b.points) worst = std::max(worst, a.min_distance_to(p));
  return worst;
}

}  // namespace

std::vector<SphereCurve> trace_all_preimages(const TripleMap& map, const Eigen::Vector3d& q,
                                             const TraceConfig& cfg) {
  const std::vector<SpherePoint> seeds = find_preimage_seeds(map, q, cfg);
  std::vector<SphereCurve> curves;
  for (const auto& seed : seeds) {
    bool on_existing = false;
    for (const auto& c : curves) {
      if (c.min_distance_to(seed) < 2.0 * cfg.step) {
        on_existing = true;
        break;
      }
    }
    if (on_existing) continue;
    curves.push_back(trace_preimage(map, q, seed, cfg));
  }
  // Merge duplicates that slipped past the seed filter.
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size();) {
      if (hausdorff(curves[i], curves[j]) < 5.0 * cfg.step) {
        curves.erase(curves.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
  }
  return curves;
}

}  // namespace milnor
