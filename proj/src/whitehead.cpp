#include <algorithm>
#include <cmath>
#include <thread>

#include "milnor/hopf.hpp"

namespace milnor {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSphereVolume = 2.0 * kPi * kPi;  // vol(S^3)

// Transported field on R^3: the pullback 2-form of the normalized area form
// (mass 1, hence the 1/4pi) contracted with the chart's tangent vectors.
class Field {
 public:
  Field(const TripleMap& map, const Stereographic& chart) : map_(map), chart_(chart) {}

  Eigen::Vector3d operator()(const Eigen::Vector3d& xi) const {
    const SpherePoint x = chart_.unproject(xi);
    const Eigen::Matrix<double, 4, 3> jac = chart_.unproject_jacobian(xi);
    const Omega6 w = map_.omega(x);
    return Eigen::Vector3d(TripleMap::contract(w, jac.col(1), jac.col(2)),
                           TripleMap::contract(w, jac.col(2), jac.col(0)),
                           TripleMap::contract(w, jac.col(0), jac.col(1))) /
           (4.0 * kPi);
  }

 private:
  const TripleMap& map_;
  const Stereographic& chart_;
};

// Importance mixture: cells of a |B| grid over a box, blended with the
// pushforward of the uniform sphere measure so the tails keep positive
// density and the estimator stays unbiased on all of R^3.
class Sampler {
 public:
  Sampler(const Field& field, const Stereographic& chart, const WhiteheadConfig& cfg)
      : chart_(chart),
        n_(cfg.grid_cells),
        half_(cfg.box_halfwidth),
        cell_(2.0 * cfg.box_halfwidth / cfg.grid_cells) {
    const std::size_t cells = static_cast<std::size_t>(n_) * n_ * n_;
    cdf_.resize(cells);
    weights_.resize(cells);
    double acc = 0.0;
    for (std::size_t c = 0; c < cells; ++c) {
      const double w = field(center(c)).norm();
      weights_[c] = w;
      acc += w;
      cdf_[c] = acc;
    }
    total_ = acc;
    alpha_ = total_ > 0.0 ? cfg.grid_mixture : 0.0;
  }

  double alpha() const { return alpha_; }

  Eigen::Vector3d draw(Rng& rng) const {
    if (rng.uniform() < alpha_) {
      const double target = rng.uniform() * total_;
      const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), target);
      const std::size_t c = std::min(static_cast<std::size_t>(it - cdf_.begin()),
                                     cdf_.size() - 1);
      const Eigen::Vector3d base = corner(c);
      return base + cell_ * Eigen::Vector3d(rng.uniform(), rng.uniform(), rng.uniform());
    }
    while (true) {
      const SpherePoint x = random_s3(rng);
      if (x.dot(chart_.pole()) < 1.0 - 1e-12) return chart_.project(x);
    }
  }

  double density(const Eigen::Vector3d& xi) const {
    double q = (1.0 - alpha_) * sphere_density(xi);
    if (alpha_ > 0.0) {
      const std::size_t c = cell_index(xi);
      if (c != npos) q += alpha_ * weights_[c] / (total_ * cell_ * cell_ * cell_);
    }
    return q;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  double sphere_density(const Eigen::Vector3d& xi) const {
    const double s = 2.0 / (1.0 + xi.squaredNorm());
    return s * s * s / kSphereVolume;
  }

  std::size_t cell_index(const Eigen::Vector3d& xi) const {
    std::size_t ix[3];
    for (int k = 0; k < 3; ++k) {
      const double t = (xi[k] + half_) / cell_;
      if (t < 0.0 || t >= n_) return npos;
      ix[k] = static_cast<std::size_t>(t);
    }
    return (ix[0] * static_cast<std::size_t>(n_) + ix[1]) * static_cast<std::size_t>(n_) + ix[2];
  }

  Eigen::Vector3d corner(std::size_t c) const {
    const std::size_t nz = static_cast<std::size_t>(n_);
    const std::size_t i = c / (nz * nz), j = (c / nz) % nz, k = c % nz;
    return {-half_ + cell_ * static_cast<double>(i), -half_ + cell_ * static_cast<double>(j),
            -half_ + cell_ * static_cast<double>(k)};
  }

  Eigen::Vector3d center(std::size_t c) const {
    return corner(c) + 0.5 * cell_ * Eigen::Vector3d::Ones();
  }

  const Stereographic& chart_;
  int n_;
  double half_, cell_;
  std::vector<double> weights_, cdf_;
  double total_ = 0.0;
  double alpha_ = 0.0;
};

SpherePoint quiet_pole(const TripleMap& map) {
  // Put the chart's point at infinity where the pulled-back form is weakest,
  // so little mass lands outside the importance grid's box.
  SpherePoint best = SpherePoint::UnitW();
  double best_mass = std::numeric_limits<double>::infinity();
  for (const auto& cand : sphere_grid(2048, /*offset=*/70000)) {
    const double mass = map.omega(cand).norm();
    if (mass < best_mass) {
      best_mass = mass;
      best = cand;
    }
  }
  return best;
}

struct BatchResult {
  double main = 0.0;
  double half = 0.0;
};

BatchResult run_batch(const Field& field, const Sampler& sampler, std::uint64_t seed,
                      std::uint64_t batch_index, std::size_t m, double cutoff) {
  Rng rng = Rng::stream(seed, batch_index);
  std::vector<Eigen::Vector3d> xs(m);
  std::vector<Eigen::Vector3d> bs(m);
  std::vector<double> ws(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = sampler.draw(rng);
    bs[i] = field(xs[i]);
    ws[i] = 1.0 / sampler.density(xs[i]);
  }

  const double c2_main = cutoff * cutoff;
  const double c2_half = 0.25 * c2_main;
  double main = 0.0, half = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Eigen::Vector3d r = xs[i] - xs[j];
      const double d2 = r.squaredNorm();
      if (d2 < c2_half) continue;
      const double k = bs[i].dot(bs[j].cross(r)) / (d2 * std::sqrt(d2)) * ws[i] * ws[j];
      half += k;
      if (d2 >= c2_main) main += k;
    }
  }
  const double pairs = static_cast<double>(m) * static_cast<double>(m - 1);
  const double scale = 2.0 / (4.0 * kPi * pairs);
  return {main * scale, half * scale};
}

}  // namespace

HopfEstimate hopf_via_whitehead(const TripleMap& map, const WhiteheadConfig& cfg) {
  const Stereographic chart(quiet_pole(map));
  const Field field(map, chart);
  const Sampler sampler(field, chart, cfg);

  std::uint64_t batches = std::max<std::uint64_t>(1, cfg.batches);
  std::uint64_t per_batch = std::max<std::uint64_t>(2, cfg.budget / batches);
  const std::size_t m = static_cast<std::size_t>(
      std::max(2.0, std::llround(0.5 + std::sqrt(static_cast<double>(per_batch)))));

  std::vector<BatchResult> results(batches);
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (std::uint64_t b = 0; b < batches; ++b)
      results[b] = run_batch(field, sampler, cfg.seed, b, m, cfg.cutoff);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t b = static_cast<std::uint64_t>(t); b < batches;
             b += static_cast<std::uint64_t>(threads))
          results[b] = run_batch(field, sampler, cfg.seed, b, m, cfg.cutoff);
      });
    }
    for (auto& th : pool) th.join();
  }

  // Fixed-order reduction keeps the result identical for any thread count.
  double mean = 0.0, mean_half = 0.0;
  for (const auto& r : results) {
    mean += r.main;
    mean_half += r.half;
  }
  mean /= static_cast<double>(batches);
  mean_half /= static_cast<double>(batches);
  double var = 0.0;
  for (const auto& r : results) var += (r.main - mean) * (r.main - mean);
  const double se = batches > 1
                        ? std::sqrt(var / (static_cast<double>(batches) *
                                           static_cast<double>(batches - 1)))
                        : 0.0;
  if (se > 0.5) throw BudgetTooSmall(se);

  const int sign = map.orientation();
  HopfEstimate est;
  est.method = Method::Whitehead;
  est.raw = sign * mean;
  est.value = static_cast<int>(std::lround(est.raw));
  est.residual = std::abs(est.raw - est.value);
  est.diag.seed = cfg.seed;
  est.diag.std_error = se;
  est.diag.half_cutoff_raw = sign * mean_half;
  est.diag.mc_batches = batches;
  est.diag.mc_points = batches * m;
  est.diag.mc_pairs = batches * static_cast<std::uint64_t>(m) * (m - 1);
  est.diag.pole = chart.pole();
  return est;
}

}  // namespace milnor
