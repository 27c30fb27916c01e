#include "milnor/hopf.hpp"

#include <cmath>

namespace milnor {

std::string method_name(Method m) {
  switch (m) {
    case Method::Linking: return "linking";
    case Method::Whitehead: return "whitehead";
    case Method::Both: return "both";
  }
  return "?";
}

namespace {

// Regular-value pair kept away from coincidence and antipodality so the two
// preimage families stay well separated.
std::pair<Eigen::Vector3d, Eigen::Vector3d> pick_regular_values(Rng& rng, double min_angle) {
  const Eigen::Vector3d q1 = random_s2(rng);
  while (true) {
    const Eigen::Vector3d q2 = random_s2(rng);
    if (std::abs(q1.dot(q2)) <= std::cos(min_angle)) return {q1, q2};
  }
}

}  // namespace

HopfEstimate hopf_via_linking(const TripleMap& map, const LinkingConfig& cfg,
                              std::vector<SphereCurve>* keep_curves) {
  Rng rng(cfg.seed);
  std::string last_error = "no attempt made";

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    const auto [q1, q2] = pick_regular_values(rng, cfg.rv_min_angle);

    TraceConfig tc = cfg.trace;
    for (int refine = 0; refine <= cfg.refine_limit; ++refine) {
      try {
        const std::vector<SphereCurve> curves1 = trace_all_preimages(map, q1, tc);
        const std::vector<SphereCurve> curves2 = trace_all_preimages(map, q2, tc);

        double raw = 0.0;
        long long total = 0;
        double max_residual = 0.0;
        std::uint64_t segment_pairs = 0;
        for (const auto& c1 : curves1) {
          for (const auto& c2 : curves2) {
            const LinkingResult lk = linking_number(c1, c2);
            raw += lk.raw;
            total += lk.value;
            max_residual = std::max(max_residual, lk.residual);
            segment_pairs += lk.segment_pairs;
          }
        }

        const int sign = map.orientation();
        HopfEstimate est;
        est.method = Method::Linking;
        est.raw = sign * raw;
        est.value = static_cast<int>(sign * total);
        est.residual = std::abs(est.raw - est.value);
        est.diag.seed = cfg.seed;
        est.diag.retries = attempt;
        est.diag.q1 = q1;
        est.diag.q2 = q2;
        est.diag.curves_q1 = static_cast<int>(curves1.size());
        est.diag.curves_q2 = static_cast<int>(curves2.size());
        est.diag.max_pair_residual = max_residual;
        est.diag.segment_pairs = segment_pairs;
        est.diag.trace_step = tc.step;
        for (const auto& c : curves1) est.diag.trace_points += c.points.size();
        for (const auto& c : curves2) est.diag.trace_points += c.points.size();
        if (keep_curves) {
          keep_curves->clear();
          keep_curves->insert(keep_curves->end(), curves1.begin(), curves1.end());
          keep_curves->insert(keep_curves->end(), curves2.begin(), curves2.end());
        }
        return est;
      } catch (const PoorConditioning& e) {
        last_error = e.what();
        tc.step *= 0.5;  // refine and redo this regular-value pair
      } catch (const CurvesTooClose& e) {
        last_error = e.what();
        break;  // fresh regular values
      } catch (const RankDrop& e) {
        last_error = e.what();
        break;
      } catch (const MaxStepsExceeded& e) {
        last_error = e.what();
        break;
      }
    }
  }
  throw RankDrop("linking method exhausted its retry budget (" + last_error + ")");
}

}  // namespace milnor
