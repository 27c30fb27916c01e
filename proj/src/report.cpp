#include "milnor/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "milnor/dsl.hpp"

namespace milnor {

namespace {

TripleMap make_triple(const MapR4R2& F, Chirality chi, const EnhanceConfig& cfg) {
  return TripleMap(gauss_components(F), chi, cfg.radius, cfg.guard_tolerance);
}

LinkingConfig linking_config(const EnhanceConfig& cfg) {
  LinkingConfig lc;
  lc.trace.step = cfg.step;
  lc.seed = cfg.seed;
  return lc;
}

WhiteheadConfig whitehead_config(const EnhanceConfig& cfg) {
  WhiteheadConfig wc;
  wc.budget = cfg.budget;
  wc.seed = cfg.seed;
  wc.threads = cfg.threads;
  return wc;
}

HopfEstimate estimate_triple(const MapR4R2& F, Chirality chi, const EnhanceConfig& cfg,
                             std::vector<SphereCurve>* keep_curves = nullptr) {
  const TripleMap map = make_triple(F, chi, cfg);
  if (cfg.method == Method::Whitehead) return hopf_via_whitehead(map, whitehead_config(cfg));
  return hopf_via_linking(map, linking_config(cfg), keep_curves);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

HopfEstimate lambda_of(const MapR4R2& F, const EnhanceConfig& cfg) {
  return estimate_triple(F, Chirality::SelfDual, cfg);
}

HopfEstimate rho_of(const MapR4R2& F, const EnhanceConfig& cfg) {
  return estimate_triple(F, Chirality::AntiSelfDual, cfg);
}

int mu_of(const MapR4R2& F, const EnhanceConfig& cfg) {
  return lambda_of(F, cfg).value + rho_of(F, cfg).value;
}

int brieskorn_mu(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("brieskorn_mu: exponents must be >= 1");
  // Monomials z^i w^j outside (z^(p-1), w^(q-1)): i <= p-2 and j <= q-2.
  int count = 0;
  for (int i = 0; i <= p - 2; ++i)
    for (int j = 0; j <= q - 2; ++j) ++count;
  return count;
}

bool EnhancementReport::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

EnhancementReport full_report(const MapR4R2& F, const EnhanceConfig& cfg) {
  EnhancementReport rep;
  rep.radius = cfg.radius;
  rep.seed = cfg.seed;
  rep.map_source = F.source_text.empty() ? pretty_print(F) : F.source_text;

  rep.isolated_min = verify_isolated(F, cfg.radius, cfg.isolated_samples);
  if (rep.isolated_min <= cfg.isolated_threshold) {
    rep.valid = false;
    rep.error = "isolated critical point check failed: min sum of squared minors " +
                fmt(rep.isolated_min) + " on the radius-" + fmt(cfg.radius) + " sphere";
    return rep;
  }
  rep.checks.push_back({"isolated_critical_point",
                        true,
                        "min sum of squared minors " + fmt(rep.isolated_min)});

  try {
    rep.lambda_estimate = estimate_triple(F, Chirality::SelfDual, cfg, &rep.curves);
    std::vector<SphereCurve> rho_curves;
    rep.rho_estimate = estimate_triple(F, Chirality::AntiSelfDual, cfg, &rho_curves);
    rep.curves.insert(rep.curves.end(), rho_curves.begin(), rho_curves.end());
  } catch (const std::exception& e) {
    rep.valid = false;
    rep.error = e.what();
    return rep;
  }
  rep.lambda = rep.lambda_estimate.value;
  rep.rho = rep.rho_estimate.value;
  rep.mu = rep.lambda + rep.rho;
  rep.valid = true;

  if (cfg.method == Method::Both) {
    try {
      rep.lambda_whitehead =
          hopf_via_whitehead(make_triple(F, Chirality::SelfDual, cfg), whitehead_config(cfg));
      rep.rho_whitehead = hopf_via_whitehead(make_triple(F, Chirality::AntiSelfDual, cfg),
                                             whitehead_config(cfg));
      const bool lam_ok = rep.lambda_whitehead->value == rep.lambda &&
                          std::abs(rep.lambda_whitehead->raw - rep.lambda) < 0.5;
      const bool rho_ok = rep.rho_whitehead->value == rep.rho &&
                          std::abs(rep.rho_whitehead->raw - rep.rho) < 0.5;
      rep.checks.push_back({"method_agreement_lambda", lam_ok,
                            "whitehead raw " + fmt(rep.lambda_whitehead->raw) + " (se " +
                                fmt(rep.lambda_whitehead->diag.std_error) + ") vs linking " +
                                std::to_string(rep.lambda)});
      rep.checks.push_back({"method_agreement_rho", rho_ok,
                            "whitehead raw " + fmt(rep.rho_whitehead->raw) + " (se " +
                                fmt(rep.rho_whitehead->diag.std_error) + ") vs linking " +
                                std::to_string(rep.rho)});
    } catch (const std::exception& e) {
      rep.checks.push_back({"method_agreement", false, e.what()});
    }
  }

  if (cfg.mirror_check) {
    try {
      const MapR4R2 mirrored = mirror(F);
      const HopfEstimate mirror_est = estimate_triple(mirrored, Chirality::SelfDual, cfg);
      rep.mirror_lambda = mirror_est.value;
      const bool sum_ok = *rep.mirror_lambda + rep.lambda == rep.mu;
      const bool swap_ok = *rep.mirror_lambda == rep.rho;
      rep.checks.push_back({"mirror_sum", sum_ok,
                            "lambda(mirror) + lambda = " + std::to_string(*rep.mirror_lambda) +
                                " + " + std::to_string(rep.lambda) + " vs mu = " +
                                std::to_string(rep.mu)});
      rep.checks.push_back({"mirror_swap", swap_ok,
                            "lambda(mirror) = " + std::to_string(*rep.mirror_lambda) +
                                " vs rho = " + std::to_string(rep.rho)});
    } catch (const std::exception& e) {
      rep.checks.push_back({"mirror_sum", false, e.what()});
    }
  }

  if (!F.source_text.empty()) {
    if (const auto pq = match_brieskorn(F.source_text)) {
      const int oracle = brieskorn_mu(pq->first, pq->second);
      rep.checks.push_back({"brieskorn_mu", oracle == rep.mu,
                            "mu = " + std::to_string(rep.mu) + " vs (p-1)(q-1) enumeration = " +
                                std::to_string(oracle)});
    }
  }

  if (cfg.radius_check) {
    try {
      EnhanceConfig half = cfg;
      half.radius = 0.5 * cfg.radius;
      half.radius_check = false;
      const int lam2 = estimate_triple(F, Chirality::SelfDual, half).value;
      const int rho2 = estimate_triple(F, Chirality::AntiSelfDual, half).value;
      rep.checks.push_back({"radius_invariance", lam2 == rep.lambda && rho2 == rep.rho,
                            "radius " + fmt(half.radius) + ": lambda " + std::to_string(lam2) +
                                ", rho " + std::to_string(rho2)});
    } catch (const std::exception& e) {
      rep.checks.push_back({"radius_invariance", false, e.what()});
    }
  }

  return rep;
}

namespace {

nlohmann::ordered_json estimate_json(const HopfEstimate& e) {
  nlohmann::ordered_json j;
  j["value"] = e.value;
  j["raw"] = e.raw;
  j["residual"] = e.residual;
  j["method"] = method_name(e.method);
  if (e.method == Method::Linking) {
    j["regular_values"] = {{e.diag.q1.x(), e.diag.q1.y(), e.diag.q1.z()},
                           {e.diag.q2.x(), e.diag.q2.y(), e.diag.q2.z()}};
    j["curve_counts"] = {e.diag.curves_q1, e.diag.curves_q2};
    j["max_pair_residual"] = e.diag.max_pair_residual;
    j["trace_step"] = e.diag.trace_step;
    j["retries"] = e.diag.retries;
  } else {
    j["std_error"] = e.diag.std_error;
    j["half_cutoff_raw"] = e.diag.half_cutoff_raw;
    j["sample_pairs"] = e.diag.mc_pairs;
  }
  j["seed"] = e.diag.seed;
  return j;
}

}  // namespace

std::string report_to_json(const EnhancementReport& rep, bool with_timestamp) {
  nlohmann::ordered_json j;
  j["map_source"] = rep.map_source;
  j["radius"] = rep.radius;
  j["seed"] = rep.seed;
  j["valid"] = rep.valid;
  if (!rep.valid) {
    j["error"] = rep.error;
  } else {
    j["lambda"] = rep.lambda;
    j["rho"] = rep.rho;
    j["mu"] = rep.mu;
    j["lambda_estimate"] = estimate_json(rep.lambda_estimate);
    j["rho_estimate"] = estimate_json(rep.rho_estimate);
    if (rep.lambda_whitehead) j["lambda_whitehead"] = estimate_json(*rep.lambda_whitehead);
    if (rep.rho_whitehead) j["rho_whitehead"] = estimate_json(*rep.rho_whitehead);
    if (rep.mirror_lambda)
      j["mirror_lambda"] = *rep.mirror_lambda;
    else
      j["mirror_lambda"] = nullptr;
  }
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["checks"] = checks;

  // Deterministic effort counters: reproducible stand-ins for wall times so
  // that identical (input, config, seed) yields identical JSON. Wall-clock
  // times go to the human-readable output only.
  nlohmann::ordered_json timings;
  timings["trace_points"] =
      rep.lambda_estimate.diag.trace_points + rep.rho_estimate.diag.trace_points;
  timings["gauss_segment_pairs"] =
      rep.lambda_estimate.diag.segment_pairs + rep.rho_estimate.diag.segment_pairs;
  std::uint64_t mc_pairs = 0;
  if (rep.lambda_whitehead) mc_pairs += rep.lambda_whitehead->diag.mc_pairs;
  if (rep.rho_whitehead) mc_pairs += rep.rho_whitehead->diag.mc_pairs;
  if (rep.lambda_estimate.method == Method::Whitehead)
    mc_pairs += rep.lambda_estimate.diag.mc_pairs + rep.rho_estimate.diag.mc_pairs;
  timings["mc_pairs"] = mc_pairs;
  j["timings"] = timings;

  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    j["timestamp"] = buf;
  }
  return j.dump(2);
}

std::string curves_to_csv(const std::vector<SphereCurve>& curves) {
  std::ostringstream out;
  out << "x,y,u,v\n";
  bool first = true;
  for (const auto& c : curves) {
    if (!first) out << "\n";
    first = false;
    char buf[160];
    for (const auto& p : c.points) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g\n", p[0], p[1], p[2], p[3]);
      out << buf;
    }
  }
  return out.str();
}

}  // namespace milnor
