#include "distgame/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace distgame {

const char* to_string(UpdateMode mode) {
  return mode == UpdateMode::Simultaneous ? "simultaneous" : "alternating";
}

std::optional<UpdateMode> parse_update_mode(std::string_view name) {
  if (name == "simultaneous") return UpdateMode::Simultaneous;
  if (name == "alternating") return UpdateMode::Alternating;
  return std::nullopt;
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Converged:
      return "Converged";
    case Verdict::Oscillating:
      return "Oscillating";
    case Verdict::Diverging:
      return "Diverging";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

void DynamicsConfig::validate() const {
  if (!(eta_g > 0.0) || !std::isfinite(eta_g) || !(eta_c > 0.0) || !std::isfinite(eta_c)) {
    throw std::invalid_argument("DynamicsConfig: step sizes must be positive and finite");
  }
  if (disc_steps_per_gen_step < 1) {
    throw std::invalid_argument("DynamicsConfig: need at least one discriminator step");
  }
  if (iterations < 1) {
    throw std::invalid_argument("DynamicsConfig: need at least one iteration");
  }
}

TabularDistinguishabilityGame::TabularDistinguishabilityGame(DistributionTable p_d,
                                                             GeneratorCostVariant cost)
    : p_d_(std::move(p_d)), cost_(cost) {}

double TabularDistinguishabilityGame::value(const Vector& theta_g, const Vector& disc_logits) const {
  return value_function(p_d_, DistributionTable(softmax(theta_g)), Discriminator(disc_logits));
}

Vector TabularDistinguishabilityGame::generator_grad(const Vector& theta_g,
                                                     const Vector& disc_logits) const {
  return generator_gradient_exact(cost_, Discriminator(disc_logits), ParamVector(theta_g));
}

Vector TabularDistinguishabilityGame::discriminator_grad(const Vector& theta_g,
                                                         const Vector& disc_logits) const {
  return discriminator_gradient(Discriminator(disc_logits), p_d_,
                                DistributionTable(softmax(theta_g)));
}

double BilinearGame::value(const Vector& theta_g, const Vector& disc_logits) const {
  return theta_g(0) * disc_logits(0);
}

Vector BilinearGame::generator_grad(const Vector& theta_g, const Vector& disc_logits) const {
  (void)theta_g;
  Vector g(1);
  g(0) = disc_logits(0);
  return g;
}

Vector BilinearGame::discriminator_grad(const Vector& theta_g, const Vector& disc_logits) const {
  (void)disc_logits;
  Vector g(1);
  g(0) = theta_g(0);
  return g;
}

GameTrajectory simulate(const TwoPlayerGame& game, const DynamicsConfig& cfg) {
  cfg.validate();
  detail::require_same_size(cfg.init_theta_g.size(), game.generator_dim(), "simulate");
  detail::require_same_size(cfg.init_disc.size(), game.discriminator_dim(), "simulate");

  Vector theta = cfg.init_theta_g.logits();
  Vector a = cfg.init_disc.logits();

  GameTrajectory traj;
  traj.snapshots.reserve(static_cast<std::size_t>(cfg.iterations) + 1);

  const auto record = [&](int iteration) -> bool {
    const double v = game.value(theta, a);
    const Vector gg = game.generator_grad(theta, a);
    const Vector gc = game.discriminator_grad(theta, a);
    if (!std::isfinite(v) || !gg.allFinite() || !gc.allFinite()) {
      traj.nonfinite_abort = true;
      return false;
    }
    traj.snapshots.push_back({iteration, theta, a, v, gg.norm(), gc.norm()});
    return true;
  };

  if (!record(0)) {
    return traj;
  }

  for (int it = 1; it <= cfg.iterations; ++it) {
    if (cfg.mode == UpdateMode::Simultaneous) {
      const Vector gg = game.generator_grad(theta, a);
      const Vector gc = game.discriminator_grad(theta, a);
      if (!gg.allFinite() || !gc.allFinite()) {
        traj.nonfinite_abort = true;
        break;
      }
      theta -= cfg.eta_g * gg;
      a += cfg.eta_c * gc;
    } else {
      bool bad = false;
      for (int s = 0; s < cfg.disc_steps_per_gen_step; ++s) {
        const Vector gc = game.discriminator_grad(theta, a);
        if (!gc.allFinite()) {
          bad = true;
          break;
        }
        a += cfg.eta_c * gc;
      }
      if (bad) {
        traj.nonfinite_abort = true;
        break;
      }
      const Vector gg = game.generator_grad(theta, a);
      if (!gg.allFinite()) {
        traj.nonfinite_abort = true;
        break;
      }
      theta -= cfg.eta_g * gg;
    }
    if (!theta.allFinite() || !a.allFinite()) {
      traj.nonfinite_abort = true;
      break;
    }
    if (!record(it)) {
      break;
    }
  }
  return traj;
}

GameTrajectory simulate_dynamics(const DistributionTable& p_d, const DynamicsConfig& cfg) {
  return simulate(TabularDistinguishabilityGame(p_d, cfg.cost), cfg);
}

DynamicsReport diagnose_trajectory(const GameTrajectory& traj, double tol) {
  if (traj.snapshots.empty()) {
    throw std::invalid_argument("diagnose_trajectory: empty trajectory");
  }
  const auto& snaps = traj.snapshots;
  const std::size_t n = snaps.size();
  const std::size_t tail_begin = n / 2;  // last 50% of iterations

  DynamicsReport report;
  const auto& last = snaps.back();
  report.final_value = last.value;
  report.final_grad_norms = {last.grad_norm_g, last.grad_norm_c};

  // Sign-change fraction of the per-iteration value differences on the tail.
  if (n - tail_begin >= 3) {
    std::size_t pairs = 0;
    std::size_t flips = 0;
    double prev_diff = snaps[tail_begin + 1].value - snaps[tail_begin].value;
    for (std::size_t i = tail_begin + 2; i < n; ++i) {
      const double diff = snaps[i].value - snaps[i - 1].value;
      ++pairs;
      if (prev_diff * diff < 0.0) {
        ++flips;
      }
      prev_diff = diff;
    }
    report.oscillation_score =
        pairs == 0 ? 0.0 : static_cast<double>(flips) / static_cast<double>(pairs);
  }

  bool beyond_cap = false;
  bool nonfinite = traj.nonfinite_abort;
  for (const auto& s : snaps) {
    if (!std::isfinite(s.value) || !s.theta_g.allFinite() || !s.disc_logits.allFinite()) {
      nonfinite = true;
      break;
    }
    const double extent =
        std::max(s.theta_g.cwiseAbs().maxCoeff(), s.disc_logits.cwiseAbs().maxCoeff());
    if (extent > kDivergenceCap) {
      beyond_cap = true;
      break;
    }
  }
  if (nonfinite || beyond_cap) {
    report.verdict = Verdict::Diverging;
    return report;
  }

  if (last.grad_norm_g <= tol && last.grad_norm_c <= tol) {
    report.verdict = Verdict::Converged;
    return report;
  }

  // Joint state norm strictly growing across the whole tail: outward spiral.
  if (n - tail_begin >= 2) {
    bool monotone = true;
    const auto joint_norm = [](const TrajectorySnapshot& s) {
      return std::sqrt(s.theta_g.squaredNorm() + s.disc_logits.squaredNorm());
    };
    double prev = joint_norm(snaps[tail_begin]);
    for (std::size_t i = tail_begin + 1; i < n && monotone; ++i) {
      const double cur = joint_norm(snaps[i]);
      monotone = cur > prev;
      prev = cur;
    }
    const double first = joint_norm(snaps[tail_begin]);
    if (monotone && first > 0.0 && prev > first * (1.0 + 1e-9)) {
      report.verdict = Verdict::Diverging;
      return report;
    }
  }

  double grad_mean = 0.0;
  for (std::size_t i = tail_begin; i < n; ++i) {
    grad_mean += std::max(snaps[i].grad_norm_g, snaps[i].grad_norm_c);
  }
  grad_mean /= static_cast<double>(n - tail_begin);

  Vector theta_mean = Vector::Zero(snaps[0].theta_g.size());
  for (std::size_t i = tail_begin; i < n; ++i) {
    theta_mean += snaps[i].theta_g;
  }
  theta_mean /= static_cast<double>(n - tail_begin);
  double theta_var = 0.0;
  for (std::size_t i = tail_begin; i < n; ++i) {
    theta_var += (snaps[i].theta_g - theta_mean).squaredNorm();
  }
  theta_var /= static_cast<double>(n - tail_begin);

  if (grad_mean >= 10.0 * tol && theta_var > kThetaVarianceFloor) {
    report.verdict = Verdict::Oscillating;
    return report;
  }

  report.verdict = Verdict::Undetermined;
  return report;
}

}  // namespace distgame
