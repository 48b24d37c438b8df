#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "distgame/gan.hpp"

namespace distgame {

enum class UpdateMode { Simultaneous, Alternating };

const char* to_string(UpdateMode mode);
std::optional<UpdateMode> parse_update_mode(std::string_view name);

/// Step protocol for the two-player gradient game. The discriminator ascends
/// the value function; the generator descends its expected cost.
struct DynamicsConfig {
  DynamicsConfig(ParamVector init_theta, Discriminator init_classifier, GeneratorCostVariant cost_variant)
      : init_theta_g(std::move(init_theta)),
        init_disc(std::move(init_classifier)),
        cost(cost_variant) {}

  double eta_g = 0.1;
  double eta_c = 0.1;
  UpdateMode mode = UpdateMode::Simultaneous;
  int disc_steps_per_gen_step = 1;
  int iterations = 1000;
  ParamVector init_theta_g;
  Discriminator init_disc;
  GeneratorCostVariant cost;

  void validate() const;
};

struct TrajectorySnapshot {
  int iteration = 0;
  Vector theta_g;
  Vector disc_logits;
  double value = 0.0;
  double grad_norm_g = 0.0;
  double grad_norm_c = 0.0;
};

/// Recorded state sequence of one simulated run. nonfinite_abort marks a
/// trajectory truncated because a value or gradient stopped being finite.
struct GameTrajectory {
  std::vector<TrajectorySnapshot> snapshots;
  bool nonfinite_abort = false;

  const TrajectorySnapshot& back() const { return snapshots.back(); }
};

/// Minimal two-player game surface the simulator drives: a payoff the
/// discriminator ascends and a generator loss gradient the generator descends.
class TwoPlayerGame {
 public:
  virtual ~TwoPlayerGame() = default;

  virtual Index generator_dim() const = 0;
  virtual Index discriminator_dim() const = 0;
  virtual double value(const Vector& theta_g, const Vector& disc_logits) const = 0;
  virtual Vector generator_grad(const Vector& theta_g, const Vector& disc_logits) const = 0;
  virtual Vector discriminator_grad(const Vector& theta_g, const Vector& disc_logits) const = 0;
};

/// Softmax generator against a tabular classifier on a fixed data table.
class TabularDistinguishabilityGame : public TwoPlayerGame {
 public:
  TabularDistinguishabilityGame(DistributionTable p_d, GeneratorCostVariant cost);

  Index generator_dim() const override { return p_d_.size(); }
  Index discriminator_dim() const override { return p_d_.size(); }
  double value(const Vector& theta_g, const Vector& disc_logits) const override;
  Vector generator_grad(const Vector& theta_g, const Vector& disc_logits) const override;
  Vector discriminator_grad(const Vector& theta_g, const Vector& disc_logits) const override;

 private:
  DistributionTable p_d_;
  GeneratorCostVariant cost_;
};

/// Two-parameter game V(u, v) = u * v. Simultaneous gradient steps provably
/// spiral outward: radius^2 grows by exactly (1 + eta^2) per step.
class BilinearGame : public TwoPlayerGame {
 public:
  Index generator_dim() const override { return 1; }
  Index discriminator_dim() const override { return 1; }
  double value(const Vector& theta_g, const Vector& disc_logits) const override;
  Vector generator_grad(const Vector& theta_g, const Vector& disc_logits) const override;
  Vector discriminator_grad(const Vector& theta_g, const Vector& disc_logits) const override;
};

/// Runs the configured update protocol and records every iteration
/// (iteration 0 is the initial state). Deterministic: identical inputs give
/// identical trajectories on one platform.
GameTrajectory simulate(const TwoPlayerGame& game, const DynamicsConfig& cfg);

/// simulate() on the tabular game against p_d with cfg.cost.
GameTrajectory simulate_dynamics(const DistributionTable& p_d, const DynamicsConfig& cfg);

enum class Verdict { Converged, Oscillating, Diverging, Undetermined };

const char* to_string(Verdict verdict);

struct DynamicsReport {
  Verdict verdict = Verdict::Undetermined;
  double final_value = 0.0;
  std::pair<double, double> final_grad_norms{0.0, 0.0};
  /// Fraction of sign changes of the per-iteration value differences over the
  /// tail window, in [0, 1].
  double oscillation_score = 0.0;
};

inline constexpr double kDefaultConvergenceTol = 1e-8;
inline constexpr double kDivergenceCap = 1e6;        // on max(|theta_g|, |a|) entries
inline constexpr double kThetaVarianceFloor = 1e-18; // tail trace variance of theta_g

/// Classifies a trajectory. Converged: both final gradient norms <= tol.
/// Diverging: non-finite state, entries beyond kDivergenceCap, or joint state
/// norm strictly growing across the whole tail window. Oscillating: tail mean
/// gradient norm >= 10 tol while theta_g keeps moving. Else Undetermined.
DynamicsReport diagnose_trajectory(const GameTrajectory& traj, double tol = kDefaultConvergenceTol);

}  // namespace distgame
