#include "distgame/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "distgame/random.hpp"

namespace distgame {

namespace {

Index draw_support_size(UniformStream& stream, Index k_min, Index k_max) {
  const double u = stream.next();
  const Index span = k_max - k_min + 1;
  const Index k = k_min + static_cast<Index>(u * static_cast<double>(span));
  return std::min(k, k_max);
}

}  // namespace

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

std::vector<VerificationReport> verify_sce(const SuiteOptions& opts) {
  UniformStream stream(opts.seed);

  VerificationReport identity{"sce-mle-gradient-identity", opts.trials, 0.0, 0.0, 1e-10, true};
  VerificationReport objective{"sce-objective-constant", opts.trials, 0.0, 0.0, 1e-12, true};
  VerificationReport vanishing{"sce-vanishing-term", opts.trials, 0.0, 0.0, 1e-12, true};

  for (int t = 0; t < opts.trials; ++t) {
    const Index k = draw_support_size(stream, opts.k_min, opts.k_max);
    const ParamVector theta = random_logits(stream, k, -4.0, 4.0);
    const DistributionTable p_d = random_distribution(stream, k);

    const GradientReport cmp =
        compare_gradients(sce_gradient(theta, p_d), (0.5 * mle_gradient(theta, p_d)).eval(),
                          identity.tolerance);
    identity.max_abs_diff = std::max(identity.max_abs_diff, cmp.max_abs_diff);
    identity.max_rel_diff = std::max(identity.max_rel_diff, cmp.max_rel_diff);
    identity.pass = identity.pass && cmp.pass;

    const double objective_dev = std::abs(sce_objective_value(theta, p_d) - kChanceValue);
    objective.max_abs_diff = std::max(objective.max_abs_diff, objective_dev);

    const double vanish_dev = vanishing_term(theta).cwiseAbs().maxCoeff();
    vanishing.max_abs_diff = std::max(vanishing.max_abs_diff, vanish_dev);
  }
  objective.max_rel_diff = objective.max_abs_diff;
  objective.pass = objective.max_abs_diff <= objective.tolerance;
  vanishing.max_rel_diff = vanishing.max_abs_diff;
  vanishing.pass = vanishing.max_abs_diff <= vanishing.tolerance;

  return {identity, objective, vanishing};
}

std::vector<VerificationReport> verify_gan_mle(const SuiteOptions& opts) {
  UniformStream stream(opts.seed);

  VerificationReport recovery{"gan-mle-recovery", opts.trials, 0.0, 0.0, 1e-10, true};
  VerificationReport offset{"generator-cost-offset-invariance", opts.trials, 0.0, 0.0, 1e-12, true};
  VerificationReport stationarity{"optimal-discriminator-stationarity", opts.trials, 0.0, 0.0,
                                  1e-12, true};
  VerificationReport perturbation{"optimal-discriminator-perturbation", opts.trials, 0.0, 0.0, 0.0,
                                  true};

  const GeneratorCostKind kinds[] = {GeneratorCostKind::Minimax, GeneratorCostKind::Heuristic,
                                     GeneratorCostKind::MaximumLikelihood};
  const double offsets[] = {-10.0, -1.0, 0.0, 1.0, 10.0};

  for (int t = 0; t < opts.trials; ++t) {
    const Index k = draw_support_size(stream, opts.k_min, opts.k_max);
    const ParamVector theta_g = random_logits(stream, k, -4.0, 4.0);
    const DistributionTable p_d = random_distribution(stream, k);
    const DistributionTable p_g = softmax_probs(theta_g);
    const Discriminator disc = optimal_discriminator(p_d, p_g);

    const GradientReport cmp = compare_gradients(
        generator_gradient_exact({GeneratorCostKind::MaximumLikelihood}, disc, theta_g),
        (-mle_gradient(theta_g, p_d)).eval(), recovery.tolerance);
    recovery.max_abs_diff = std::max(recovery.max_abs_diff, cmp.max_abs_diff);
    recovery.max_rel_diff = std::max(recovery.max_rel_diff, cmp.max_rel_diff);
    recovery.pass = recovery.pass && cmp.pass;

    const GeneratorCostKind kind = kinds[t % 3];
    const Vector base = generator_gradient_exact({kind, 0.0}, disc, theta_g);
    for (const double c : offsets) {
      const Vector shifted = generator_gradient_exact({kind, c}, disc, theta_g);
      offset.max_abs_diff =
          std::max(offset.max_abs_diff, (shifted - base).cwiseAbs().maxCoeff());
    }

    stationarity.max_abs_diff =
        std::max(stationarity.max_abs_diff,
                 discriminator_gradient(disc, p_d, p_g).cwiseAbs().maxCoeff());

    const double v_star = value_function(p_d, p_g, disc);
    for (int rep = 0; rep < 2; ++rep) {
      Vector delta(k);
      for (Index i = 0; i < k; ++i) {
        delta(i) = stream.next(-0.1, 0.1);
      }
      const double v = value_function(p_d, p_g, Discriminator(disc.logits() + delta));
      perturbation.max_abs_diff = std::max(perturbation.max_abs_diff, v - v_star);
      perturbation.pass = perturbation.pass && v <= v_star;
    }
  }
  offset.max_rel_diff = offset.max_abs_diff;
  offset.pass = offset.max_abs_diff <= offset.tolerance;
  stationarity.max_rel_diff = stationarity.max_abs_diff;
  stationarity.pass = stationarity.max_abs_diff <= stationarity.tolerance;
  perturbation.max_abs_diff = std::max(perturbation.max_abs_diff, 0.0);
  perturbation.max_rel_diff = perturbation.max_abs_diff;

  return {recovery, offset, stationarity, perturbation};
}

std::vector<VerificationReport> verify_dynamics_sanity(std::uint64_t seed) {
  // Equilibrium stays fixed: generator already on the data table, classifier
  // at chance.
  UniformStream stream(seed, 1);
  const ParamVector theta_star = random_logits(stream, 4, -1.0, 1.0);
  const DistributionTable p_d = softmax_probs(theta_star);
  DynamicsConfig eq_cfg(theta_star, Discriminator::zero(4), {GeneratorCostKind::Minimax});
  eq_cfg.mode = UpdateMode::Simultaneous;
  eq_cfg.eta_g = 0.1;
  eq_cfg.eta_c = 0.1;
  eq_cfg.iterations = 1000;
  const GameTrajectory eq_traj = simulate_dynamics(p_d, eq_cfg);

  VerificationReport equilibrium{"dynamics-equilibrium-fixed", eq_cfg.iterations, 0.0, 0.0, 1e-12,
                                 true};
  for (const auto& snap : eq_traj.snapshots) {
    equilibrium.max_abs_diff =
        std::max({equilibrium.max_abs_diff, snap.grad_norm_g, snap.grad_norm_c});
  }
  equilibrium.max_rel_diff = equilibrium.max_abs_diff;
  equilibrium.pass = equilibrium.max_abs_diff <= equilibrium.tolerance &&
                     diagnose_trajectory(eq_traj).verdict == Verdict::Converged;

  // Simultaneous steps on the bilinear game follow the exact outward spiral.
  DynamicsConfig bi_cfg(ParamVector{1.0}, Discriminator{0.0}, {GeneratorCostKind::Minimax});
  bi_cfg.mode = UpdateMode::Simultaneous;
  bi_cfg.eta_g = 0.1;
  bi_cfg.eta_c = 0.1;
  bi_cfg.iterations = 100;
  const GameTrajectory bi_traj = simulate(BilinearGame(), bi_cfg);

  VerificationReport bilinear{"dynamics-bilinear-divergence", bi_cfg.iterations, 0.0, 0.0, 1e-12,
                              true};
  const double growth = 1.0 + bi_cfg.eta_g * bi_cfg.eta_c;
  double expected = 1.0;
  for (const auto& snap : bi_traj.snapshots) {
    const double radius_sq = snap.theta_g.squaredNorm() + snap.disc_logits.squaredNorm();
    bilinear.max_rel_diff =
        std::max(bilinear.max_rel_diff, std::abs(radius_sq / expected - 1.0));
    bilinear.max_abs_diff = std::max(bilinear.max_abs_diff, std::abs(radius_sq - expected));
    expected *= growth;
  }
  bilinear.pass = bilinear.max_rel_diff <= bilinear.tolerance &&
                  diagnose_trajectory(bi_traj).verdict == Verdict::Diverging;

  // Alternating updates with a well-trained discriminator pull the generator
  // onto the data table.
  const DistributionTable target{0.75, 0.25};
  DynamicsConfig alt_cfg(ParamVector::zero(2), Discriminator::zero(2),
                         {GeneratorCostKind::Minimax});
  alt_cfg.mode = UpdateMode::Alternating;
  alt_cfg.disc_steps_per_gen_step = 200;
  alt_cfg.eta_c = 0.5;
  alt_cfg.eta_g = 0.05;
  alt_cfg.iterations = 2000;
  const GameTrajectory alt_traj = simulate_dynamics(target, alt_cfg);

  VerificationReport alternating{"dynamics-alternating-convergence", alt_cfg.iterations, 0.0, 0.0,
                                 1e-3, true};
  const Vector final_probs = softmax(alt_traj.back().theta_g);
  alternating.max_abs_diff = (final_probs - target.probs()).cwiseAbs().maxCoeff();
  alternating.max_rel_diff = alternating.max_abs_diff;
  alternating.pass = alternating.max_abs_diff <= alternating.tolerance;

  return {equilibrium, bilinear, alternating};
}

std::vector<VerificationReport> verify_variance_ordering(std::uint64_t seed) {
  const std::vector<std::int64_t> counts{100, 1000, 10000, 100000};
  const std::vector<VarianceStudyRow> rows = variance_study(counts, seed);

  VerificationReport ordering{"variance-ordering-mle-over-minimax",
                              static_cast<int>(counts.size()), 0.0, 0.0, 0.0, true};
  double min_gap = std::numeric_limits<double>::infinity();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (const std::int64_t n : counts) {
    double mle_var = 0.0;
    double minimax_var = 0.0;
    for (const auto& row : rows) {
      if (row.n_samples != n) continue;
      if (row.variant == GeneratorCostKind::MaximumLikelihood) mle_var = row.per_sample_variance;
      if (row.variant == GeneratorCostKind::Minimax) minimax_var = row.per_sample_variance;
    }
    ordering.pass = ordering.pass && mle_var > minimax_var;
    min_gap = std::min(min_gap, mle_var - minimax_var);
    min_ratio = std::min(min_ratio, minimax_var / mle_var);
  }
  ordering.max_abs_diff = min_gap;
  ordering.max_rel_diff = min_ratio;
  return {ordering};
}

}  // namespace distgame
