#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "distgame/monte_carlo.hpp"

namespace distgame {

/// Denominator floor for relative differences; magnitudes below it are
/// compared absolutely (identities frequently hold at exact zeros).
inline constexpr double kRelDiffFloor = 1e-12;

/// Central finite differences: component j is
/// [f(theta + h e_j) - f(theta - h e_j)] / (2h).
Vector finite_difference_gradient(const std::function<double(const Vector&)>& objective,
                                  const Vector& theta, double h);

/// Component-wise comparison with relative differences floored at
/// kRelDiffFloor; a component also passes when |c - r| <= kRelDiffFloor.
GradientReport compare_gradients(const Vector& candidate, const Vector& reference,
                                 double tolerance);

/// Closed-form per-sample variance of the single-draw generator gradient
/// estimator: sum_x p_g(x) ||f(a(x)) score(theta_g, x) - g_exact||^2.
double exact_per_sample_variance(const GeneratorCostVariant& variant, const Discriminator& disc,
                                 const ParamVector& theta_g);

struct VarianceStudyRow {
  GeneratorCostKind variant = GeneratorCostKind::Minimax;
  std::int64_t n_samples = 0;
  double per_sample_variance = 0.0;
  double grad_error_norm = 0.0;
};

/// Fixture where the data table is nearly one-hot while the generator is
/// uniform, so generator samples almost never land on the data mode. K = 128,
/// hot outcome keeps 1 - 1e-9, the remainder is spread over the cold
/// outcomes; discriminator is optimal for the pair.
struct ConcentratedScenario {
  DistributionTable p_d;
  ParamVector theta_g;
  Discriminator disc;
};

ConcentratedScenario concentrated_data_scenario();

/// mc_generator_gradient on the concentrated scenario for every cost variant
/// and sample count; rows sorted by (variant, n_samples). grad_error_norm is
/// the Euclidean distance to generator_gradient_exact.
std::vector<VarianceStudyRow> variance_study(const std::vector<std::int64_t>& n_samples_list,
                                             std::uint64_t seed);

}  // namespace distgame
