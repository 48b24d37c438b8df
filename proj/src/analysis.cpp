#include "distgame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "distgame/random.hpp"

namespace distgame {

Vector finite_difference_gradient(const std::function<double(const Vector&)>& objective,
                                  const Vector& theta, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("finite_difference_gradient: step must be positive and finite");
  }
  Vector grad(theta.size());
  Vector probe = theta;
  for (Index j = 0; j < theta.size(); ++j) {
    const double orig = probe(j);
    probe(j) = orig + h;
    const double up = objective(probe);
    probe(j) = orig - h;
    const double down = objective(probe);
    probe(j) = orig;
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw std::invalid_argument("finite_difference_gradient: objective not finite near theta");
    }
    grad(j) = (up - down) / (2.0 * h);
  }
  return grad;
}

GradientReport compare_gradients(const Vector& candidate, const Vector& reference,
                                 double tolerance) {
  detail::require_same_size(candidate.size(), reference.size(), "compare_gradients");
  GradientReport report;
  report.candidate = candidate;
  report.reference = reference;
  report.tolerance = tolerance;
  report.pass = true;
  for (Index i = 0; i < candidate.size(); ++i) {
    const double abs_diff = std::abs(candidate(i) - reference(i));
    const double rel_diff = abs_diff / std::max(std::abs(reference(i)), kRelDiffFloor);
    report.max_abs_diff = std::max(report.max_abs_diff, abs_diff);
    report.max_rel_diff = std::max(report.max_rel_diff, rel_diff);
    const bool component_ok = abs_diff <= kRelDiffFloor || rel_diff <= tolerance;
    report.pass = report.pass && component_ok;
  }
  return report;
}

double exact_per_sample_variance(const GeneratorCostVariant& variant, const Discriminator& disc,
                                 const ParamVector& theta_g) {
  detail::require_same_size(disc.size(), theta_g.size(), "exact_per_sample_variance");
  const DistributionTable p_g = softmax_probs(theta_g);
  const Vector center = generator_gradient_exact(variant, disc, theta_g);
  double acc = 0.0;
  for (Index x = 0; x < p_g.size(); ++x) {
    Vector per_sample = -generator_cost(variant, disc(x)) * p_g.probs();
    per_sample(x) += generator_cost(variant, disc(x));
    acc += p_g[x] * (per_sample - center).squaredNorm();
  }
  return acc;
}

ConcentratedScenario concentrated_data_scenario() {
  constexpr Index k = 128;
  constexpr double eps = 1e-9;
  Vector probs(k);
  probs(0) = 1.0 - eps;
  for (Index i = 1; i < k; ++i) {
    probs(i) = eps / static_cast<double>(k - 1);
  }
  DistributionTable p_d{std::move(probs)};
  ParamVector theta_g = ParamVector::zero(k);
  Discriminator disc = optimal_discriminator(p_d, softmax_probs(theta_g));
  return {std::move(p_d), std::move(theta_g), std::move(disc)};
}

std::vector<VarianceStudyRow> variance_study(const std::vector<std::int64_t>& n_samples_list,
                                             std::uint64_t seed) {
  for (const std::int64_t n : n_samples_list) {
    if (n < 1) {
      throw std::invalid_argument("variance_study: sample counts must be >= 1");
    }
  }
  std::vector<std::int64_t> counts = n_samples_list;
  std::sort(counts.begin(), counts.end());

  const ConcentratedScenario scenario = concentrated_data_scenario();
  const GeneratorCostKind kinds[] = {GeneratorCostKind::Minimax, GeneratorCostKind::Heuristic,
                                     GeneratorCostKind::MaximumLikelihood};

  std::vector<VarianceStudyRow> rows;
  rows.reserve(counts.size() * 3);
  for (std::size_t ki = 0; ki < 3; ++ki) {
    const GeneratorCostVariant variant{kinds[ki]};
    const Vector exact = generator_gradient_exact(variant, scenario.disc, scenario.theta_g);
    for (const std::int64_t n : counts) {
      const std::uint64_t cell_seed =
          derive_seed(seed, static_cast<std::uint64_t>(ki), static_cast<std::uint64_t>(n));
      const McGradientEstimate estimate =
          mc_generator_gradient(variant, scenario.disc, scenario.theta_g, n, cell_seed);
      rows.push_back({kinds[ki], n, estimate.per_sample_variance,
                      (estimate.gradient - exact).norm()});
    }
  }
  return rows;
}

}  // namespace distgame
