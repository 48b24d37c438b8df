#include "distgame/monte_carlo.hpp"

#include <algorithm>
#include <stdexcept>

#include "distgame/random.hpp"

namespace distgame {

CategoricalSampler::CategoricalSampler(const DistributionTable& table)
    : cumulative_(table.size()) {
  double acc = 0.0;
  for (Index i = 0; i < table.size(); ++i) {
    acc += table[i];
    cumulative_(i) = acc;
  }
}

Index CategoricalSampler::sample(double u) const {
  const double* begin = cumulative_.data();
  const double* end = begin + cumulative_.size();
  const Index idx = static_cast<Index>(std::upper_bound(begin, end, u) - begin);
  return std::min(idx, cumulative_.size() - 1);
}

McGradientEstimate mc_generator_gradient(const GeneratorCostVariant& variant,
                                         const Discriminator& disc, const ParamVector& theta_g,
                                         std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::invalid_argument("mc_generator_gradient: need at least one sample");
  }
  detail::require_same_size(disc.size(), theta_g.size(), "mc_generator_gradient");

  const DistributionTable p_g = softmax_probs(theta_g);
  const Vector& p = p_g.probs();
  const Index k = p_g.size();

  const CategoricalSampler sampler(p_g);
  const UniformStream stream(seed);
  Vector counts = Vector::Zero(k);
  for (std::int64_t i = 0; i < n_samples; ++i) {
    counts(sampler.sample(stream.at(static_cast<std::uint64_t>(i)))) += 1.0;
  }

  Vector f(k);
  for (Index x = 0; x < k; ++x) {
    f(x) = generator_cost(variant, disc(x));
  }

  // Per-sample vectors depend only on the drawn outcome, so the sample mean
  // and spread reduce to outcome-frequency sums.
  const double n = static_cast<double>(n_samples);
  const Vector freq = counts / n;
  const Vector mean = weighted_score_sum(p_g, freq.cwiseProduct(f));

  // ||f_x (e_x - p) - mean||^2 expanded; e_x never materialized.
  const double p_sq = p.squaredNorm();
  const double p_dot_mean = p.dot(mean);
  const double mean_sq = mean.squaredNorm();
  double variance = 0.0;
  for (Index x = 0; x < k; ++x) {
    if (counts(x) == 0.0) continue;
    const double score_sq = 1.0 - 2.0 * p(x) + p_sq;
    const double cross = mean(x) - p_dot_mean;
    variance += freq(x) * (f(x) * f(x) * score_sq - 2.0 * f(x) * cross + mean_sq);
  }
  return {mean, std::max(variance, 0.0)};
}

}  // namespace distgame
