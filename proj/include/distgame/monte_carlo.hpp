#pragma once

#include <cstdint>

#include "distgame/gan.hpp"

namespace distgame {

/// Inverse-CDF sampler over a cumulative probability table.
class CategoricalSampler {
 public:
  explicit CategoricalSampler(const DistributionTable& table);

  /// Outcome index for a uniform draw u in [0, 1).
  Index sample(double u) const;

  const Vector& cumulative() const { return cumulative_; }

 private:
  Vector cumulative_;
};

struct McGradientEstimate {
  /// Sample mean of f(a(x)) score(theta_g, x) over the drawn outcomes.
  Vector gradient;
  /// Mean squared Euclidean distance of the per-sample vectors to their mean
  /// (trace of the empirical covariance).
  double per_sample_variance = 0.0;
};

/// Monte-Carlo estimate of generator_gradient_exact from n_samples draws of
/// the softmax model at theta_g. The uniform stream is indexed by sample
/// number, so partitioning samples across workers cannot change the result.
/// Unbiased: the expectation over seeds equals the exact gradient.
McGradientEstimate mc_generator_gradient(const GeneratorCostVariant& variant,
                                         const Discriminator& disc, const ParamVector& theta_g,
                                         std::int64_t n_samples, std::uint64_t seed);

}  // namespace distgame
