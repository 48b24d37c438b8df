#pragma once

#include "distgame/types.hpp"

namespace distgame {

/// Probability table of the softmax family member at theta.
DistributionTable softmax_probs(const ParamVector& theta);

/// Stable log of softmax_probs(theta).
Vector log_probs(const ParamVector& theta);

/// Gradient of log p(x; theta) in the logits: onehot(x) - probs.
/// Components sum to zero.
Vector softmax_score(const ParamVector& theta, Index x);

/// sum_x weights[x] * score(theta, x), folded to weights - sum(weights) * probs.
Vector weighted_score_sum(const DistributionTable& model, const Vector& weights);
Vector weighted_score_sum(const ParamVector& theta, const Vector& weights);

}  // namespace distgame
