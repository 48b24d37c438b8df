#include "distgame/softmax_family.hpp"

#include <stdexcept>

namespace distgame {

DistributionTable softmax_probs(const ParamVector& theta) {
  return DistributionTable(softmax(theta.logits()));
}

Vector log_probs(const ParamVector& theta) {
  return log_softmax(theta.logits());
}

Vector softmax_score(const ParamVector& theta, Index x) {
  if (x < 0 || x >= theta.size()) {
    throw std::out_of_range("softmax_score: outcome index out of range");
  }
  Vector score = -softmax(theta.logits());
  score(x) += 1.0;
  return score;
}

Vector weighted_score_sum(const DistributionTable& model, const Vector& weights) {
  detail::require_same_size(model.size(), weights.size(), "weighted_score_sum");
  return weights - weights.sum() * model.probs();
}

Vector weighted_score_sum(const ParamVector& theta, const Vector& weights) {
  return weighted_score_sum(softmax_probs(theta), weights);
}

}  // namespace distgame
