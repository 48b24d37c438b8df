#include "distgame/estimators.hpp"

namespace distgame {

double value_function(const DistributionTable& p_d, const DistributionTable& p_g,
                      const Discriminator& disc) {
  detail::require_same_size(p_d.size(), p_g.size(), "value_function");
  detail::require_same_size(p_d.size(), disc.size(), "value_function");
  const Vector& a = disc.logits();
  const double data_term = p_d.probs().dot(a.unaryExpr([](double t) { return log_sigmoid(t); }));
  const double fake_term = p_g.probs().dot(a.unaryExpr([](double t) { return log_sigmoid(-t); }));
  return data_term + fake_term;
}

Discriminator nce_discriminator(const DistributionTable& p_m, const DistributionTable& p_g) {
  detail::require_same_size(p_m.size(), p_g.size(), "nce_discriminator");
  return Discriminator((p_m.probs().array().log() - p_g.probs().array().log()).matrix());
}

double nce_objective(const ParamVector& theta, const DistributionTable& p_g,
                     const DistributionTable& p_d) {
  detail::require_same_size(theta.size(), p_g.size(), "nce_objective");
  detail::require_same_size(theta.size(), p_d.size(), "nce_objective");
  return value_function(p_d, p_g, nce_discriminator(softmax_probs(theta), p_g));
}

Vector nce_gradient(const ParamVector& theta, const DistributionTable& p_g,
                    const DistributionTable& p_d) {
  detail::require_same_size(theta.size(), p_g.size(), "nce_gradient");
  detail::require_same_size(theta.size(), p_d.size(), "nce_gradient");
  const DistributionTable p_m = softmax_probs(theta);
  const Vector a = nce_discriminator(p_m, p_g).logits();
  Vector w(theta.size());
  for (Index x = 0; x < theta.size(); ++x) {
    w(x) = p_d[x] * sigmoid(-a(x)) - p_g[x] * sigmoid(a(x));
  }
  return weighted_score_sum(p_m, w);
}

Vector mle_gradient(const ParamVector& theta, const DistributionTable& p_d) {
  detail::require_same_size(theta.size(), p_d.size(), "mle_gradient");
  return weighted_score_sum(theta, p_d.probs());
}

Vector sce_gradient(const ParamVector& theta, const DistributionTable& p_d) {
  detail::require_same_size(theta.size(), p_d.size(), "sce_gradient");
  // The noise table is a materialized copy: the gradient below sees it as a
  // constant even though its values coincide with the model's.
  const DistributionTable noise = softmax_probs(theta);
  return nce_gradient(theta, noise, p_d);
}

double sce_objective_value(const ParamVector& theta, const DistributionTable& p_d) {
  detail::require_same_size(theta.size(), p_d.size(), "sce_objective_value");
  return nce_objective(theta, softmax_probs(theta), p_d);
}

Vector vanishing_term(const ParamVector& theta) {
  const DistributionTable p_m = softmax_probs(theta);
  const DistributionTable p_g = p_m;  // frozen copy
  const Vector w =
      (p_g.probs().array() * p_m.probs().array() / (p_m.probs().array() + p_g.probs().array()))
          .matrix();
  return weighted_score_sum(p_m, w);
}

}  // namespace distgame
