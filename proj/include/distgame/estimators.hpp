#pragma once

#include <numbers>

#include "distgame/softmax_family.hpp"

namespace distgame {

/// Value of the classification objective when real and fake samples are
/// indistinguishable and the classifier is at chance: -2 log 2.
inline constexpr double kChanceValue = -2.0 * std::numbers::ln2;

/// Result of comparing a candidate gradient against a reference, component by
/// component. pass holds when every component is within `tolerance` relative
/// error, with an absolute fallback for differences below 1e-12.
struct GradientReport {
  Vector candidate;
  Vector reference;
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;
  bool pass = false;
  double tolerance = 0.0;
};

/// Expected log probability of correct labels for a classifier separating
/// data samples (label 1) from generator samples (label 0) under an equal
/// mixture: sum_x p_d(x) log sigmoid(a(x)) + sum_x p_g(x) log sigmoid(-a(x)).
/// Always <= 0.
double value_function(const DistributionTable& p_d, const DistributionTable& p_g,
                      const Discriminator& disc);

/// Classifier induced by a model table against a fixed noise table:
/// a(x) = log p_m(x) - log p_g(x), so sigmoid(a(x)) = p_m / (p_m + p_g).
Discriminator nce_discriminator(const DistributionTable& p_m, const DistributionTable& p_g);

/// value_function with the classifier defined by the softmax model at theta
/// against the fixed noise table p_g.
double nce_objective(const ParamVector& theta, const DistributionTable& p_g,
                     const DistributionTable& p_d);

/// Exact gradient of nce_objective in theta:
/// sum_x [p_d(x) sigmoid(-a(x)) - p_g(x) sigmoid(a(x))] score(theta, x).
Vector nce_gradient(const ParamVector& theta, const DistributionTable& p_g,
                    const DistributionTable& p_d);

/// Gradient of the expected data log likelihood: sum_x p_d(x) score(theta, x).
Vector mle_gradient(const ParamVector& theta, const DistributionTable& p_d);

/// NCE gradient with the noise table frozen to a deep copy of the current
/// model. Equals mle_gradient(theta, p_d) / 2 up to rounding.
Vector sce_gradient(const ParamVector& theta, const DistributionTable& p_d);

/// Objective seen by sce_gradient at theta; identically kChanceValue because
/// the model is never distinguishable from its own copy.
double sce_objective_value(const ParamVector& theta, const DistributionTable& p_d);

/// sum_x p_g(x) p_m(x) score(theta, x) / (p_m(x) + p_g(x)) with p_g frozen to
/// a copy of the model at theta. Identically the zero vector: it is the
/// gradient of sum_x p_g(x) = 1 in disguise.
Vector vanishing_term(const ParamVector& theta);

}  // namespace distgame
