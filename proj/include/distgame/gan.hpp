#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distgame/estimators.hpp"

namespace distgame {

enum class GeneratorCostKind { Minimax, Heuristic, MaximumLikelihood };

const char* to_string(GeneratorCostKind kind);
std::optional<GeneratorCostKind> parse_cost_kind(std::string_view name);

/// Pointwise cost f(a) the generator pays for a sample the discriminator
/// scores with logit a. All three kinds are strictly decreasing in a:
///   Minimax           f(a) = -softplus(a)
///   Heuristic         f(a) = -log sigmoid(a)   (non-saturating form)
///   MaximumLikelihood f(a) = -exp(a)
/// plus a constant offset that leaves expected-gradient computations
/// unchanged.
struct GeneratorCostVariant {
  GeneratorCostKind kind = GeneratorCostKind::Minimax;
  double offset = 0.0;
};

double generator_cost(const GeneratorCostVariant& variant, double a);

/// Classifier maximizing value_function for fixed tables:
/// a(x) = log p_d(x) - log p_g(x), sigmoid(a(x)) = p_d / (p_d + p_g).
Discriminator optimal_discriminator(const DistributionTable& p_d, const DistributionTable& p_g);

/// Exact gradient in theta_g of E_{x~p_g(theta_g)} f(a(x)):
/// sum_x f(a(x)) p_g(x) score(theta_g, x).
Vector generator_gradient_exact(const GeneratorCostVariant& variant, const Discriminator& disc,
                                const ParamVector& theta_g);

/// Gradient of value_function in the tabular classifier logits:
/// component x is p_d(x) sigmoid(-a(x)) - p_g(x) sigmoid(a(x)).
Vector discriminator_gradient(const Discriminator& disc, const DistributionTable& p_d,
                              const DistributionTable& p_g);

struct CostCurveRow {
  double a;
  double f_minimax;
  double f_heuristic;
  double f_mle;
};

/// Evenly spaced grid of the three pointwise costs over [a_min, a_max].
std::vector<CostCurveRow> cost_curve(double a_min, double a_max, int n_points);

}  // namespace distgame
