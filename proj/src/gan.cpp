#include "distgame/gan.hpp"

#include <cmath>
#include <stdexcept>

namespace distgame {

const char* to_string(GeneratorCostKind kind) {
  switch (kind) {
    case GeneratorCostKind::Minimax:
      return "minimax";
    case GeneratorCostKind::Heuristic:
      return "heuristic";
    case GeneratorCostKind::MaximumLikelihood:
      return "maximum_likelihood";
  }
  return "unknown";
}

std::optional<GeneratorCostKind> parse_cost_kind(std::string_view name) {
  if (name == "minimax") return GeneratorCostKind::Minimax;
  if (name == "heuristic") return GeneratorCostKind::Heuristic;
  if (name == "maximum_likelihood" || name == "mle") return GeneratorCostKind::MaximumLikelihood;
  return std::nullopt;
}

double generator_cost(const GeneratorCostVariant& variant, double a) {
  if (!std::isfinite(a)) {
    throw std::invalid_argument("generator_cost: classifier logit must be finite");
  }
  switch (variant.kind) {
    case GeneratorCostKind::Minimax:
      return -softplus(a) + variant.offset;
    case GeneratorCostKind::Heuristic:
      return softplus(-a) + variant.offset;  // -log sigmoid(a)
    case GeneratorCostKind::MaximumLikelihood:
      return -std::exp(a) + variant.offset;
  }
  throw std::logic_error("generator_cost: unhandled variant");
}

Discriminator optimal_discriminator(const DistributionTable& p_d, const DistributionTable& p_g) {
  detail::require_same_size(p_d.size(), p_g.size(), "optimal_discriminator");
  return Discriminator((p_d.probs().array().log() - p_g.probs().array().log()).matrix());
}

Vector generator_gradient_exact(const GeneratorCostVariant& variant, const Discriminator& disc,
                                const ParamVector& theta_g) {
  detail::require_same_size(disc.size(), theta_g.size(), "generator_gradient_exact");
  const DistributionTable p_g = softmax_probs(theta_g);
  Vector w(p_g.size());
  for (Index x = 0; x < p_g.size(); ++x) {
    w(x) = generator_cost(variant, disc(x)) * p_g[x];
  }
  return weighted_score_sum(p_g, w);
}

Vector discriminator_gradient(const Discriminator& disc, const DistributionTable& p_d,
                              const DistributionTable& p_g) {
  detail::require_same_size(disc.size(), p_d.size(), "discriminator_gradient");
  detail::require_same_size(disc.size(), p_g.size(), "discriminator_gradient");
  Vector grad(disc.size());
  for (Index x = 0; x < disc.size(); ++x) {
    grad(x) = p_d[x] * sigmoid(-disc(x)) - p_g[x] * sigmoid(disc(x));
  }
  return grad;
}

std::vector<CostCurveRow> cost_curve(double a_min, double a_max, int n_points) {
  if (!std::isfinite(a_min) || !std::isfinite(a_max) || !(a_min < a_max)) {
    throw std::invalid_argument("cost_curve: need finite a_min < a_max");
  }
  if (n_points < 2) {
    throw std::invalid_argument("cost_curve: need at least two points");
  }
  const GeneratorCostVariant minimax{GeneratorCostKind::Minimax};
  const GeneratorCostVariant heuristic{GeneratorCostKind::Heuristic};
  const GeneratorCostVariant mle{GeneratorCostKind::MaximumLikelihood};
  const double step = (a_max - a_min) / static_cast<double>(n_points - 1);
  std::vector<CostCurveRow> rows;
  rows.reserve(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double a = a_min + static_cast<double>(i) * step;
    rows.push_back({a, generator_cost(minimax, a), generator_cost(heuristic, a),
                    generator_cost(mle, a)});
  }
  return rows;
}

}  // namespace distgame
