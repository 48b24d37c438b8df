#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distgame/analysis.hpp"
#include "distgame/dynamics.hpp"

namespace distgame {

/// One verification sub-suite outcome, mirrored verbatim into JSON reports.
struct VerificationReport {
  std::string suite;
  int trials = 0;
  double max_abs_diff = 0.0;
  double max_rel_diff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  int trials = 100;
  Index k_min = 2;
  Index k_max = 50;
  std::uint64_t seed = 0;
};

bool all_pass(const std::vector<VerificationReport>& reports);

/// Self-contrastive suite: gradient identity against mle_gradient / 2
/// (rel 1e-10), constant objective (abs 1e-12), vanishing term (abs 1e-12).
std::vector<VerificationReport> verify_sce(const SuiteOptions& opts);

/// Generator-side suite: maximum-likelihood recovery under the optimal
/// discriminator (rel 1e-10), cost-offset invariance (abs 1e-12), optimal
/// discriminator stationarity and no-improvement perturbations (abs 1e-12).
std::vector<VerificationReport> verify_gan_mle(const SuiteOptions& opts);

/// Simulator sanity: equilibrium stays fixed, bilinear simultaneous runs
/// follow the exact radius recurrence and classify Diverging, alternating
/// updates with a well-trained discriminator pull p_g onto p_d.
std::vector<VerificationReport> verify_dynamics_sanity(std::uint64_t seed);

/// Variance ordering on the concentrated scenario: the maximum-likelihood
/// estimator's per-sample variance strictly exceeds the minimax one at every
/// sample count.
std::vector<VerificationReport> verify_variance_ordering(std::uint64_t seed);

}  // namespace distgame
