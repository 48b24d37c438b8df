#include "distgame/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace distgame {

namespace detail {

void require_same_size(Index a, Index b, const char* where) {
  if (a != b) {
    throw std::invalid_argument(std::string(where) + ": support sizes differ (" +
                                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

Support::Support(std::vector<std::string> outcomes) : outcomes_(std::move(outcomes)) {
  if (outcomes_.size() < 2) {
    throw std::invalid_argument("Support: need at least two outcomes");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : outcomes_) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("Support: duplicate outcome label '" + label + "'");
    }
  }
}

Support Support::indexed(Index k) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
  }
  return Support(std::move(labels));
}

ParamVector::ParamVector(Vector logits) : logits_(std::move(logits)) {
  if (logits_.size() < 1) {
    throw std::invalid_argument("ParamVector: empty logit vector");
  }
  if (!logits_.allFinite()) {
    throw std::invalid_argument("ParamVector: logits must be finite");
  }
}

ParamVector::ParamVector(std::initializer_list<double> logits)
    : ParamVector(Vector(Eigen::Map<const Vector>(logits.begin(), static_cast<Index>(logits.size())))) {}

DistributionTable::DistributionTable(Vector probs) : probs_(std::move(probs)) {
  if (probs_.size() < 1) {
    throw std::invalid_argument("DistributionTable: empty table");
  }
  if (!probs_.allFinite() || !(probs_.array() > 0.0).all()) {
    throw std::invalid_argument("DistributionTable: probabilities must be strictly positive");
  }
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kProbSumTolerance) {
    throw std::invalid_argument("DistributionTable: probabilities sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
  }
}

DistributionTable::DistributionTable(std::initializer_list<double> probs)
    : DistributionTable(Vector(Eigen::Map<const Vector>(probs.begin(), static_cast<Index>(probs.size())))) {}

Discriminator::Discriminator(Vector logit_table) : logits_(std::move(logit_table)) {
  if (logits_.size() < 1) {
    throw std::invalid_argument("Discriminator: empty logit table");
  }
  if (!logits_.allFinite()) {
    throw std::invalid_argument("Discriminator: logits must be finite");
  }
}

Discriminator::Discriminator(std::initializer_list<double> logit_table)
    : Discriminator(Vector(Eigen::Map<const Vector>(logit_table.begin(), static_cast<Index>(logit_table.size())))) {}

}  // namespace distgame
