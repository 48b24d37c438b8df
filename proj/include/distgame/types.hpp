#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "distgame/math.hpp"

namespace distgame {

/// Tolerance on |sum(probs) - 1| accepted by DistributionTable.
inline constexpr double kProbSumTolerance = 1e-12;

namespace detail {
void require_same_size(Index a, Index b, const char* where);
}  // namespace detail

/// Ordered set of at least two distinct outcome labels. Distributions,
/// parameter vectors and discriminators address outcomes by index 0..K-1.
class Support {
 public:
  explicit Support(std::vector<std::string> outcomes);

  /// Support with labels "0".."k-1".
  static Support indexed(Index k);

  Index size() const { return static_cast<Index>(outcomes_.size()); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::string& label(Index i) const { return outcomes_.at(static_cast<std::size_t>(i)); }

 private:
  std::vector<std::string> outcomes_;
};

/// Softmax logits selecting one member of the tabular model family.
class ParamVector {
 public:
  explicit ParamVector(Vector logits);
  ParamVector(std::initializer_list<double> logits);

  static ParamVector zero(Index k) { return ParamVector(Vector::Zero(k)); }

  Index size() const { return logits_.size(); }
  const Vector& logits() const { return logits_; }
  double operator[](Index i) const { return logits_(i); }

 private:
  Vector logits_;
};

/// Explicit probability table over a finite support. Entries are strictly
/// positive and sum to one within kProbSumTolerance. One-hot data is not a
/// valid table; smooth it first (e.g. keep 1-eps on the hot outcome and
/// spread eps = 1e-9 over the cold ones).
class DistributionTable {
 public:
  explicit DistributionTable(Vector probs);
  DistributionTable(std::initializer_list<double> probs);

  Index size() const { return probs_.size(); }
  const Vector& probs() const { return probs_; }
  double operator[](Index i) const { return probs_(i); }

 private:
  Vector probs_;
};

/// Tabular classifier log-odds a(x); the probability assigned to "x is real"
/// is sigmoid(a(x)), in (0,1) for finite entries.
class Discriminator {
 public:
  explicit Discriminator(Vector logit_table);
  Discriminator(std::initializer_list<double> logit_table);

  static Discriminator zero(Index k) { return Discriminator(Vector::Zero(k)); }

  Index size() const { return logits_.size(); }
  const Vector& logits() const { return logits_; }
  double operator()(Index i) const { return logits_(i); }

 private:
  Vector logits_;
};

}  // namespace distgame
