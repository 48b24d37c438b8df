#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace distgame {

template <typename Scalar>
using VectorX = Eigen::Vector<Scalar, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Index = Eigen::Index;

/// Logistic sigmoid 1 / (1 + exp(-t)), safe for large |t|.
template <typename Scalar>
Scalar sigmoid(Scalar t) {
  if (t >= Scalar(0)) {
    return Scalar(1) / (Scalar(1) + std::exp(-t));
  }
  const Scalar e = std::exp(t);
  return e / (Scalar(1) + e);
}

/// Softplus log(1 + exp(t)) without overflow for large |t|.
template <typename Scalar>
Scalar softplus(Scalar t) {
  if (t > Scalar(0)) {
    return t + std::log1p(std::exp(-t));
  }
  return std::log1p(std::exp(t));
}

/// log sigmoid(t) = -softplus(-t).
template <typename Scalar>
Scalar log_sigmoid(Scalar t) {
  return -softplus(-t);
}

/// log sum_i exp(v_i), max-subtracted so logits up to a few hundred are fine.
template <typename Derived>
typename Derived::Scalar logsumexp(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar m = v.maxCoeff();
  return m + std::log((v.derived().array() - m).exp().sum());
}

/// exp(v_i) / sum_j exp(v_j); strictly positive, sums to one.
template <typename Derived>
VectorX<typename Derived::Scalar> softmax(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar m = v.maxCoeff();
  VectorX<Scalar> e = (v.derived().array() - m).exp().matrix();
  e /= e.sum();
  return e;
}

/// v - logsumexp(v), the stable log of softmax(v).
template <typename Derived>
VectorX<typename Derived::Scalar> log_softmax(const Eigen::MatrixBase<Derived>& v) {
  return (v.derived().array() - logsumexp(v)).matrix();
}

}  // namespace distgame
