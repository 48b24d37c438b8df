#pragma once

#include <cstdint>

#include "distgame/types.hpp"

namespace distgame {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

}  // namespace detail

/// Counter-based uniform stream: draw i is a pure function of (seed, stream,
/// i), so samples can be partitioned across workers by index without changing
/// any value. Output is reproducible bit-for-bit across platforms.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(detail::mix64(detail::mix64(seed + detail::kGolden) ^
                            detail::mix64(stream * detail::kGolden + 0x632BE59BD9B4E019ull))) {}

  /// i-th uniform in [0, 1).
  double at(std::uint64_t i) const {
    const std::uint64_t bits = detail::mix64(base_ + (i + 1) * detail::kGolden);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  /// Sequential convenience over at().
  double next() { return at(cursor_++); }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::uint64_t base_;
  std::uint64_t cursor_ = 0;
};

/// Deterministic child seed for a grid cell, independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return detail::mix64(detail::mix64(seed + detail::kGolden) ^
                       detail::mix64(a * detail::kGolden + b + 1));
}

/// Logits with independent uniform entries in [lo, hi].
inline ParamVector random_logits(UniformStream& stream, Index k, double lo, double hi) {
  Vector v(k);
  for (Index i = 0; i < k; ++i) {
    v(i) = stream.next(lo, hi);
  }
  return ParamVector(std::move(v));
}

/// Strictly positive normalized table with entries proportional to
/// exp(U(-spread, spread)).
inline DistributionTable random_distribution(UniformStream& stream, Index k, double spread = 3.0) {
  Vector v(k);
  for (Index i = 0; i < k; ++i) {
    v(i) = std::exp(stream.next(-spread, spread));
  }
  v /= v.sum();
  return DistributionTable(std::move(v));
}

}  // namespace distgame
