#pragma once

#include <cstdint>
#include <map>

namespace estrada {

/// Mergeable log-binned histogram for approximate quantiles of a stream of
/// reals. Bins are 1/100 of a decade wide (about 2.3% relative width) per
/// sign; |x| < 1e-15 shares a zero bin. Min and max are exact.
///
/// Merging is associative and commutative, so partial sketches from
/// parallel workers combine to the same result in any order.
class QuantileSketch {
 public:
  void add(double x);
  void merge(const QuantileSketch& other);

  std::uint64_t count() const noexcept { return count_; }
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }

  /// Nearest-rank quantile for q in [0, 1], clamped to [min, max];
  /// q = 0 and q = 1 are exact. Requires count() > 0.
  double quantile(double q) const;

  friend bool operator==(const QuantileSketch&, const QuantileSketch&) = default;

 private:
  static int bin_of(double x);
  static double representative(int bin);

  std::map<int, std::uint64_t> bins_;
  std::uint64_t count_ = 0;
  double min_ = 0.0;
  double max_ = 0.0;
};

}  // namespace estrada
