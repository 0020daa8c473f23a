#include "estrada/sketch.hpp"

#include <algorithm>
#include <cmath>

#include "estrada/errors.hpp"

namespace estrada {

namespace {

constexpr double kBinsPerDecade = 100.0;
constexpr double kZeroMagnitude = 1e-15;
// Offset so that the first non-zero bin (|x| = 1e-15) has index 1.
constexpr int kOffset = 1501;

}  // namespace

int QuantileSketch::bin_of(double x) {
  const double mag = std::abs(x);
  if (mag < kZeroMagnitude) return 0;
  const int e = static_cast<int>(std::floor(std::log10(mag) * kBinsPerDecade)) + kOffset;
  return x > 0 ? e : -e;
}

double QuantileSketch::representative(int bin) {
  if (bin == 0) return 0.0;
  const int e = std::abs(bin) - kOffset;
  const double mag = std::pow(10.0, (static_cast<double>(e) + 0.5) / kBinsPerDecade);
  return bin > 0 ? mag : -mag;
}

void QuantileSketch::add(double x) {
  if (count_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  ++count_;
  ++bins_[bin_of(x)];
}

void QuantileSketch::merge(const QuantileSketch& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
  count_ += other.count_;
  for (const auto& [bin, c] : other.bins_) bins_[bin] += c;
}

double QuantileSketch::quantile(double q) const {
  if (count_ == 0) throw DomainError("quantile of an empty sketch");
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level outside [0, 1]");
  if (q == 0.0) return min_;
  if (q == 1.0) return max_;
  const auto rank = static_cast<std::uint64_t>(std::llround(q * static_cast<double>(count_ - 1)));
  std::uint64_t seen = 0;
  for (const auto& [bin, c] : bins_) {
    seen += c;
    if (seen > rank) return std::clamp(representative(bin), min_, max_);
  }
  return max_;
}

}  // namespace estrada
