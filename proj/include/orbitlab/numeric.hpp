#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace orbitlab {

/// Neumaier compensated accumulator. Merging two accumulators is associative
/// up to the compensation term, so shard results merged in a fixed order
/// reproduce bit-identically.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_norm = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. Needs at least two
/// distinct x values.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

/// 64-bit FNV-1a, used for payload and metadata hashes in result records.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string hex64(std::uint64_t v);

/// Shortest round-trip decimal form, used wherever numbers are serialized.
std::string format_double(double v);

}  // namespace orbitlab
