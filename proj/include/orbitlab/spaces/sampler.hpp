#pragma once

#include <array>
#include <cstdint>

namespace orbitlab::spaces {

/// Seeded substream for parallel or per-purpose sampling: a fixed function of
/// (seed, stream), independent of thread count.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform double in [0,1) from the top 53 bits of a 64-bit word. Used instead
/// of std::uniform_real_distribution, whose output is implementation-defined.
double unit_interval(std::uint64_t bits);

/// Halton sequence in bases 2, 3, 5 with a Cranley-Patterson rotation drawn
/// from the seed. Point i is a pure function of (seed, i).
class QuasiRandom {
 public:
  explicit QuasiRandom(std::uint64_t seed);
  std::array<double, 3> operator()(std::uint64_t i) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::array<double, 3> shift_;
};

}  // namespace orbitlab::spaces
