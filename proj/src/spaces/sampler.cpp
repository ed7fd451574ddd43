#include "orbitlab/spaces/sampler.hpp"

#include <random>

namespace orbitlab::spaces {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::mt19937_64 gen(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return gen();
}

double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

namespace {
double radical_inverse(std::uint64_t i, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}
}  // namespace

QuasiRandom::QuasiRandom(std::uint64_t seed) : seed_(seed) {
  std::mt19937_64 gen(seed);
  for (auto& s : shift_) s = unit_interval(gen());
}

std::array<double, 3> QuasiRandom::operator()(std::uint64_t i) const {
  static constexpr std::uint64_t bases[3] = {2, 3, 5};
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    double v = radical_inverse(i + 1, bases[k]) + shift_[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(k)] = v >= 1.0 ? v - 1.0 : v;
  }
  return out;
}

}  // namespace orbitlab::spaces
