#include "orbitlab/spaces/finite.hpp"

#include <numeric>

#include "orbitlab/errors.hpp"

namespace orbitlab::spaces {

FiniteCoset::FiniteCoset(freegroup::PermutationHom hom) : hom_(std::move(hom)) {}

std::vector<FiniteCoset::Point> FiniteCoset::sample(std::size_t, std::uint64_t, double) const {
  std::vector<Point> out(size());
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

std::optional<double> FiniteCoset::ball_mass(Point, double eps) const {
  if (eps <= 0.0) return 0.0;
  return eps <= 1.0 ? 1.0 / static_cast<double>(size()) : 1.0;
}

ProfiniteLevel::ProfiniteLevel(freegroup::SubgroupChain chain) : chain_(std::move(chain)) {}

std::vector<ProfiniteLevel::Point> ProfiniteLevel::sample(std::size_t, std::uint64_t, double) const {
  std::vector<Point> out(size());
  std::iota(out.begin(), out.end(), 0u);
  return out;
}

std::optional<double> ProfiniteLevel::ball_mass(Point, double eps) const {
  if (eps <= 0.0) return 0.0;
  // The ball is the coset of the deepest level i with 1/index(i) >= eps; the
  // metric is invariant, so the mass does not depend on x.
  double mass = 1.0;
  for (std::size_t i = 0; i < chain_.depth(); ++i) {
    if (1.0 / static_cast<double>(chain_.index(i)) < eps) break;
    mass = 1.0 / static_cast<double>(chain_.index(i));
  }
  return mass;
}

}  // namespace orbitlab::spaces
