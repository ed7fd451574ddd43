#pragma once

// The natural metric on a homogeneous space X = G x0:
//   d(x1, x2) = inf{ d_G(g1, g2) : g1 x0 = x1, g2 x0 = x2 }
// for a right-invariant metric d_G. It is G-invariant when d_G is also
// left-invariant (the rotation case below); on a Schreier graph it is the
// graph distance, which is invariant only under graph automorphisms.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"

namespace orbitlab::spaces {

/// Right-invariant word metric d(g, h) = l(g h^-1) on F_r, pushed to a
/// finite transitive F_r-set. g1 g2^-1 ranges over all words carrying x2 to
/// x1, so the infimum is the Schreier-graph distance, computed by BFS.
class SchreierMetric {
 public:
  /// Throws ConfigError on an intransitive action.
  explicit SchreierMetric(const freegroup::PermutationHom& hom);
  std::uint32_t distance(std::uint32_t x1, std::uint32_t x2) const { return table_[x1 * n_ + x2]; }
  std::uint32_t diameter() const { return diameter_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
  std::uint32_t diameter_ = 0;
};

/// SO(3) with the bi-invariant metric d(g, h) = rotation angle of g h^-1,
/// pushed to the unit sphere. The infimum over lifts is the great-circle
/// angle between the points.
struct RotationQuotientMetric {
  static double group_distance(const Eigen::Matrix3d& g, const Eigen::Matrix3d& h);
  static double distance(const Eigen::Vector3d& x1, const Eigen::Vector3d& x2);
};

}  // namespace orbitlab::spaces
