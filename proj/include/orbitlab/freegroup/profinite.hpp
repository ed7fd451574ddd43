#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"

namespace orbitlab::freegroup {

/// A decreasing chain F_r > Gamma_1 > Gamma_2 > ... given by transitive
/// permutation actions on the coset spaces F_r / Gamma_i, base coset 0.
/// Membership gamma in Gamma_i is "the image of gamma fixes coset 0".
class SubgroupChain {
 public:
  /// Throws ConfigError when a level is intransitive, ranks differ, the
  /// indices are not strictly increasing, or level i+1 does not refine
  /// level i.
  explicit SubgroupChain(std::vector<PermutationHom> levels);

  std::size_t depth() const { return levels_.size(); }
  int rank() const { return levels_.front().rank(); }
  const PermutationHom& level(std::size_t i) const { return levels_[i]; }
  std::uint64_t index(std::size_t i) const { return levels_[i].degree(); }
  /// Coset of level `i` containing the given coset of the deepest level.
  std::uint32_t project(std::uint32_t deepest_coset, std::size_t i) const;
  bool contains(std::size_t i, const ReducedWord& w) const { return levels_[i].act(w, 0) == 0; }

 private:
  std::vector<PermutationHom> levels_;
  // projection_[i][x]: coset of level i under coset x of level i+1.
  std::vector<std::vector<std::uint32_t>> projection_;
};

struct ProfiniteDistance {
  double distance = 0.0;
  /// Number of chain levels consulted (the truncation depth of the metric).
  std::size_t depth = 0;
  /// First level (0-based) where w1^-1 w2 leaves the subgroup, or depth if none.
  std::size_t first_exit = 0;
};

/// d(w1, w2) = max{ |F_r : Gamma_i|^-1 : w1^-1 w2 not in Gamma_i }, truncated
/// to the given levels (0 when the quotient lies in every level).
ProfiniteDistance profinite_metric(const ReducedWord& w1, const ReducedWord& w2, const SubgroupChain& chain);

/// Same metric between two cosets of the deepest level.
double profinite_coset_distance(std::uint32_t x, std::uint32_t y, const SubgroupChain& chain);

}  // namespace orbitlab::freegroup
