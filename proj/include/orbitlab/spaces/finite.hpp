#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"
#include "orbitlab/freegroup/profinite.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

/// Finite F_r-set X with the uniform probability measure and the discrete
/// metric (distance 1 between distinct points). Points are indices.
class FiniteCoset {
 public:
  using Point = std::uint32_t;
  static constexpr SpaceKind kind = SpaceKind::finite_coset;
  static constexpr bool isometric = true;

  explicit FiniteCoset(freegroup::PermutationHom hom);

  const freegroup::PermutationHom& hom() const { return hom_; }
  std::size_t size() const { return hom_.degree(); }
  Point basepoint() const { return 0; }
  double distance(Point x, Point y) const { return x == y ? 0.0 : 1.0; }
  /// Smallest nonzero distance.
  double resolution() const { return 1.0; }
  Point act(const freegroup::ReducedWord& w, Point x) const { return hom_.act(w, x); }
  Point act(freegroup::Letter l, Point x) const { return hom_.act(l, x); }

  bool in_filtration(Point, double) const { return true; }
  double filtration_mass(double) const { return 1.0; }
  /// Every point, in index order; the seed is ignored (the measure is exact).
  std::vector<Point> sample(std::size_t, std::uint64_t, double) const;
  std::optional<double> ball_mass(Point x, double eps) const;

 private:
  freegroup::PermutationHom hom_;
};

/// Deepest level F_r / Gamma_k of a subgroup chain with the profinite metric
/// between cosets and the uniform probability measure.
class ProfiniteLevel {
 public:
  using Point = std::uint32_t;
  static constexpr SpaceKind kind = SpaceKind::profinite_level;
  static constexpr bool isometric = true;

  explicit ProfiniteLevel(freegroup::SubgroupChain chain);

  const freegroup::SubgroupChain& chain() const { return chain_; }
  const freegroup::PermutationHom& hom() const { return chain_.level(chain_.depth() - 1); }
  std::size_t size() const { return hom().degree(); }
  Point basepoint() const { return 0; }
  double distance(Point x, Point y) const { return freegroup::profinite_coset_distance(x, y, chain_); }
  double resolution() const { return 1.0 / static_cast<double>(size()); }
  Point act(const freegroup::ReducedWord& w, Point x) const { return hom().act(w, x); }
  Point act(freegroup::Letter l, Point x) const { return hom().act(l, x); }

  bool in_filtration(Point, double) const { return true; }
  double filtration_mass(double) const { return 1.0; }
  std::vector<Point> sample(std::size_t, std::uint64_t, double) const;
  /// Exact mass of the open ball: the share of cosets agreeing with x on
  /// every level i with 1/index(i) >= eps.
  std::optional<double> ball_mass(Point x, double eps) const;

 private:
  freegroup::SubgroupChain chain_;
};

}  // namespace orbitlab::spaces
