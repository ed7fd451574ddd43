#pragma once

// Word-ball averages on spaces acted on through a homomorphism of F_r.

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/freegroup/enumerate.hpp"
#include "orbitlab/holder/test_function.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::ergodic {

/// Sphere sums sum_{gamma in S_k} f(gamma^-1 x) for k = 0..n by exact
/// enumeration. `act(letter, point)` applies the image of a letter. NaN from
/// the action or from f is an InvariantViolation.
template <class Point, class Act, class F>
std::vector<double> word_sphere_sums(int rank, int n, const Point& x, Act&& act, F&& f,
                                     const EnumerationBudget& budget) {
  budget.require(freegroup::ball_size(rank, n), "word ball");
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(n) + 1);
  freegroup::walk_ball(
      rank, n, x, [&](freegroup::Letter l, const Point& y) { return act(freegroup::inverse_letter(l), y); },
      [&](int depth, const Point& y) {
        const double v = f(y);
        if (!std::isfinite(v)) throw InvariantViolation("non-finite value in ball average");
        sums[static_cast<std::size_t>(depth)].add(v);
      });
  std::vector<double> out;
  for (const auto& s : sums) out.push_back(s.value());
  return out;
}

/// Per grid point and radius, sphere sums of a radial function
/// f = scale * phi(|. - c|) on the unit sphere under a rotation action:
/// f(gamma^-1 x) = phi(|x - gamma c|), so one walk over the orbit of c serves
/// every grid point. Orbit points only touch grid points within the
/// profile radius, found through a cell grid.
class RadialSphereSums {
 public:
  RadialSphereSums(const std::vector<Eigen::Matrix3d>& generators, const Eigen::Vector3d& centre,
                   const holder::RadialProfile& profile, double scale, const std::vector<Eigen::Vector3d>& grid,
                   int n_max, const EnumerationBudget& budget, int threads = 1);

  int rank() const { return rank_; }
  int max_radius() const { return static_cast<int>(sums_.size()) - 1; }
  /// sum_{gamma in S_k} f(gamma^-1 x_j).
  double sphere_sum(int k, std::size_t j) const { return sums_[static_cast<std::size_t>(k)][j]; }
  /// (1/|B_n|) sum_{gamma in B_n} f(gamma^-1 x_j) for every grid point.
  std::vector<double> ball_average(int n) const;
  std::uint64_t orbit_points() const { return orbit_points_; }

 private:
  int rank_;
  std::vector<std::vector<double>> sums_;
  std::uint64_t orbit_points_ = 0;
};

}  // namespace orbitlab::ergodic
