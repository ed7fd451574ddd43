#pragma once

// Orbits of SL_2(Z) Frobenius balls B_t = {log ||gamma|| < t}. Norm balls are
// inverse-closed (||gamma^-1|| = ||gamma||), so sum_{B_t} f(gamma^-1 x) =
// sum_{B_t} f(gamma x); enumerations below use whichever side is cheaper.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/matgroup/congruence.hpp"
#include "orbitlab/matgroup/norm_ball.hpp"
#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::ergodic {

/// (1/V(t)) sum_{gamma in B_t} f(gamma^-1 x) by full enumeration of B_t.
template <class Space, class F>
double lattice_ball_average(const Space& space, const F& f, const typename Space::Point& x, double t,
                            const matgroup::Normalization& normalization, const EnumerationBudget& budget) {
  const auto bound = matgroup::strict_norm_sq_bound(t);
  budget.require(matgroup::predicted_sl2z_ball_size(bound), "lattice ball");
  CompensatedSum s;
  std::uint64_t count = 0;
  matgroup::enumerate_sl2z_ball(bound, budget, [&](const matgroup::LatticeElement& g) {
    s.add(f(space.act(g.inverse(), x)));
    ++count;
  });
  return s.value() / normalization.value(t, static_cast<double>(count));
}

/// Orbit points gamma x falling in the disc |y| <= radius, for gamma in the
/// ball of the largest threshold, tagged with the first grid level whose
/// ball contains gamma.
struct PlaneHit {
  Eigen::Vector2d y;
  std::uint32_t level;
};

struct PlaneHits {
  Eigen::Vector2d x;
  std::vector<double> thresholds;         // T grid, increasing
  std::vector<std::int64_t> norm_bounds;  // strict squared-norm bounds per T
  double radius = 0.0;
  std::vector<PlaneHit> hits;
};

/// Only gamma with |gamma x| <= radius are generated: the top row lies in the
/// strip |a x1 + b x2| <= radius and the bottom row on its solution line is
/// cut to the same strip. Needs x2 != 0 and x1/x2 irrational in practice.
PlaneHits collect_plane_hits(const Eigen::Vector2d& x, const std::vector<double>& thresholds, double radius,
                             const EnumerationBudget& budget);

/// Log-spaced radial bins on the annulus 1/r <= |y| < r times equal angular
/// bins. Bin index = radial * angular_bins + angular.
struct PlaneBinning {
  double r = 4.0;
  std::size_t radial_bins = 16;
  std::size_t angular_bins = 8;

  std::size_t size() const { return radial_bins * angular_bins; }
  std::optional<std::size_t> bin_of(const Eigen::Vector2d& y) const;
  double radial_edge(std::size_t i) const;  // i in [0, radial_bins]
  double area(std::size_t bin) const;
};

/// counts[level][bin] (cumulative in level) and normalised masses
/// counts / V(t_level).
struct PlaneHistograms {
  std::vector<std::vector<std::int64_t>> counts;
  std::vector<std::vector<double>> mass;
  std::vector<double> normaliser;
};

PlaneHistograms plane_histograms(const PlaneHits& hits, const PlaneBinning& binning,
                                 const matgroup::Normalization& normalization);

/// Cumulative per-level sums of g over the hits (levels as in PlaneHits).
std::vector<double> plane_orbit_sums(const PlaneHits& hits, const std::function<double(const Eigen::Vector2d&)>& g);

/// 1/2 sum |p - q| over bins.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct ChiSquareTest {
  double statistic = 0.0;
  double threshold = 0.0;  // 99% quantile
  std::size_t dof = 0;
  bool rejects = false;
};

/// Counts against expectations proportional to `weights` with the same
/// total; bins with zero weight are skipped.
ChiSquareTest chi_square_against(const std::vector<std::int64_t>& counts, const std::vector<double>& weights,
                                 double level = 0.99);

struct RadialProfileFit {
  std::vector<double> radius;   // geometric bin centres
  std::vector<double> density;  // mass per unit area
  double slope = 0.0;           // d log density / d log radius
  bool monotone_decreasing = false;
};

RadialProfileFit radial_profile(const std::vector<double>& mass, const PlaneBinning& binning);

/// Mass of the annulus rho1 < |y| < rho2 under a histogram, assuming density
/// uniform in area inside each bin.
double annulus_mass_from_histogram(const std::vector<double>& mass, const PlaneBinning& binning, double rho1,
                                   double rho2);

/// Cumulative ball sums on the congruence quotient: hist[level][h] =
/// #{gamma in B_{t_level} : gamma mod N = h}.
std::vector<std::vector<std::int64_t>> congruence_ball_histograms(const matgroup::CongruenceQuotient& group,
                                                                  const std::vector<double>& thresholds,
                                                                  const EnumerationBudget& budget);

/// Every gamma of the ball of the largest threshold with its level, as a
/// callback; shared by the circle and de Sitter experiments.
void for_each_in_nested_balls(const std::vector<double>& thresholds, const EnumerationBudget& budget,
                              const std::function<void(const matgroup::LatticeElement&, std::uint32_t)>& visit);

}  // namespace orbitlab::ergodic
