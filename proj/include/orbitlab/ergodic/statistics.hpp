#pragma once

// Error and ratio statistics built on top of exact ball sums: finite sphere
// tables and plane orbit hits.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "orbitlab/ergodic/finite_ball.hpp"
#include "orbitlab/ergodic/lattice_orbit.hpp"
#include "orbitlab/ergodic/series.hpp"

namespace orbitlab::ergodic {

/// |average - limit| over a point grid with equal weights: the sup with its
/// first argmax, and the discrete L2 and L1 norms. sup >= l2 >= l1 always.
struct GridError {
  double sup = 0.0;
  double l2 = 0.0;
  double l1 = 0.0;
  std::size_t argmax = 0;

  double get(ErrorNorm norm) const { return norm == ErrorNorm::sup ? sup : norm == ErrorNorm::l2 ? l2 : l1; }
};

/// DomainError on mismatched or empty grids.
GridError sup_error(std::span<const double> average, std::span<const double> limit);

/// E(f, n) = ||B_m f / |B_m| - limit|| with m = 2n (or 2n + 1 when `odd`),
/// for every n with m <= counts.max_radius(); t = n. Even series start at
/// n = 1, odd ones at n = 0.
ErrorSeries finite_error_series(const SphereCounts& counts, std::span<const double> f, std::span<const double> limit,
                                ErrorNorm norm, bool odd = false);

/// Cumulative number of hits with 1/r <= |gamma y| <= r per threshold.
std::vector<double> plane_hit_counts(const PlaneHits& hits, double r);

/// Fits log N(t) = log c + (beta - 1) log t + alpha t with alpha given: the
/// polynomial correction to an exponential count. Needs three or more
/// positive counts at distinct t > 0.
struct BetaFit {
  double beta = 0.0;
  double log_scale = 0.0;
  double residual = 0.0;
};
BetaFit fit_beta(std::span<const double> t, std::span<const double> counts, double alpha);

/// beta_t({g : g^-1 y in X_r}) per threshold: hits with 1/r <= |gamma y| <= r
/// over V(t). `r` may not exceed the radius the hits were collected with.
std::vector<double> plane_mass_bound(const PlaneHits& hits, double r, const matgroup::Normalization& normalization);

/// N1(t) / N2(t) along a grid. Points with N2 = 0 are kept in the counts
/// but left out of ratio().
struct RatioStat {
  std::vector<double> t;
  std::vector<double> n1;
  std::vector<double> n2;

  std::vector<double> ratio_t() const;
  std::vector<double> ratio() const;
  /// Largest relative departure from the final ratio over the second half of
  /// the trajectory; DomainError when no ratio is defined.
  double final_fluctuation() const;
};

/// Word balls B_2n from x on a finite set, t = n; A1, A2 are point sets.
RatioStat finite_ratio_statistic(const SphereCounts& counts, std::uint32_t x, std::span<const std::uint32_t> a1,
                                 std::span<const std::uint32_t> a2);

/// Norm balls on the plane, t = log T; A1, A2 are open annuli (r1, r2).
RatioStat plane_ratio_statistic(const PlaneHits& hits, std::array<double, 2> a1, std::array<double, 2> a2);

}  // namespace orbitlab::ergodic
