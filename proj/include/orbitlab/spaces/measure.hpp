#pragma once

// Sampled measure models over X_r and the ball-mass certificate
// mu(D_eps(x)) >= m_r eps^rho they are audited against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

template <class Space>
struct WeightedSample {
  std::vector<typename Space::Point> points;
  double weight = 0.0;  // mass carried by each point
  double mass() const { return weight * static_cast<double>(points.size()); }
};

struct BallMassCertificate {
  double m_r = 0.0;
  double rho = 0.0;
  double bound(double eps) const { return m_r * std::pow(eps, rho); }
};

/// Equal-weight sample of X_r: each point carries mu(X_r) / n.
template <class Space>
class MeasureModel {
 public:
  using Point = typename Space::Point;

  MeasureModel(const Space& space, double r, std::size_t sample_size, std::uint64_t seed,
               BallMassCertificate certificate = {}, bool full_support = true)
      : space_(space), r_(r), seed_(seed), certificate_(certificate), full_support_(full_support) {
    points_ = space.sample(sample_size, seed, r);
    if (points_.empty()) throw ResolutionError("empty sample of X_r");
    weight_ = space.filtration_mass(r) / static_cast<double>(points_.size());
  }

  const Space& space() const { return space_; }
  double radius() const { return r_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<Point>& points() const { return points_; }
  double point_weight() const { return weight_; }
  const BallMassCertificate& certificate() const { return certificate_; }
  bool full_support() const { return full_support_; }

  double empirical_ball_mass(const Point& x, double eps) const {
    std::size_t hits = 0;
    for (const auto& p : points_)
      if (in_open_ball(space_.distance(x, p), eps)) ++hits;
    return weight_ * static_cast<double>(hits);
  }

  /// Throws InvariantViolation at the first (x, eps) where the empirical mass
  /// falls below half the certified bound.
  void audit(std::span<const Point> centres, std::span<const double> eps_grid) const {
    for (std::size_t i = 0; i < centres.size(); ++i)
      for (double eps : eps_grid) {
        const double m = empirical_ball_mass(centres[i], eps);
        if (m < 0.5 * certificate_.bound(eps))
          throw InvariantViolation("ball mass certificate fails at centre " + std::to_string(i) + ", eps " +
                                   format_double(eps) + ": empirical " + format_double(m) + " < 0.5 * " +
                                   format_double(certificate_.bound(eps)));
      }
  }

 private:
  Space space_;
  double r_;
  std::uint64_t seed_;
  BallMassCertificate certificate_;
  bool full_support_;
  std::vector<Point> points_;
  double weight_ = 0.0;
};

/// Sample points inside D_eps(x), each with the model's point weight. Throws
/// ResolutionError when no sample point falls in the ball.
template <class Space>
WeightedSample<Space> ball_points(const MeasureModel<Space>& model, const typename Space::Point& x, double eps) {
  if (!(eps > 0.0)) throw DomainError("ball radius must be positive");
  WeightedSample<Space> out;
  out.weight = model.point_weight();
  for (const auto& p : model.points())
    if (in_open_ball(model.space().distance(x, p), eps)) out.points.push_back(p);
  if (out.points.empty()) throw ResolutionError("no sample point within eps " + format_double(eps) + " of x");
  return out;
}

struct LocalDimensionReport {
  bool ok = false;
  double rho = 0.0;
  double m_r = 0.0;
  double fitted_slope = 0.0;
  std::vector<double> eps;
  std::vector<double> min_mass;  // min over centres, per eps
  std::size_t worst_centre = 0;
  double worst_eps = 0.0;
  std::string message;
};

/// Smallest rho on the grid {0.25, 0.5, ...} not below the log-log slope of
/// min_x mu(D_eps(x)) against eps (less a 0.1 tolerance), with
/// m_r = min over the grid of mass / eps^rho. A zero mass or a slope above
/// max_rho is reported as a violation at the worst (x, eps).
template <class Space>
LocalDimensionReport local_dimension_certificate(const MeasureModel<Space>& model,
                                                 std::span<const typename Space::Point> centres,
                                                 std::span<const double> eps_grid, double max_rho = 8.0) {
  LocalDimensionReport rep;
  if (centres.empty() || eps_grid.size() < 2) throw DomainError("certificate needs centres and at least two radii");
  double worst_ratio = std::numeric_limits<double>::infinity();
  for (double eps : eps_grid) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centres.size(); ++i) {
      const double m = model.empirical_ball_mass(centres[i], eps);
      if (m < lo) lo = m;
      if (m <= 0.0 && worst_ratio > 0.0) {
        worst_ratio = 0.0;
        rep.worst_centre = i;
        rep.worst_eps = eps;
      }
    }
    rep.eps.push_back(eps);
    rep.min_mass.push_back(lo);
  }
  if (worst_ratio == 0.0) {
    rep.message = "empty ball at eps " + format_double(rep.worst_eps) + ", centre " + std::to_string(rep.worst_centre);
    return rep;
  }
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < rep.eps.size(); ++k) {
    lx.push_back(std::log(rep.eps[k]));
    ly.push_back(std::log(rep.min_mass[k]));
  }
  rep.fitted_slope = least_squares(lx, ly).slope;
  rep.rho = std::max(0.25, 0.25 * std::ceil((rep.fitted_slope - 0.1) / 0.25));
  if (rep.rho > max_rho) {
    std::size_t k = 0;
    for (std::size_t j = 1; j < rep.eps.size(); ++j)
      if (rep.min_mass[j] / std::pow(rep.eps[j], max_rho) < rep.min_mass[k] / std::pow(rep.eps[k], max_rho)) k = j;
    rep.worst_eps = rep.eps[k];
    rep.message = "local dimension above " + format_double(max_rho) + " on the grid";
    return rep;
  }
  rep.m_r = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < rep.eps.size(); ++k) {
    const double ratio = rep.min_mass[k] / std::pow(rep.eps[k], rep.rho);
    if (ratio < rep.m_r) {
      rep.m_r = ratio;
      rep.worst_eps = rep.eps[k];
    }
  }
  rep.ok = true;
  return rep;
}

inline std::vector<double> point_coordinates(double p) { return {p}; }
inline std::vector<double> point_coordinates(std::uint32_t p) { return {static_cast<double>(p)}; }
template <class Vec>
std::vector<double> point_coordinates(const Vec& p) {
  return std::vector<double>(p.data(), p.data() + p.size());
}

/// Point-cloud CSV: space,x0[,x1[,x2]],weight.
template <class Space>
void write_point_cloud(std::ostream& out, const WeightedSample<Space>& sample) {
  const std::string tag = to_string(Space::kind);
  std::size_t dim = sample.points.empty() ? 1 : point_coordinates(sample.points.front()).size();
  out << "space";
  for (std::size_t k = 0; k < dim; ++k) out << ",x" << k;
  out << ",weight\n";
  for (const auto& p : sample.points) {
    out << tag;
    for (double c : point_coordinates(p)) out << ',' << format_double(c);
    out << ',' << format_double(sample.weight) << '\n';
  }
}

}  // namespace orbitlab::spaces
