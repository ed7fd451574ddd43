#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

/// R^2 minus the origin with Lebesgue measure and the linear SL_2 action.
/// The filtration is by annuli X_r = {1/r <= |v| <= r}, r >= 1, which keeps
/// the fixed point at the origin out of every X_r.
class Plane {
 public:
  using Point = Eigen::Vector2d;
  static constexpr SpaceKind kind = SpaceKind::plane;
  static constexpr bool isometric = false;

  Point basepoint() const { return Point(1, 0); }
  double distance(const Point& x, const Point& y) const { return (x - y).norm(); }
  double resolution() const { return 1e-12; }
  Point act(const Eigen::Matrix2d& g, const Point& x) const { return g * x; }
  Point act(const matgroup::LatticeElement& g, const Point& x) const;

  bool in_filtration(const Point& x, double r) const;
  /// Lebesgue area of the annulus X_r.
  double filtration_mass(double r) const;
  std::vector<Point> sample(std::size_t n, std::uint64_t seed, double r) const;
  /// pi eps^2: the origin is a null set, so every disc has full area.
  std::optional<double> ball_mass(const Point&, double eps) const;
};

}  // namespace orbitlab::spaces
