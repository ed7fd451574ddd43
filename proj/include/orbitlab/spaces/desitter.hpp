#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

/// De Sitter space: the one-sheeted hyperboloid of Q(x,y,z) = x^2 + y^2 - z^2,
/// which for this form is the level set Q = +1 (Q = -1 is the two-sheeted
/// hyperboloid). SO^0(2,1) acts by matrices; points are pushed back onto the
/// quadric after every action. Invariant measure dz d(phi) in the
/// coordinates (sqrt(1+z^2) cos phi, sqrt(1+z^2) sin phi, z). Metric: the
/// ambient Euclidean distance, used only for the filtration and for balls.
class DeSitter {
 public:
  using Point = Eigen::Vector3d;
  static constexpr SpaceKind kind = SpaceKind::desitter;
  static constexpr bool isometric = false;
  static constexpr double level = 1.0;

  static Point from_coordinates(double z, double phi);
  /// Q(p) - 1.
  static double quadric_defect(const Point& p);
  /// Rescales (x, y) so that the point lies on the quadric; throws
  /// InvariantViolation if the defect before projection exceeds 1e-6.
  static Point project(const Point& p);

  Point basepoint() const { return Point(1, 0, 0); }
  double distance(const Point& x, const Point& y) const { return (x - y).norm(); }
  double resolution() const { return 1e-12; }
  /// Throws ConfigError unless g is tagged SO^0(2,1).
  Point act(const matgroup::FloatMatrix& g, const Point& x) const;
  Point act(const Eigen::Matrix3d& g, const Point& x) const { return project(g * x); }

  bool in_filtration(const Point& x, double r) const { return distance(x, basepoint()) <= r; }
  /// Invariant measure of X_r, by quadrature over z.
  double filtration_mass(double r) const;
  std::vector<Point> sample(std::size_t n, std::uint64_t seed, double r) const;
  std::optional<double> ball_mass(const Point&, double) const { return std::nullopt; }
};

}  // namespace orbitlab::spaces
