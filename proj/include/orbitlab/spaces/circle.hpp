#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

/// Boundary circle as the real projective line: a point is the angle in
/// [0, pi) of a line through the origin. SL_2(R) acts by g.theta = angle of
/// g (cos theta, sin theta), which is fractional-linear in tan theta and
/// blind to the sign of g. Metric: angular distance mod pi. Measure d theta / pi.
class Circle {
 public:
  using Point = double;
  static constexpr SpaceKind kind = SpaceKind::circle;
  static constexpr bool isometric = false;

  static double normalize(double theta);
  Point basepoint() const { return 0.0; }
  double distance(Point x, Point y) const;
  double diameter() const { return 0.5 * 3.14159265358979323846; }
  double resolution() const { return 1e-12; }
  Point act(const Eigen::Matrix2d& g, Point x) const;
  Point act(const matgroup::LatticeElement& g, Point x) const { return act(matgroup::to_real(g), x); }
  /// Throws ConfigError unless g is tagged SL_2(R).
  Point act(const matgroup::FloatMatrix& g, Point x) const;
  /// Radon-Nikodym derivative d(g_* mu)/d mu at g x: 1 / |g u|^2 for the unit
  /// vector u of x, evaluated at x.
  static double jacobian(const Eigen::Matrix2d& g, Point x);

  bool in_filtration(Point x, double r) const { return distance(x, 0.0) <= r; }
  double filtration_mass(double r) const { return ball_mass_of(r); }
  std::vector<Point> sample(std::size_t n, std::uint64_t seed, double r) const;
  static double ball_mass_of(double eps);
  std::optional<double> ball_mass(Point, double eps) const { return ball_mass_of(eps); }
};

}  // namespace orbitlab::spaces
