#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/spaces/space.hpp"

namespace orbitlab::spaces {

/// Unit sphere in R^3 with the chordal metric |x - y| and the rotation
/// invariant probability measure. SO(3) acts isometrically.
class Sphere2 {
 public:
  using Point = Eigen::Vector3d;
  static constexpr SpaceKind kind = SpaceKind::sphere2;
  static constexpr bool isometric = true;

  explicit Sphere2(Point basepoint = Point(0, 0, 1));

  const Point& basepoint() const { return basepoint_; }
  double distance(const Point& x, const Point& y) const { return (x - y).norm(); }
  double diameter() const { return 2.0; }
  double resolution() const { return 1e-12; }
  /// Throws ConfigError unless g is tagged SO(3).
  Point act(const matgroup::FloatMatrix& g, const Point& x) const;
  Point act(const Eigen::Matrix3d& rotation, const Point& x) const { return rotation * x; }

  bool in_filtration(const Point& x, double r) const { return distance(x, basepoint_) <= r; }
  double filtration_mass(double r) const { return cap_mass(r); }
  /// Area-uniform sample of X_r = closed cap of chordal radius r around the
  /// basepoint.
  std::vector<Point> sample(std::size_t n, std::uint64_t seed, double r) const;
  /// Near-uniform deterministic grid (Fibonacci spiral) of the whole sphere.
  static std::vector<Point> fibonacci_grid(std::size_t n);
  /// Fibonacci grid of size n: every point of the sphere is within this
  /// chordal distance of some grid point (conservative covering radius).
  static double fibonacci_mesh(std::size_t n);

  /// Normalised area of a chordal cap of radius eps: eps^2/4, capped at 1.
  static double cap_mass(double eps);
  std::optional<double> ball_mass(const Point&, double eps) const { return cap_mass(eps); }

 private:
  Point basepoint_;
  Eigen::Matrix3d frame_;  // columns: orthonormal frame with basepoint last
};

}  // namespace orbitlab::spaces
