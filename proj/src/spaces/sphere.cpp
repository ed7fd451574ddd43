#include "orbitlab/spaces/sphere.hpp"

#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::spaces {

Sphere2::Sphere2(Point basepoint) : basepoint_(basepoint.normalized()) {
  Point helper = std::abs(basepoint_.x()) < 0.9 ? Point(1, 0, 0) : Point(0, 1, 0);
  Point u = (helper - helper.dot(basepoint_) * basepoint_).normalized();
  Point v = basepoint_.cross(u);
  frame_.col(0) = u;
  frame_.col(1) = v;
  frame_.col(2) = basepoint_;
}

Sphere2::Point Sphere2::act(const matgroup::FloatMatrix& g, const Point& x) const {
  if (g.tag() != matgroup::GroupTag::so3) throw ConfigError("sphere is acted on by SO(3), got " + matgroup::to_string(g.tag()));
  return g.matrix() * x;
}

double Sphere2::cap_mass(double eps) {
  if (eps <= 0.0) return 0.0;
  return eps >= 2.0 ? 1.0 : eps * eps / 4.0;
}

std::vector<Sphere2::Point> Sphere2::sample(std::size_t n, std::uint64_t seed, double r) const {
  // Height above the basepoint is uniform for the area measure.
  const double zmin = std::max(-1.0, 1.0 - r * r / 2.0);
  QuasiRandom qr(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = qr(i);
    const double z = zmin + (1.0 - zmin) * u[0];
    const double phi = 2.0 * std::numbers::pi * u[1];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    out.push_back(frame_ * Point(s * std::cos(phi), s * std::sin(phi), z));
  }
  return out;
}

std::vector<Sphere2::Point> Sphere2::fibonacci_grid(std::size_t n) {
  std::vector<Point> out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(n);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    out.emplace_back(s * std::cos(phi), s * std::sin(phi), z);
  }
  return out;
}

double Sphere2::fibonacci_mesh(std::size_t n) {
  // Cells have area 4 pi / n; a covering radius of 2.5 cell diameters is
  // comfortably above the measured value for n >= 50.
  return 2.5 * std::sqrt(4.0 / static_cast<double>(n));
}

}  // namespace orbitlab::spaces
