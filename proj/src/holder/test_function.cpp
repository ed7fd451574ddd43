#include "orbitlab/holder/test_function.hpp"

namespace orbitlab::holder {

std::string to_string(RadialProfile::Shape shape) {
  switch (shape) {
    case RadialProfile::Shape::power_bump: return "power_bump";
    case RadialProfile::Shape::smooth_bump: return "smooth_bump";
    case RadialProfile::Shape::indicator: return "indicator";
  }
  return "unknown";
}

// Sphere: for the chordal distance s = d^2 is uniform on [0, 4] with density 1/4.
std::optional<double> radial_mean(const spaces::Sphere2&, const RadialProfile& p) {
  const double r2 = p.radius * p.radius;
  if (p.radius > 2.0) return std::nullopt;
  switch (p.shape) {
    case RadialProfile::Shape::power_bump: return r2 * p.exponent / (4.0 * (p.exponent + 2.0));
    case RadialProfile::Shape::smooth_bump: return r2 / 12.0;
    case RadialProfile::Shape::indicator: return r2 / 4.0;
  }
  return std::nullopt;
}

// Circle: the distance to the centre is uniform on [0, pi/2] with density 2/pi.
std::optional<double> radial_mean(const spaces::Circle&, const RadialProfile& p) {
  if (p.radius > std::numbers::pi / 2.0) return std::nullopt;
  const double k = 2.0 * p.radius / std::numbers::pi;
  switch (p.shape) {
    case RadialProfile::Shape::power_bump: return k * p.exponent / (p.exponent + 1.0);
    case RadialProfile::Shape::smooth_bump: return k * 8.0 / 15.0;
    case RadialProfile::Shape::indicator: return k;
  }
  return std::nullopt;
}

// Plane: Lebesgue integral 2 pi int_0^R phi(s) s ds.
std::optional<double> radial_mean(const spaces::Plane&, const RadialProfile& p) {
  const double disc = std::numbers::pi * p.radius * p.radius;
  switch (p.shape) {
    case RadialProfile::Shape::power_bump: return disc * p.exponent / (p.exponent + 2.0);
    case RadialProfile::Shape::smooth_bump: return disc / 3.0;
    case RadialProfile::Shape::indicator: return disc;
  }
  return std::nullopt;
}

double support_radius_for(const spaces::Plane&, const spaces::Plane::Point& centre, double radius) {
  const double n = centre.norm();
  if (n <= radius) return std::numeric_limits<double>::infinity();  // support meets the origin
  return std::max(n + radius, 1.0 / (n - radius));
}

}  // namespace orbitlab::holder
