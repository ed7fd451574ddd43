#include "orbitlab/spaces/plane.hpp"

#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::spaces {

Plane::Point Plane::act(const matgroup::LatticeElement& g, const Point& x) const {
  return {static_cast<double>(g.a) * x.x() + static_cast<double>(g.b) * x.y(),
          static_cast<double>(g.c) * x.x() + static_cast<double>(g.d) * x.y()};
}

bool Plane::in_filtration(const Point& x, double r) const {
  if (r < 1.0) throw DomainError("plane filtration needs r >= 1");
  const double n = x.norm();
  return n >= 1.0 / r && n <= r;
}

double Plane::filtration_mass(double r) const {
  if (r < 1.0) throw DomainError("plane filtration needs r >= 1");
  return std::numbers::pi * (r * r - 1.0 / (r * r));
}

std::vector<Plane::Point> Plane::sample(std::size_t n, std::uint64_t seed, double r) const {
  if (r < 1.0) throw DomainError("plane filtration needs r >= 1");
  const double lo = 1.0 / (r * r), hi = r * r;
  QuasiRandom qr(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = qr(i);
    const double rho = std::sqrt(lo + (hi - lo) * u[0]);
    const double phi = 2.0 * std::numbers::pi * u[1];
    out.emplace_back(rho * std::cos(phi), rho * std::sin(phi));
  }
  return out;
}

std::optional<double> Plane::ball_mass(const Point&, double eps) const {
  return eps <= 0.0 ? 0.0 : std::numbers::pi * eps * eps;
}

}  // namespace orbitlab::spaces
