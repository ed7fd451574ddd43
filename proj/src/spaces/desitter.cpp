#include "orbitlab/spaces/desitter.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::spaces {

DeSitter::Point DeSitter::from_coordinates(double z, double phi) {
  const double rho = std::sqrt(1.0 + z * z);
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

double DeSitter::quadric_defect(const Point& p) { return p.x() * p.x() + p.y() * p.y() - p.z() * p.z() - level; }

DeSitter::Point DeSitter::project(const Point& p) {
  const double defect = quadric_defect(p);
  const double scale = std::max(1.0, p.squaredNorm());
  if (std::abs(defect) > 1e-6 * scale) throw InvariantViolation("point left the de Sitter quadric");
  const double rho = std::hypot(p.x(), p.y());
  const double target = std::sqrt(level + p.z() * p.z());
  return {p.x() * target / rho, p.y() * target / rho, p.z()};
}

DeSitter::Point DeSitter::act(const matgroup::FloatMatrix& g, const Point& x) const {
  if (g.tag() != matgroup::GroupTag::so21)
    throw ConfigError("de Sitter space is acted on by SO(2,1), got " + matgroup::to_string(g.tag()));
  return project(g.matrix() * x);
}

namespace {
// Angular measure of {phi : |p(z, phi) - (1,0,0)| <= r} at height z.
double angular_width(double z, double r) {
  const double rho = std::sqrt(1.0 + z * z);
  const double c = (rho * rho + 1.0 + z * z - r * r) / (2.0 * rho);
  if (c >= 1.0) return 0.0;
  if (c <= -1.0) return 2.0 * std::numbers::pi;
  return 2.0 * std::acos(c);
}
}  // namespace

double DeSitter::filtration_mass(double r) const {
  if (r <= 0.0) return 0.0;
  auto integrand = [r](double z) { return angular_width(z, r); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -r, r, 15, 1e-12);
}

std::vector<DeSitter::Point> DeSitter::sample(std::size_t n, std::uint64_t seed, double r) const {
  // |p - x0| >= |z|, so X_r lies in the band |z| <= r; rejection from the band
  // keeps the sample uniform for dz d(phi).
  if (r < 1e-3) throw ResolutionError("de Sitter filtration radius below sampler resolution");
  QuasiRandom qr(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::uint64_t i = 0; out.size() < n; ++i) {
    const auto u = qr(i);
    Point p = from_coordinates(-r + 2.0 * r * u[0], 2.0 * std::numbers::pi * u[1]);
    if (in_filtration(p, r)) out.push_back(p);
  }
  return out;
}

}  // namespace orbitlab::spaces
