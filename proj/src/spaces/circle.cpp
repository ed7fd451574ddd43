#include "orbitlab/spaces/circle.hpp"

#include <cmath>
#include <numbers>

#include "orbitlab/errors.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::spaces {

double Circle::normalize(double theta) {
  double t = std::fmod(theta, std::numbers::pi);
  if (t < 0.0) t += std::numbers::pi;
  if (t >= std::numbers::pi) t = 0.0;
  return t;
}

double Circle::distance(Point x, Point y) const {
  const double d = std::abs(normalize(x) - normalize(y));
  return std::min(d, std::numbers::pi - d);
}

Circle::Point Circle::act(const Eigen::Matrix2d& g, Point x) const {
  const Eigen::Vector2d v = g * Eigen::Vector2d(std::cos(x), std::sin(x));
  return normalize(std::atan2(v.y(), v.x()));
}

Circle::Point Circle::act(const matgroup::FloatMatrix& g, Point x) const {
  if (g.tag() != matgroup::GroupTag::sl2r)
    throw ConfigError("circle is acted on by SL2(R), got " + matgroup::to_string(g.tag()));
  return act(Eigen::Matrix2d(g.matrix()), x);
}

double Circle::jacobian(const Eigen::Matrix2d& g, Point x) {
  return 1.0 / (g * Eigen::Vector2d(std::cos(x), std::sin(x))).squaredNorm();
}

double Circle::ball_mass_of(double eps) {
  if (eps <= 0.0) return 0.0;
  return std::min(1.0, 2.0 * eps / std::numbers::pi);
}

std::vector<Circle::Point> Circle::sample(std::size_t n, std::uint64_t seed, double r) const {
  const double half = std::min(r, std::numbers::pi / 2.0);
  QuasiRandom qr(seed);
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(normalize(-half + 2.0 * half * qr(i)[0]));
  return out;
}

}  // namespace orbitlab::spaces
