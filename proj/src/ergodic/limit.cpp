#include "orbitlab/ergodic/limit.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "orbitlab/holder/audit.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::ergodic {

FreeParity FreeParity::from(const freegroup::PermutationHom& hom) { return {hom.rank(), holder::parity_vector(hom)}; }

double DensityIntegral::density(const spaces::Plane::Point& x, const spaces::Plane::Point& y) const {
  return scale * std::pow(x.norm() * y.norm(), -alpha);
}

std::string describe(const LimitOperator& op) {
  if (std::holds_alternative<MeanProjection>(op)) return "mean_projection";
  if (const auto* p = std::get_if<FreeParity>(&op)) return p->f0 ? "free_parity" : "free_parity(no f0)";
  const auto& d = std::get<DensityIntegral>(op);
  return "density_integral(alpha=" + format_double(d.alpha) + ",scale=" + format_double(d.scale) + ")";
}

std::vector<double> limit_apply(const LimitOperator& op, const freegroup::PermutationHom& hom,
                                const std::vector<double>& f) {
  const std::size_t n = hom.degree();
  if (f.size() != n) throw DomainError("function table size differs from the space");
  if (std::holds_alternative<DensityIntegral>(op)) throw ConfigError("density limit is not defined on finite sets");
  CompensatedSum mean;
  for (double v : f) mean.add(v);
  const double m = mean.value() / static_cast<double>(n);
  std::vector<double> out(n, m);
  if (const auto* p = std::get_if<FreeParity>(&op)) {
    if (!p->f0) {
      if (holder::parity_vector(hom)) throw ConfigError("action is bipartite but no parity vector was supplied");
      return out;
    }
    const auto& f0 = *p->f0;
    CompensatedSum inner;
    for (std::size_t x = 0; x < n; ++x) inner.add(f[x] * f0[x]);
    const double c = (p->rank - 1.0) / p->rank * inner.value() / static_cast<double>(n);
    for (std::size_t x = 0; x < n; ++x) out[x] += c * f0[x];
  }
  return out;
}

double limit_apply(const DensityIntegral& op, const holder::TestFunction<spaces::Plane>& f,
                   const spaces::Plane::Point& x) {
  if (!f.centre || !f.profile) throw ConfigError("density integral needs a radial test function");
  const auto c = *f.centre;
  const double radius = f.profile->radius;
  spaces::QuasiRandom qr(op.seed);
  CompensatedSum s;
  for (std::size_t i = 0; i < op.quadrature_points; ++i) {
    const auto u = qr(i);
    const double rho = radius * std::sqrt(u[0]);
    const double phi = 2.0 * std::numbers::pi * u[1];
    const spaces::Plane::Point y = c + rho * spaces::Plane::Point(std::cos(phi), std::sin(phi));
    s.add(f(y) * op.density(x, y));
  }
  return s.value() / static_cast<double>(op.quadrature_points) * std::numbers::pi * radius * radius;
}

double density_annulus_mass(const DensityIntegral& op, const spaces::Plane::Point& x, double rho1, double rho2) {
  auto radial = [&](double rho) { return 2.0 * std::numbers::pi * rho * std::pow(rho, -op.alpha); };
  const double integral =
      op.alpha == 1.0 ? 2.0 * std::numbers::pi * (rho2 - rho1)
                      : boost::math::quadrature::gauss_kronrod<double, 31>::integrate(radial, rho1, rho2, 10, 1e-12);
  return op.scale * std::pow(x.norm(), -op.alpha) * integral;
}

}  // namespace orbitlab::ergodic
