#include "orbitlab/ergodic/monotone.hpp"

#include <cmath>
#include <random>

#include "orbitlab/errors.hpp"
#include "orbitlab/ergodic/lattice_orbit.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/spaces/sampler.hpp"

namespace orbitlab::ergodic {

double operator_norm(const Eigen::Matrix2d& m) {
  const double f2 = m.squaredNorm();
  const double det = m.determinant();
  return std::sqrt(0.5 * (f2 + std::sqrt(std::max(0.0, f2 * f2 - 4.0 * det * det))));
}

double distance_to_identity(const Eigen::Matrix2d& g) {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  return std::max(std::log1p(operator_norm(g - id)), std::log1p(operator_norm(g.inverse() - id)));
}

namespace {

// exp of a traceless 2x2 matrix: X^2 = -det(X) I.
Eigen::Matrix2d exp_traceless(const Eigen::Matrix2d& x) {
  const double q = -x.determinant();
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  if (q > 1e-300) {
    const double s = std::sqrt(q);
    return std::cosh(s) * id + (std::sinh(s) / s) * x;
  }
  if (q < -1e-300) {
    const double s = std::sqrt(-q);
    return std::cos(s) * id + (std::sin(s) / s) * x;
  }
  return id + x;
}

}  // namespace

std::vector<Eigen::Matrix2d> sample_near_identity(double eps, std::size_t count, std::uint64_t seed) {
  if (!(eps > 0.0)) throw DomainError("neighbourhood radius must be positive");
  std::mt19937_64 gen(seed);
  std::vector<Eigen::Matrix2d> out;
  for (std::size_t i = 0; i < count; ++i) {
    Eigen::Matrix2d x;
    if (i == 0) {
      x << 1, 0, 0, -1;
    } else {
      const double p = 2 * spaces::unit_interval(gen()) - 1, q = 2 * spaces::unit_interval(gen()) - 1,
                   r = 2 * spaces::unit_interval(gen()) - 1;
      x << p, q + r, q - r, -p;
    }
    x /= x.norm();
    // Rotations saturate: ||exp(sX) - I|| <= 2 for elliptic X. Find the
    // largest reachable radius and bisect on s below it.
    double hi = 1.0;
    while (distance_to_identity(exp_traceless(hi * x)) < eps && hi < 64.0) hi *= 2.0;
    if (distance_to_identity(exp_traceless(hi * x)) < eps) continue;
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (distance_to_identity(exp_traceless(mid * x)) < eps ? lo : hi) = mid;
    }
    out.push_back(exp_traceless(lo * x));
  }
  return out;
}

MonotoneAudit coarse_monotone_check(const matgroup::NormBallFamily& family, const std::vector<double>& eps_grid,
                                    std::size_t samples_per_eps, const std::vector<double>& thresholds,
                                    std::uint64_t seed, const EnumerationBudget& budget,
                                    const std::vector<Eigen::Matrix2d>& extra) {
  if (family.norm != matgroup::NormKind::euclidean) throw ConfigError("monotonicity audit supports the Euclidean norm");
  // Elements of the largest ball with their levels, enumerated once.
  std::vector<matgroup::LatticeElement> elements;
  std::vector<std::uint32_t> levels;
  for_each_in_nested_balls(thresholds, budget, [&](const matgroup::LatticeElement& g, std::uint32_t level) {
    elements.push_back(g);
    levels.push_back(level);
  });
  MonotoneAudit audit;
  std::vector<double> lx, ly;
  for (std::size_t e = 0; e < eps_grid.size(); ++e) {
    MonotoneRow row;
    row.eps = eps_grid[e];
    auto gs = sample_near_identity(row.eps, samples_per_eps, spaces::derive_seed(seed, e));
    gs.insert(gs.end(), extra.begin(), extra.end());
    row.samples = gs.size();
    for (const auto& g : gs) row.kappa = std::max(row.kappa, std::log(operator_norm(g)));
    row.kappa_measured = -std::numeric_limits<double>::infinity();
    for (const auto& g : gs) {
      for (std::size_t i = 0; i < elements.size(); ++i) {
        const auto& gamma = elements[i];
        const Eigen::Matrix2d prod = g * matgroup::to_real(gamma);
        const double log_norm = 0.5 * std::log(prod.squaredNorm());
        // gamma sits in every ball from its level up; the tightest is its own.
        const double t = std::log(thresholds[levels[i]]);
        row.kappa_measured = std::max(row.kappa_measured, log_norm - t);
        if (!(log_norm < t + row.kappa + 1e-12) && !row.violation) row.violation = InclusionWitness{g, t, gamma};
      }
    }
    if (row.violation) audit.inclusion_ok = false;
    for (double T : thresholds) {
      const double t = std::log(T);
      const double v0 = family.normalization.value(
          t, static_cast<double>(matgroup::count_sl2z_ball(matgroup::strict_norm_sq_bound_T(T))));
      const double t1 = t + row.kappa;
      const double v1 = family.normalization.value(
          t1, static_cast<double>(matgroup::count_sl2z_ball(matgroup::strict_norm_sq_bound(t1))));
      row.delta = std::max(row.delta, v1 / v0);
    }
    if (row.delta > 1.0) {
      lx.push_back(std::log(row.eps));
      ly.push_back(std::log(row.delta - 1.0));
    }
    audit.rows.push_back(row);
  }
  if (lx.size() >= 2) {
    const auto fit = least_squares(lx, ly);
    audit.a0 = fit.slope;
    audit.a0_goodness = fit.residual_norm;
  }
  return audit;
}

}  // namespace orbitlab::ergodic
