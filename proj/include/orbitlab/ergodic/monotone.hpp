#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/budget.hpp"
#include "orbitlab/matgroup/norm_ball.hpp"

namespace orbitlab::ergodic {

double operator_norm(const Eigen::Matrix2d& m);

/// Right-invariant metric on SL_2(R): d(g, h) = psi(g h^-1) with
/// psi(u) = max(log(1 + ||u - I||), log(1 + ||u^-1 - I||)), operator norms.
/// Subadditivity of log(1 + ||u - I||) gives the triangle inequality; balls
/// are compact because ||u|| <= e^psi(u).
double distance_to_identity(const Eigen::Matrix2d& g);

/// `count` elements at distance exactly eps from e (the sphere of O_eps(e)),
/// g = exp(s X) for seeded directions X in sl_2; the first is diagonal.
std::vector<Eigen::Matrix2d> sample_near_identity(double eps, std::size_t count, std::uint64_t seed);

struct InclusionWitness {
  Eigen::Matrix2d g;
  double t = 0.0;
  matgroup::LatticeElement gamma;
};

struct MonotoneRow {
  double eps = 0.0;
  std::size_t samples = 0;
  /// max log ||g||_op over the samples: g B_t lies in B_{t + kappa} by
  /// submultiplicativity.
  double kappa = 0.0;
  /// max over samples, t and gamma in B_t of log ||g gamma|| - t.
  double kappa_measured = 0.0;
  /// max over t of V(t + kappa) / V(t).
  double delta = 1.0;
  std::optional<InclusionWitness> violation;
};

struct MonotoneAudit {
  std::vector<MonotoneRow> rows;
  std::optional<double> a0;  // slope of log(delta - 1) against log eps
  double a0_goodness = 0.0;
  bool inclusion_ok = true;
};

/// Coarse monotonicity of SL_2(Z) Frobenius balls: inclusion g B_t in
/// B_{t+kappa_eps} checked on every enumerated gamma, for the ball of each
/// threshold T (t = log T). `extra` elements join every eps row (e.g. the
/// identity).
MonotoneAudit coarse_monotone_check(const matgroup::NormBallFamily& family, const std::vector<double>& eps_grid,
                                    std::size_t samples_per_eps, const std::vector<double>& thresholds,
                                    std::uint64_t seed, const EnumerationBudget& budget,
                                    const std::vector<Eigen::Matrix2d>& extra = {});

}  // namespace orbitlab::ergodic
