#pragma once

// Dense linear-algebra reference for word-ball averages on a finite
// quotient: diagonalise the generator-average operator and push each
// eigenvalue through the scalar sphere recursion.

#include <Eigen/Dense>
#include <vector>

#include "orbitlab/freegroup/hom.hpp"

namespace orbitlab::oracle {

class FiniteSpectrumOracle {
 public:
  /// Quotients up to a few hundred points; throws std::invalid_argument if
  /// the action is not transitive.
  explicit FiniteSpectrumOracle(const freegroup::PermutationHom& hom);

  const Eigen::VectorXd& eigenvalues() const { return values_; }
  /// Largest |lambda| over eigenvalues other than the trivial 1 and the
  /// sign eigenvalue -1.
  double second_singular_value() const { return second_; }
  bool has_sign_eigenvalue() const { return has_sign_; }
  /// Per-step decay factor of word-ball averages at the worst nontrivial
  /// eigenvalue: 1/sqrt(2r-1) on the tempered range, the larger root of the
  /// sphere recursion outside it.
  double decay_rate() const;

  /// b_n(lambda): ball average operator B_n / |B_n| as a scalar on the
  /// lambda-eigenspace.
  double ball_multiplier(int n, double lambda) const;
  /// Limit of b_{2n}(lambda): 1 on invariants, (r-1)/r on the sign space.
  double limit_multiplier(double lambda) const;

  /// (B_n f / |B_n|)(x) for all x, by spectral reconstruction.
  Eigen::VectorXd ball_average(const Eigen::VectorXd& f, int n) const;
  /// Limit of even-ball averages for all x.
  Eigen::VectorXd limit(const Eigen::VectorXd& f) const;
  /// C with max_x |B_{2n}f/|B_{2n}| - limit| <= C rho^{2n} for every n >= 1,
  /// rho = decay_rate(); the sup over n is taken over n <= max_n.
  double deviation_constant(const Eigen::VectorXd& f, int max_n = 40) const;

 private:
  int rank_;
  Eigen::VectorXd values_;
  Eigen::MatrixXd vectors_;
  double second_ = 0.0;
  bool has_sign_ = false;
};

}  // namespace orbitlab::oracle
