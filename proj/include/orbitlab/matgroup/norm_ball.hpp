#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "orbitlab/matgroup/sl2z.hpp"

namespace orbitlab::matgroup {

/// Growth function V(t) normalising a ball sum. Either the cardinality of
/// the ball, or scale * t^(beta-1) * e^(alpha t).
struct Normalization {
  enum class Kind { cardinality, power_exp };
  Kind kind = Kind::cardinality;
  double alpha = 0.0;
  double beta = 1.0;
  double scale = 1.0;

  static Normalization cardinality() { return {}; }
  static Normalization power_exp(double alpha, double beta, double scale = 1.0) {
    return {Kind::power_exp, alpha, beta, scale};
  }

  /// Throws DomainError unless the result is positive and finite.
  double value(double t, double ball_cardinality) const;
  std::string describe() const;
};

/// B_t = {g : log ||g|| < t} on SL_2 with the Euclidean (Frobenius) norm.
struct NormBallFamily {
  NormKind norm = NormKind::euclidean;
  Normalization normalization;

  std::int64_t norm_sq_bound(double t) const { return strict_norm_sq_bound(t); }
  bool contains(const LatticeElement& g, double t) const { return 0.5 * std::log(static_cast<double>(g.norm_sq())) < t; }
  /// Certified constant C(g) with g B_t inside B_{t + log C(g)}: the Frobenius
  /// norm is submultiplicative, so C(g) = ||g||_F works for any g.
  static double translation_constant(const Eigen::MatrixXd& g);
};

}  // namespace orbitlab::matgroup
