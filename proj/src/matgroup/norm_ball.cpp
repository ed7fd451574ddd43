#include "orbitlab/matgroup/norm_ball.hpp"

#include "orbitlab/errors.hpp"
#include "orbitlab/numeric.hpp"

namespace orbitlab::matgroup {

double Normalization::value(double t, double ball_cardinality) const {
  double v = 0.0;
  if (kind == Kind::cardinality) {
    v = ball_cardinality;
  } else {
    if (t <= 0 && beta != 1.0) throw DomainError("power-exp normalisation needs t > 0 when beta != 1");
    v = scale * std::pow(t, beta - 1.0) * std::exp(alpha * t);
  }
  if (!(v > 0) || !std::isfinite(v)) throw DomainError("normalisation V(t) must be positive and finite");
  return v;
}

std::string Normalization::describe() const {
  if (kind == Kind::cardinality) return "cardinality";
  return "power_exp(alpha=" + format_double(alpha) + ",beta=" + format_double(beta) + ",scale=" +
         format_double(scale) + ")";
}

double NormBallFamily::translation_constant(const Eigen::MatrixXd& g) { return g.norm(); }

}  // namespace orbitlab::matgroup
