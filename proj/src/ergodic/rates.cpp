#include "orbitlab/ergodic/rates.hpp"

#include <algorithm>
#include <cmath>

#include "orbitlab/errors.hpp"

namespace orbitlab::ergodic {

namespace {
void check(double a, double rho, double e) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("Hoelder exponent must lie in (0, 1]");
  if (!(rho > 0.0)) throw DomainError("local dimension must be positive");
  if (!(e > 0.0 && e < 1.0)) throw DomainError("rate prediction needs an error in (0, 1)");
}
}  // namespace

double predict_uniform_rate(double a, double rho, double e) {
  check(a, rho, e);
  return std::pow(e, a / (a + rho));
}

double balance_epsilon(double a, double rho, double e) {
  check(a, rho, e);
  return std::pow(e, 1.0 / (a + rho));
}

double balanced_sum(double a, double rho, double e, double eps) { return std::pow(eps, -rho) * e + std::pow(eps, a); }

double transitive_rate(double a0, double a, double rho, double e_bar) {
  if (!(a0 > 0.0)) throw DomainError("coarse monotonicity exponent must be positive");
  return predict_uniform_rate(std::min(a0, a), rho, e_bar);
}

}  // namespace orbitlab::ergodic
