#include "orbitlab/oracle/finite_spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace orbitlab::oracle {

namespace {
constexpr double kEigTol = 1e-9;
}

FiniteSpectrumOracle::FiniteSpectrumOracle(const freegroup::PermutationHom& hom) : rank_(hom.rank()) {
  if (!hom.transitive()) throw std::invalid_argument("oracle needs a transitive action");
  const auto n = static_cast<Eigen::Index>(hom.degree());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  const double w = 1.0 / (2.0 * rank_);
  for (freegroup::Letter l = 0; l < 2 * rank_; ++l)
    for (Eigen::Index x = 0; x < n; ++x) t(hom.act(l, static_cast<std::uint32_t>(x)), x) += w;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  values_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = values_(i);
    if (std::abs(v - 1.0) < kEigTol) continue;
    if (std::abs(v + 1.0) < kEigTol) {
      has_sign_ = true;
      continue;
    }
    second_ = std::max(second_, std::abs(v));
  }
}

double FiniteSpectrumOracle::decay_rate() const {
  const double q = 2.0 * rank_ - 1.0;
  const double a = 2.0 * rank_ * second_;
  if (a <= 2.0 * std::sqrt(q)) return 1.0 / std::sqrt(q);
  return (a + std::sqrt(a * a - 4.0 * q)) / (2.0 * q);
}

double FiniteSpectrumOracle::ball_multiplier(int n, double lambda) const {
  const double q = 2.0 * rank_ - 1.0;
  const double a = 2.0 * rank_ * lambda;
  // Unnormalised sphere sums s_k(a), summed with the ball size.
  double prev = 1.0, cur = a, total = 1.0, size = 1.0, sphere = 1.0;
  if (n >= 1) {
    total += cur;
    sphere = 2.0 * rank_;
    size += sphere;
  }
  for (int k = 1; k < n; ++k) {
    const double next = a * cur - (k == 1 ? 2.0 * rank_ : q) * prev;
    prev = cur;
    cur = next;
    total += cur;
    sphere *= q;
    size += sphere;
  }
  return total / size;
}

double FiniteSpectrumOracle::limit_multiplier(double lambda) const {
  if (std::abs(lambda - 1.0) < kEigTol) return 1.0;
  if (std::abs(lambda + 1.0) < kEigTol) return (rank_ - 1.0) / rank_;
  return 0.0;
}

Eigen::VectorXd FiniteSpectrumOracle::ball_average(const Eigen::VectorXd& f, int n) const {
  const Eigen::VectorXd coeff = vectors_.transpose() * f;
  Eigen::VectorXd scaled(coeff.size());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) scaled(i) = coeff(i) * ball_multiplier(n, values_(i));
  return vectors_ * scaled;
}

Eigen::VectorXd FiniteSpectrumOracle::limit(const Eigen::VectorXd& f) const {
  const Eigen::VectorXd coeff = vectors_.transpose() * f;
  Eigen::VectorXd scaled(coeff.size());
  for (Eigen::Index i = 0; i < coeff.size(); ++i) scaled(i) = coeff(i) * limit_multiplier(values_(i));
  return vectors_ * scaled;
}

double FiniteSpectrumOracle::deviation_constant(const Eigen::VectorXd& f, int max_n) const {
  const double rho = decay_rate();
  const Eigen::VectorXd coeff = vectors_.transpose() * f;
  double c = 0.0;
  for (Eigen::Index i = 0; i < coeff.size(); ++i) {
    const double lambda = values_(i);
    double k = 0.0;
    for (int m = 1; m <= max_n; ++m) {
      const double dev = std::abs(ball_multiplier(2 * m, lambda) - limit_multiplier(lambda));
      k = std::max(k, dev / std::pow(rho, 2.0 * m));
    }
    c += k * std::abs(coeff(i)) * vectors_.col(i).cwiseAbs().maxCoeff();
  }
  return c;
}

}  // namespace orbitlab::oracle
