#include "orbitlab/matgroup/float_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "orbitlab/errors.hpp"

namespace orbitlab::matgroup {

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::so3: return "SO(3)";
    case GroupTag::sl2r: return "SL2(R)";
    case GroupTag::so21: return "SO0(2,1)";
  }
  return "?";
}

namespace {
int dimension(GroupTag tag) { return tag == GroupTag::sl2r ? 2 : 3; }
}  // namespace

Eigen::Matrix3d lorentz_form() { return Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal(); }

double FloatMatrix::residual(const Eigen::MatrixXd& m, GroupTag tag) {
  const int d = dimension(tag);
  if (m.rows() != d || m.cols() != d) return std::numeric_limits<double>::infinity();
  // Noncompact groups have entries of any size; defects are measured relative
  // to the cancellation each relation incurs (s^2 for bilinear, s^3 for det3).
  const double s = std::max(1.0, m.cwiseAbs().maxCoeff());
  switch (tag) {
    case GroupTag::so3: {
      const double orth = (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
      return std::max(orth, std::abs(m.determinant() - 1.0));
    }
    case GroupTag::sl2r: return std::abs(m.determinant() - 1.0) / (s * s);
    case GroupTag::so21: {
      const Eigen::Matrix3d j = lorentz_form();
      const double form = (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
      // Identity component: determinant +1 and the time orientation kept.
      const double orient = m(2, 2) >= 1.0 - 1e-12 ? 0.0 : 1.0;
      return std::max({form / (s * s), std::abs(m.determinant() - 1.0) / (s * s * s), orient});
    }
  }
  return std::numeric_limits<double>::infinity();
}

FloatMatrix::FloatMatrix(Eigen::MatrixXd m, GroupTag tag) : m_(std::move(m)), tag_(tag) {
  const double r = residual(m_, tag_);
  if (!(r <= kResidualTolerance))
    throw InvariantViolation("matrix is not in " + to_string(tag_) + " (residual " + std::to_string(r) + ")");
}

FloatMatrix FloatMatrix::identity(GroupTag tag) {
  const int d = dimension(tag);
  return FloatMatrix(Eigen::MatrixXd::Identity(d, d), tag);
}

FloatMatrix FloatMatrix::inverse() const {
  switch (tag_) {
    case GroupTag::so3: return FloatMatrix(m_.transpose(), tag_);
    case GroupTag::so21: {
      const Eigen::Matrix3d j = lorentz_form();
      return FloatMatrix(j * m_.transpose() * j, tag_);
    }
    case GroupTag::sl2r: {
      Eigen::Matrix2d inv;
      inv << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
      return FloatMatrix(inv, tag_);
    }
  }
  throw std::logic_error("unreachable");
}

FloatMatrix operator*(const FloatMatrix& x, const FloatMatrix& y) {
  if (x.tag_ != y.tag_) throw std::invalid_argument("product of matrices from different groups");
  return FloatMatrix(x.m_ * y.m_, x.tag_);
}

double matrix_norm(const Eigen::MatrixXd& m, NormKind kind) {
  return kind == NormKind::euclidean ? m.norm() : m.cwiseAbs().maxCoeff();
}

FloatMatrix adjoint_so21(const Eigen::Matrix2d& m) {
  const double s = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (std::abs(m.determinant() - 1.0) > 1e-12 * s * s) throw DomainError("adjoint_so21: input is not unimodular");
  std::array<Eigen::Matrix2d, 3> basis;
  basis[0] << 1, 0, 0, -1;
  basis[1] << 0, 1, 1, 0;
  basis[2] << 0, 1, -1, 0;
  const Eigen::Matrix2d minv = (Eigen::Matrix2d() << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)).finished();
  Eigen::Matrix3d out;
  for (int j = 0; j < 3; ++j) {
    const Eigen::Matrix2d y = m * basis[static_cast<std::size_t>(j)] * minv;
    out(0, j) = y(0, 0);
    out(1, j) = 0.5 * (y(0, 1) + y(1, 0));
    out(2, j) = 0.5 * (y(0, 1) - y(1, 0));
  }
  return FloatMatrix(out, GroupTag::so21);
}

Eigen::Matrix2d to_real(const LatticeElement& g) {
  Eigen::Matrix2d m;
  m << static_cast<double>(g.a), static_cast<double>(g.b), static_cast<double>(g.c), static_cast<double>(g.d);
  return m;
}

FloatMatrix rotation(const Eigen::Vector3d& axis, double angle) {
  return FloatMatrix(Eigen::Matrix3d(Eigen::AngleAxisd(angle, axis.normalized())), GroupTag::so3);
}

FloatMatrix rotation_from_quaternion(double w, double x, double y, double z) {
  Eigen::Quaterniond q(w, x, y, z);
  q.normalize();
  return FloatMatrix(Eigen::Matrix3d(q.toRotationMatrix()), GroupTag::so3);
}

std::vector<FloatMatrix> norm5_quaternion_rotations() {
  return {rotation_from_quaternion(1, 2, 0, 0), rotation_from_quaternion(1, 0, 2, 0),
          rotation_from_quaternion(1, 0, 0, 2)};
}

}  // namespace orbitlab::matgroup
