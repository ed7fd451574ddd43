#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "orbitlab/matgroup/sl2z.hpp"

namespace orbitlab::matgroup {

enum class GroupTag { so3, sl2r, so21 };

std::string to_string(GroupTag tag);

/// Real matrix tagged with the group it is claimed to lie in. Construction
/// audits the group relation (orthogonality, unimodularity or preservation
/// of x^2 + y^2 - z^2) to 1e-9, relative to the squared entry size for the
/// noncompact groups.
class FloatMatrix {
 public:
  static constexpr double kResidualTolerance = 1e-9;

  FloatMatrix(Eigen::MatrixXd m, GroupTag tag);

  const Eigen::MatrixXd& matrix() const { return m_; }
  GroupTag tag() const { return tag_; }
  double residual() const { return residual(m_, tag_); }
  FloatMatrix inverse() const;

  static double residual(const Eigen::MatrixXd& m, GroupTag tag);
  static FloatMatrix identity(GroupTag tag);

  friend FloatMatrix operator*(const FloatMatrix& x, const FloatMatrix& y);

 private:
  Eigen::MatrixXd m_;
  GroupTag tag_;
};

inline FloatMatrix group_inverse(const FloatMatrix& g) { return g.inverse(); }

/// Euclidean (Frobenius) or max-entry norm of a real matrix.
double matrix_norm(const Eigen::MatrixXd& m, NormKind kind);

/// The form x^2 + y^2 - z^2 as a diagonal Gram matrix.
Eigen::Matrix3d lorentz_form();

/// Adjoint representation SL_2(R) -> SO^0(2,1) in the basis
/// e1 = [[1,0],[0,-1]], e2 = [[0,1],[1,0]], e3 = [[0,1],[-1,0]] of sl_2, on which
/// -det is x^2 + y^2 - z^2. Kernel {+-I}. Throws DomainError if |det M - 1| exceeds
/// 1e-12 times the squared largest entry.
FloatMatrix adjoint_so21(const Eigen::Matrix2d& m);

Eigen::Matrix2d to_real(const LatticeElement& g);

/// Rotation by `angle` about the unit `axis` (right-hand rule).
FloatMatrix rotation(const Eigen::Vector3d& axis, double angle);
/// Rotation of the unit quaternion (w, x, y, z) / |q|.
FloatMatrix rotation_from_quaternion(double w, double x, double y, double z);

/// Free generating set of rank 3 in SO(3) from the integer quaternions of
/// norm 5, 1 + 2i, 1 + 2j, 1 + 2k (their inverses are the conjugates).
std::vector<FloatMatrix> norm5_quaternion_rotations();

}  // namespace orbitlab::matgroup
