#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "fixtures.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/matgroup/congruence.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/matgroup/norm_ball.hpp"
#include "orbitlab/matgroup/sl2z.hpp"
#include "orbitlab/numeric.hpp"
#include "orbitlab/oracle/sl2z_scan.hpp"

using namespace orbitlab;
using namespace orbitlab::matgroup;

namespace {

std::vector<LatticeElement> ball(std::int64_t bound) {
  std::vector<LatticeElement> out;
  enumerate_sl2z_ball(bound, EnumerationBudget{}, [&](const LatticeElement& g) { out.push_back(g); });
  return out;
}

}  // namespace

TEST_CASE("matrix norms") {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  CHECK(matrix_norm(id, NormKind::euclidean) == doctest::Approx(std::sqrt(2.0)));
  CHECK(matrix_norm(id, NormKind::max) == 1.0);
  CHECK(matrix_norm(LatticeElement::make(1, 1, 0, 1), NormKind::euclidean) == doctest::Approx(std::sqrt(3.0)));
  CHECK(matrix_norm(LatticeElement::make(2, 1, 1, 1), NormKind::max) == 2.0);
  CHECK(LatticeElement::make(2, 1, 1, 1).norm_sq() == 7);
}

TEST_CASE("lattice elements: determinant, inverse, overflow") {
  CHECK_THROWS_AS(LatticeElement::make(1, 1, 1, 1), std::invalid_argument);
  const auto g = LatticeElement::make(2, 1, 1, 1);
  CHECK(g * g.inverse() == LatticeElement::identity());
  CHECK(g.negated() * g.negated() == g * g);
  LatticeElement big = LatticeElement::make(1, 0, 0, 1);
  const auto u = LatticeElement::make(1, 1, 1, 2);
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 200; ++i) big = big * u;
      }(),
      std::overflow_error);
}

TEST_CASE("norm bounds") {
  CHECK(strict_norm_sq_bound_T(2.0) == 3);
  CHECK(strict_norm_sq_bound_T(16.0) == 255);
  CHECK(closed_norm_sq_bound(std::sqrt(3.0)) == 3);
  CHECK(strict_norm_sq_bound(std::log(4.0)) == 15);
  const auto [c, d] = unimodular_completion(7, 5);
  CHECK(7 * d - 5 * c == 1);
}

TEST_CASE("SL2(Z) balls against the entry scan") {
  // ||g|| <= sqrt2 is the minimum norm: +-I and the quarter turns +-S.
  const auto b2 = ball(2);
  const auto S = LatticeElement::make(0, -1, 1, 0);
  CHECK(b2.size() == 4);
  CHECK(std::set<LatticeElement>(b2.begin(), b2.end()) ==
        std::set<LatticeElement>{LatticeElement::identity(), LatticeElement::identity().negated(), S, S.negated()});
  CHECK(ball(1).empty());
  for (std::int64_t bound : {2, 3, 5, 10, 50}) {
    auto got = ball(bound);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::sl2z_entry_scan(bound));
    CHECK(count_sl2z_ball(bound) == got.size());
  }
  for (int T = 2; T <= 12; ++T) {
    auto got = ball(strict_norm_sq_bound_T(T));
    std::sort(got.begin(), got.end());
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
    CHECK(got == oracle::sl2z_entry_scan(strict_norm_sq_bound_T(T)));
  }
}

TEST_CASE("SL2(Z) balls: inverse and sign closed, budgeted, sharded") {
  const auto b = ball(200);
  std::set<LatticeElement> s(b.begin(), b.end());
  for (const auto& g : b) {
    CHECK(s.count(g.inverse()) == 1);
    CHECK(s.count(g.negated()) == 1);
  }
  CHECK_THROWS_AS(enumerate_sl2z_ball(200, EnumerationBudget{10}, [](const LatticeElement&) {}),
                  BudgetExceeded);
  std::size_t parts = 0;
  for (auto [lo, hi] : {std::pair<std::int64_t, std::int64_t>{INT64_MIN, -1}, {0, 0}, {1, INT64_MAX}})
    enumerate_sl2z_ball(200, EnumerationBudget{}, [&](const LatticeElement&) { ++parts; }, lo, hi);
  CHECK(parts == b.size());
}

TEST_CASE("ball counts grow quadratically") {
  std::vector<double> lx, ly;
  for (int k = 5; k <= 10; ++k) {
    const double T = std::pow(2.0, k);
    lx.push_back(std::log(T));
    ly.push_back(std::log(static_cast<double>(count_sl2z_ball(strict_norm_sq_bound_T(T)))));
  }
  CHECK(least_squares(lx, ly).slope == doctest::Approx(2.0).epsilon(0.025));
  // Leading term 6 T^2.
  const double T = 1024;
  CHECK(static_cast<double>(count_sl2z_ball(strict_norm_sq_bound_T(T))) / (T * T) == doctest::Approx(6.0).epsilon(0.02));
}

TEST_CASE("congruence quotients") {
  CHECK(CongruenceQuotient(2).order() == 6);
  CHECK(CongruenceQuotient(3).order() == 24);
  CHECK(CongruenceQuotient(5).order() == 120);
  CHECK(CongruenceQuotient(4).order() == 48);
  const CongruenceQuotient q2(2);
  const auto u = q2.reduce(LatticeElement::make(1, 1, 0, 1));
  CHECK(q2.element(u) == CongruenceQuotient::Entries{1, 1, 0, 1});
  CHECK(u != 0);
  CHECK(q2.multiply(u, u) == 0);
  CHECK(q2.reduce(LatticeElement::make(3, 2, 4, 3)) == q2.reduce(LatticeElement::make(1, 0, 0, 1)));
  const CongruenceQuotient q5(5);
  // Reduction is a homomorphism.
  const auto g = LatticeElement::make(2, 1, 1, 1), h = LatticeElement::make(1, 3, 0, 1);
  CHECK(q5.reduce(g * h) == q5.multiply(q5.reduce(g), q5.reduce(h)));
  CHECK(q5.multiply(q5.reduce(g), q5.inverse(q5.reduce(g))) == 0);
  CHECK(q5.regular_action(fixtures::sl2_generators()).transitive());
  CHECK_THROWS(CongruenceQuotient(1));
}

TEST_CASE("float matrices audit group membership") {
  CHECK_NOTHROW(rotation(Eigen::Vector3d(1, 2, 3), 0.7));
  Eigen::Matrix3d skew = Eigen::Matrix3d::Identity();
  skew(0, 1) = 0.1;
  CHECK_THROWS_AS(FloatMatrix(skew, GroupTag::so3), InvariantViolation);
  CHECK_THROWS_AS(FloatMatrix(Eigen::Matrix2d::Identity() * 2, GroupTag::sl2r), InvariantViolation);
  // Time reversal preserves the form but not the identity component.
  CHECK_THROWS_AS(FloatMatrix(Eigen::Vector3d(1, -1, -1).asDiagonal().toDenseMatrix(), GroupTag::so21),
                  InvariantViolation);
  const auto r = rotation(Eigen::Vector3d(0, 0, 1), 0.3);
  CHECK((r * r.inverse()).matrix().isApprox(Eigen::Matrix3d::Identity()));
  CHECK_THROWS_AS(r * FloatMatrix::identity(GroupTag::sl2r), std::invalid_argument);
  for (const auto& q : norm5_quaternion_rotations()) CHECK(q.residual() < 1e-12);
}

TEST_CASE("adjoint map SL2(R) -> SO0(2,1)") {
  CHECK(adjoint_so21(Eigen::Matrix2d::Identity()).matrix().isApprox(Eigen::Matrix3d::Identity()));
  CHECK(adjoint_so21(-Eigen::Matrix2d::Identity()).matrix().isApprox(Eigen::Matrix3d::Identity()));
  for (double phi : {0.3, 1.1, 2.5}) {
    Eigen::Matrix2d k;
    k << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    const Eigen::Matrix3d m = adjoint_so21(k).matrix();
    // Rotation by 2 phi in the (x, y) plane, fixing the z axis.
    Eigen::Matrix3d expected = Eigen::Matrix3d::Identity();
    expected.topLeftCorner<2, 2>() << std::cos(2 * phi), -std::sin(2 * phi), std::sin(2 * phi), std::cos(2 * phi);
    CHECK(m.isApprox(expected, 1e-12));
  }
  // Homomorphism, and exact form preservation at large entries.
  const Eigen::Matrix2d a = to_real(LatticeElement::make(2, 1, 1, 1)), b = to_real(LatticeElement::make(1, 5, 0, 1));
  CHECK(adjoint_so21(a * b).matrix().isApprox(adjoint_so21(a).matrix() * adjoint_so21(b).matrix(), 1e-12));
  const auto big = LatticeElement::make(610, 377, 377, 233) * LatticeElement::make(1, 0, 300, 1);
  const Eigen::Matrix3d m = adjoint_so21(to_real(big)).matrix();
  const Eigen::Matrix3d j = lorentz_form();
  CHECK(((m.transpose() * j * m - j).cwiseAbs().maxCoeff() / m.cwiseAbs().maxCoeff()) < 1e-6);
  Eigen::Matrix2d singular;
  singular << 1, 1, 1, 1;
  CHECK_THROWS_AS(adjoint_so21(singular), DomainError);
}

TEST_CASE("normalisation V(t)") {
  CHECK(Normalization::cardinality().value(3.0, 17.0) == 17.0);
  CHECK(Normalization::power_exp(1.0, 1.0).value(2.0, 0.0) == doctest::Approx(std::exp(2.0)));
  CHECK(Normalization::power_exp(0.0, 2.0, 3.0).value(5.0, 0.0) == doctest::Approx(15.0));
  CHECK_THROWS_AS(Normalization::power_exp(0.0, 2.0).value(0.0, 0.0), DomainError);
  const NormBallFamily family;
  CHECK(family.contains(LatticeElement::make(2, 1, 1, 1), std::log(3.0)));
  CHECK_FALSE(family.contains(LatticeElement::make(2, 1, 1, 1), 0.5 * std::log(7.0)));
}
