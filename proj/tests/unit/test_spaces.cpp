#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/matgroup/float_matrix.hpp"
#include "orbitlab/spaces/circle.hpp"
#include "orbitlab/spaces/desitter.hpp"
#include "orbitlab/spaces/finite.hpp"
#include "orbitlab/spaces/measure.hpp"
#include "orbitlab/spaces/plane.hpp"
#include "orbitlab/spaces/quotient_metric.hpp"
#include "orbitlab/spaces/sampler.hpp"
#include "orbitlab/spaces/sphere.hpp"

using namespace orbitlab;
using namespace orbitlab::spaces;
using matgroup::LatticeElement;

constexpr double pi = std::numbers::pi;

TEST_CASE("actions on points") {
  const Sphere2 s2;
  const Eigen::Vector3d e1(1, 0, 0);
  CHECK(s2.act(matgroup::FloatMatrix::identity(matgroup::GroupTag::so3), e1) == e1);
  CHECK(s2.act(matgroup::rotation(Eigen::Vector3d(0, 0, 1), pi), e1).isApprox(Eigen::Vector3d(-1, 0, 0)));
  CHECK_THROWS_AS(s2.act(matgroup::FloatMatrix::identity(matgroup::GroupTag::sl2r), e1), ConfigError);

  const Plane plane;
  CHECK(plane.act(LatticeElement::make(2, 1, 1, 1), Eigen::Vector2d(1, 0)) == Eigen::Vector2d(2, 1));
  CHECK(plane.act(LatticeElement::identity(), Eigen::Vector2d(0.3, -2)) == Eigen::Vector2d(0.3, -2));

  const Circle circle;
  // The circle is RP^1: g and -g act alike, and a quarter turn moves 0 to pi/2.
  const auto g = LatticeElement::make(2, 1, 1, 1);
  CHECK(circle.act(g, 0.4) == doctest::Approx(circle.act(g.negated(), 0.4)));
  CHECK(circle.act(LatticeElement::make(0, -1, 1, 0), 0.0) == doctest::Approx(pi / 2));
  CHECK(circle.act(g * g.inverse(), 1.0) == doctest::Approx(1.0));
  CHECK(circle.act(g, circle.act(g.inverse(), 2.0)) == doctest::Approx(2.0));
  CHECK(Circle::normalize(-0.5) == doctest::Approx(pi - 0.5));
  CHECK(circle.distance(0.1, pi - 0.1) == doctest::Approx(0.2));

  const FiniteCoset fc(fixtures::s4_natural());
  CHECK(fc.act(freegroup::ReducedWord(2), 3) == 3);
}

TEST_CASE("circle Jacobian integrates to one") {
  // d(g_* mu)/d mu integrates to 1 against d theta / pi.
  const Eigen::Matrix2d g = matgroup::to_real(LatticeElement::make(3, 2, 1, 1));
  const int n = 20000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += Circle::jacobian(g, (i + 0.5) * pi / n);
  CHECK(s / n == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("de Sitter points stay on the quadric") {
  const DeSitter ds;
  const auto p = DeSitter::from_coordinates(0.3, 1.0);
  CHECK(std::abs(DeSitter::quadric_defect(p)) < 1e-12);
  CHECK(std::abs(DeSitter::quadric_defect(ds.basepoint())) < 1e-15);
  auto q = p;
  const auto g = matgroup::adjoint_so21(matgroup::to_real(LatticeElement::make(5, 2, 2, 1)));
  for (int i = 0; i < 30; ++i) {
    q = ds.act(i % 2 ? g : g.inverse(), q);
    CHECK(std::abs(DeSitter::quadric_defect(q)) <= 1e-9);
  }
  CHECK_THROWS_AS(DeSitter::project(Eigen::Vector3d(2, 0, 0)), InvariantViolation);
  CHECK_THROWS_AS(ds.act(matgroup::FloatMatrix::identity(matgroup::GroupTag::so3), p), ConfigError);
  CHECK(ds.filtration_mass(3.0) > 0.0);
}

TEST_CASE("ball points and exact ball masses") {
  // Finite coset, eps below the minimal distance: only x, mass 1/|X|.
  const FiniteCoset fc(fixtures::s4_natural());
  const MeasureModel<FiniteCoset> fm(fc, 1.0, 0, 7);
  const auto bp = ball_points(fm, 2u, 0.5);
  CHECK(bp.points == std::vector<std::uint32_t>{2});
  CHECK(bp.mass() == doctest::Approx(0.25));
  CHECK(*fc.ball_mass(2, 0.5) == doctest::Approx(0.25));

  // Profinite level: eps = 1 / index_i gives mass eps.
  const ProfiniteLevel pl(fixtures::dyadic_chain());
  const MeasureModel<ProfiniteLevel> pm(pl, 1.0, 0, 7);
  for (std::size_t i = 0; i < pl.chain().depth(); ++i) {
    const double eps = 1.0 / static_cast<double>(pl.chain().index(i));
    CHECK(*pl.ball_mass(5, eps) == doctest::Approx(eps));
    CHECK(ball_points(pm, 5u, eps).mass() == doctest::Approx(eps));
  }

  // Sphere, eps = pi: the whole sphere.
  const Sphere2 s2;
  const MeasureModel<Sphere2> sm(s2, 2.0, 2000, 3);
  CHECK(sm.point_weight() * 2000 == doctest::Approx(1.0));
  CHECK(ball_points(sm, Eigen::Vector3d(0, 0, 1), pi).mass() == doctest::Approx(1.0));
  CHECK(*s2.ball_mass(Eigen::Vector3d(0, 0, 1), pi) == 1.0);
  CHECK_THROWS_AS(ball_points(sm, Eigen::Vector3d(0, 0, 1), 1e-9), ResolutionError);
  CHECK_THROWS_AS(ball_points(sm, Eigen::Vector3d(0, 0, 1), 0.0), DomainError);
}

TEST_CASE("sampled measures converge to the exact masses") {
  const Sphere2 s2;
  const MeasureModel<Sphere2> sm(s2, 2.0, 40000, 11);
  for (double eps : {0.3, 0.7, 1.2})
    CHECK(sm.empirical_ball_mass(Eigen::Vector3d(0.6, 0, 0.8), eps) == doctest::Approx(Sphere2::cap_mass(eps)).epsilon(0.03));
  const Plane plane;
  const MeasureModel<Plane> pm(plane, 4.0, 40000, 11);
  CHECK(pm.point_weight() * 40000 == doctest::Approx(plane.filtration_mass(4.0)));
  CHECK(plane.filtration_mass(4.0) == doctest::Approx(pi * (16.0 - 1.0 / 16.0)));
  CHECK(pm.empirical_ball_mass(Eigen::Vector2d(2, 1), 0.5) == doctest::Approx(pi * 0.25).epsilon(0.05));
  const Circle circle;
  const MeasureModel<Circle> cm(circle, pi / 2, 20000, 2);
  CHECK(cm.empirical_ball_mass(1.0, 0.25) == doctest::Approx(Circle::ball_mass_of(0.25)).epsilon(0.03));
}

TEST_CASE("local dimension certificates") {
  const std::vector<double> eps{0.1, 0.2, 0.4};
  SUBCASE("sphere: rho = 2") {
    const MeasureModel<Sphere2> m(Sphere2{}, 2.0, 60000, 5);
    const std::vector<Eigen::Vector3d> centres{{0, 0, 1}, {1, 0, 0}, {0, -0.6, 0.8}};
    const auto rep = local_dimension_certificate<Sphere2>(m, centres, eps);
    CHECK(rep.ok);
    CHECK(rep.rho == 2.0);
    CHECK(rep.m_r > 0.0);
  }
  SUBCASE("plane annulus: rho = 2") {
    const MeasureModel<Plane> m(Plane{}, 4.0, 60000, 5);
    const std::vector<Eigen::Vector2d> centres{{2, 0}, {0, -2.5}, {-1.5, 1.5}};
    const auto rep = local_dimension_certificate<Plane>(m, centres, eps);
    CHECK(rep.ok);
    CHECK(rep.rho == 2.0);
  }
  SUBCASE("profinite level with bounded index jumps: rho = 1") {
    const ProfiniteLevel pl(fixtures::dyadic_chain());
    const MeasureModel<ProfiniteLevel> m(pl, 1.0, 0, 5);
    const std::vector<std::uint32_t> centres{0, 17, 200};
    const std::vector<double> grid{1.0 / 6, 1.0 / 48, 1.0 / 384};
    const auto rep = local_dimension_certificate<ProfiniteLevel>(m, centres, grid);
    CHECK(rep.ok);
    CHECK(rep.rho == 1.0);
    CHECK(rep.fitted_slope == doctest::Approx(1.0));
    const BallMassCertificate cert{rep.m_r, rep.rho};
    const MeasureModel<ProfiniteLevel> audited(pl, 1.0, 0, 5, cert);
    CHECK_NOTHROW(audited.audit(centres, grid));
  }
  SUBCASE("a certificate that overstates the mass is caught") {
    const MeasureModel<Sphere2> m(Sphere2{}, 2.0, 5000, 5, BallMassCertificate{10.0, 2.0});
    const std::vector<Eigen::Vector3d> centres{{0, 0, 1}};
    CHECK_THROWS_AS(m.audit(centres, eps), InvariantViolation);
  }
}

TEST_CASE("samplers are pure functions of the seed") {
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) != derive_seed(2, 2));
  const QuasiRandom a(9), b(9), c(10);
  CHECK(a(5) == b(5));
  CHECK(a(5) != c(5));
  for (std::uint64_t bits : {0ULL, ~0ULL, 12345ULL}) {
    CHECK(unit_interval(bits) >= 0.0);
    CHECK(unit_interval(bits) < 1.0);
  }
  const Sphere2 s2;
  CHECK(s2.sample(100, 4, 1.0) == s2.sample(100, 4, 1.0));
  for (const auto& p : s2.sample(500, 4, 0.5)) CHECK(s2.in_filtration(p, 0.5 + 1e-12));
  for (const auto& p : Plane{}.sample(500, 4, 3.0)) CHECK(Plane{}.in_filtration(p, 3.0));
}

TEST_CASE("fibonacci grid covers the sphere within its mesh") {
  const auto grid = Sphere2::fibonacci_grid(500);
  const double mesh = Sphere2::fibonacci_mesh(500);
  const auto probes = Sphere2{}.sample(2000, 1, 2.0);
  for (const auto& p : probes) {
    double best = 10.0;
    for (const auto& g : grid) best = std::min(best, (p - g).norm());
    CHECK(best <= mesh);
  }
}

TEST_CASE("quotient metrics") {
  const SchreierMetric cycle(fixtures::even_cycle(4));
  CHECK(cycle.distance(0, 4) == 4);
  CHECK(cycle.distance(1, 7) == 2);
  CHECK(cycle.diameter() == 4);
  CHECK_THROWS_AS(SchreierMetric(freegroup::PermutationHom({{1, 0, 2}, {1, 0, 2}})), ConfigError);
  const Eigen::Vector3d x(1, 0, 0), y(0, 1, 0);
  CHECK(RotationQuotientMetric::distance(x, y) == doctest::Approx(pi / 2));
  const Eigen::Matrix3d g = matgroup::rotation(Eigen::Vector3d(0, 0, 1), 0.4).matrix();
  const Eigen::Matrix3d h = matgroup::rotation(Eigen::Vector3d(1, 1, 0), -0.9).matrix();
  // Bi-invariance.
  CHECK(RotationQuotientMetric::group_distance(g, h) ==
        doctest::Approx(RotationQuotientMetric::group_distance(h * g, h * h)));
  CHECK(RotationQuotientMetric::group_distance(g, Eigen::Matrix3d::Identity()) == doctest::Approx(0.4));
}
