#include "wcontact/model.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace wcontact;
using Catch::Approx;

TEST_CASE("plane_strain_matrix at nu = 0 collapses to diag(E, E, E/2)") {
  const Mat3 d = plane_strain_matrix(IsotropicMaterial(1.0, 0.0));
  REQUIRE(d(0, 0) == Approx(1.0));
  REQUIRE(d(1, 1) == Approx(1.0));
  REQUIRE(d(2, 2) == Approx(0.5));
  REQUIRE(d(0, 1) == Approx(0.0).margin(1e-15));
  REQUIRE(d(0, 2) == Approx(0.0).margin(1e-15));
}

TEST_CASE("plane_strain_matrix with steel-like constants") {
  const double e = 2.1e5, nu = 0.3;
  const Mat3 d = plane_strain_matrix(IsotropicMaterial(e, nu));
  // independent evaluation of the plane-strain formula
  const double d11 = e * (1.0 - nu) / ((1.0 + nu) * (1.0 - 2.0 * nu));
  REQUIRE(d(0, 0) == Approx(d11).epsilon(1e-14));
  REQUIRE(d11 == Approx(2.8269e5).epsilon(1e-4));
  REQUIRE(d(0, 1) == Approx(e * nu / ((1.0 + nu) * (1.0 - 2.0 * nu))).epsilon(1e-14));
}

TEST_CASE("material invariants are enforced") {
  REQUIRE_THROWS_AS(IsotropicMaterial(1.0, 0.6), ConfigError);
  REQUIRE_THROWS_AS(IsotropicMaterial(1.0, 0.5), ConfigError);
  REQUIRE_THROWS_AS(IsotropicMaterial(0.0, 0.3), ConfigError);
  REQUIRE_THROWS_AS(IsotropicMaterial(-2.0, 0.3), ConfigError);
  REQUIRE_THROWS_AS(IsotropicMaterial(1.0, -0.1), ConfigError);
}

TEST_CASE("plane_strain_matrix is symmetric positive definite over the valid range") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> e_dist(1e-2, 1e6);
  std::uniform_real_distribution<double> nu_dist(0.0, 0.4999);
  for (int i = 0; i < 200; ++i) {
    const Mat3 d = plane_strain_matrix(IsotropicMaterial(e_dist(rng), nu_dist(rng)));
    REQUIRE((d - d.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Mat3> eig(d);
    REQUIRE(eig.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("power law matches direct arithmetic") {
  const WinklerLaw law = power_law(1e-5, 0.5);
  // B^{-1/a} = 1e10, |w|^2 = 1e-8
  REQUIRE(law.response(-1e-4) == Approx(-100.0).epsilon(1e-12));
  REQUIRE(law.response(1e-4) == Approx(100.0).epsilon(1e-12));
  REQUIRE(law.response(0.0) == 0.0);
  REQUIRE(law.derivative(0.0) == 0.0);  // a < 1
  REQUIRE(law.derivative(-1e-4) == Approx(1e10 * 2.0 * 1e-4).epsilon(1e-12));
}

TEST_CASE("power law linear case") {
  const WinklerLaw law = power_law(1e-5, 1.0);
  REQUIRE(law.response(3e-4) == Approx(3e-4 / 1e-5).epsilon(1e-12));
  REQUIRE(law.derivative(0.0) == Approx(1e5).epsilon(1e-15));
  REQUIRE(law.derivative(0.7) == Approx(1e5).epsilon(1e-15));
  REQUIRE(law.lipschitz_bound.has_value());
  REQUIRE(*law.lipschitz_bound == Approx(1e5));
}

TEST_CASE("power law rejects invalid parameters") {
  REQUIRE_THROWS_AS(power_law(0.0, 0.5), ConfigError);
  REQUIRE_THROWS_AS(power_law(-1e-5, 0.5), ConfigError);
  REQUIRE_THROWS_AS(power_law(1e-5, 0.0), ConfigError);
  REQUIRE_THROWS_AS(power_law(1e-5, 1.5), ConfigError);
}

TEST_CASE("eval_g_minus branches") {
  const WinklerLaw law = power_law(1e-5, 0.5);
  REQUIRE(eval_g_minus(law, 0.1) == 0.0);
  REQUIRE(eval_g_minus(law, 0.0) == 0.0);
  REQUIRE(eval_g_minus(law, -1e-4) == Approx(-100.0).epsilon(1e-12));
}

TEST_CASE("g_minus is nonpositive and vanishes exactly on the nonnegative axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> z_dist(-1e-3, 1e-3);
  for (double a : {0.3, 0.5, 1.0}) {
    const WinklerLaw law = power_law(2.5e-5, a);
    for (int i = 0; i < 500; ++i) {
      const double z = z_dist(rng);
      const double g = eval_g_minus(law, z);
      REQUIRE(g <= 0.0);
      REQUIRE((g == 0.0) == (z >= 0.0));
    }
  }
}

TEST_CASE("power law response is strictly monotone on samples") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> w_dist(-1e-3, 1e-3);
  const WinklerLaw law = power_law(1e-5, 0.5);
  for (int i = 0; i < 500; ++i) {
    const double y = w_dist(rng);
    const double z = w_dist(rng);
    if (y == z) continue;
    REQUIRE((law.response(y) - law.response(z)) * (y - z) > 0.0);
  }
}

TEST_CASE("groove gap values") {
  const double r = 5e-4, b = 1.0, l = 4.0;
  REQUIRE(groove_gap(l, r, b, l) == Approx(5e-4).epsilon(1e-14));
  REQUIRE(groove_gap(l - b, r, b, l) == 0.0);
  REQUIRE(groove_gap(l + b, r, b, l) == 0.0);
  REQUIRE(groove_gap(l - 2.5, r, b, l) == 0.0);
  // independent arithmetic: r * 0.75^{3/2}
  REQUIRE(groove_gap(l - b / 2.0, r, b, l) ==
          Approx(5e-4 * std::pow(0.75, 1.5)).epsilon(1e-14));
  REQUIRE(5e-4 * std::pow(0.75, 1.5) == Approx(3.2476e-4).epsilon(1e-4));
  REQUIRE_THROWS_AS(groove_gap(0.0, r, 0.0, l), ConfigError);
}

TEST_CASE("groove gap is C1 at the support boundary") {
  const double r = 5e-4, b = 1.0, l = 4.0;
  double prev_slope = 1e300;
  for (double h : {1e-2, 1e-4, 1e-6, 1e-8}) {
    const double slope = (groove_gap(l - b + h, r, b, l) - groove_gap(l - b, r, b, l)) / h;
    REQUIRE(slope >= 0.0);
    REQUIRE(slope < prev_slope);
    prev_slope = slope;
  }
  REQUIRE(prev_slope < 1e-6);  // slope tends to zero with the step
}

TEST_CASE("validate_law flags and estimates") {
  const auto monotone = validate_law(power_law(1e-5, 0.5), -1e-3, 1e-3, 100);
  REQUIRE(monotone.monotone);
  REQUIRE_FALSE(monotone.exceeds_declared_bound);

  WinklerLaw constant;
  constant.response = [](double) { return 0.0; };
  constant.derivative = [](double) { return 0.0; };
  const auto flat = validate_law(constant, -1.0, 1.0, 50);
  REQUIRE_FALSE(flat.monotone);

  const double b = 2e-3;
  const auto linear = validate_law(power_law(b, 1.0), -1.0, 1.0, 100);
  REQUIRE(linear.monotone);
  REQUIRE(linear.empirical_lipschitz == Approx(1.0 / b).epsilon(1e-9));

  WinklerLaw tight = power_law(b, 1.0);
  tight.lipschitz_bound = 0.5 / b;  // declared too small on purpose
  REQUIRE(validate_law(tight, -1.0, 1.0, 100).exceeds_declared_bound);

  REQUIRE_THROWS_AS(validate_law(constant, 1.0, -1.0, 10), ConfigError);
  REQUIRE_THROWS_AS(validate_law(constant, -1.0, 1.0, 1), ConfigError);
}

namespace {

BodyMesh two_triangle_square() {
  BodyMesh mesh;
  mesh.nodes = {Vec2(0, 0), Vec2(1, 0), Vec2(1, 1), Vec2(0, 1)};
  mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
  mesh.boundary_edges = {{0, 1, EdgeKind::dirichlet_full, -1},
                         {1, 2, EdgeKind::neumann, -1},
                         {2, 3, EdgeKind::neumann, -1},
                         {3, 0, EdgeKind::neumann, -1}};
  return mesh;
}

}  // namespace

TEST_CASE("mesh validation catches broken input") {
  REQUIRE_NOTHROW(two_triangle_square().validate());

  BodyMesh flipped = two_triangle_square();
  std::swap(flipped.triangles[0][1], flipped.triangles[0][2]);
  REQUIRE_THROWS_AS(flipped.validate(), ConfigError);

  BodyMesh doubled = two_triangle_square();
  doubled.boundary_edges.push_back({1, 0, EdgeKind::neumann, -1});
  REQUIRE_THROWS_AS(doubled.validate(), ConfigError);

  BodyMesh unconstrained = two_triangle_square();
  unconstrained.boundary_edges[0].kind = EdgeKind::neumann;
  REQUIRE_THROWS_AS(unconstrained.validate(), ConfigError);
}

TEST_CASE("problem validation checks pair wiring") {
  const auto make_body = [] {
    return Body{two_triangle_square(), IsotropicMaterial(1.0, 0.0), LoadSpec{}};
  };
  Problem p;
  p.bodies.push_back(make_body());
  p.bodies.push_back(make_body());

  ContactPairSpec pair;
  pair.body_a = 0;
  pair.body_b = 1;
  pair.law = power_law(1e-5, 0.5);
  pair.gap.evaluator = [](const Vec2&) { return 1.0; };

  SECTION("pair without tagged edges is rejected") {
    p.contact_pairs.push_back(pair);
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
  }
  SECTION("invalid body order is rejected") {
    pair.body_a = 1;
    pair.body_b = 0;
    p.contact_pairs.push_back(pair);
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
  }
  SECTION("duplicate index set is rejected") {
    p.bodies[0].mesh.boundary_edges[2] = {2, 3, EdgeKind::contact, 0};
    p.bodies[1].mesh.boundary_edges[0] = {0, 1, EdgeKind::contact, 0};
    p.bodies[1].mesh.boundary_edges[2].kind = EdgeKind::dirichlet_full;
    p.contact_pairs.push_back(pair);
    p.contact_pairs.push_back(pair);
    REQUIRE_THROWS_AS(p.validate(), ConfigError);
  }
  SECTION("contact tag on a foreign body is rejected") {
    Problem q = p;
    q.bodies.push_back(make_body());
    q.bodies[2].mesh.boundary_edges[2] = {2, 3, EdgeKind::contact, 0};
    q.bodies[0].mesh.boundary_edges[2] = {2, 3, EdgeKind::contact, 0};
    q.bodies[1].mesh.boundary_edges[0] = {0, 1, EdgeKind::contact, 0};
    q.bodies[1].mesh.boundary_edges[2].kind = EdgeKind::dirichlet_full;
    q.contact_pairs.push_back(pair);
    REQUIRE_THROWS_AS(q.validate(), ConfigError);
  }
}

TEST_CASE("adaptive quadrature agrees with the closed-form layer antiderivative") {
  const WinklerLaw law = power_law(1e-5, 0.5);
  for (double t : {-1e-4, -3e-4, -1e-3}) {
    const double closed = law.g_minus_primitive(t);
    const double quad = integrate([&](double z) { return eval_g_minus(law, z); }, 0.0, t);
    REQUIRE(quad == Approx(closed).epsilon(1e-10));
  }
  // closed form at B = 1e-5, a = 0.5, t = -1e-4: 1e10*(1e-4)^3/3
  REQUIRE(law.g_minus_primitive(-1e-4) == Approx(1e-2 / 3.0).epsilon(1e-12));
}
