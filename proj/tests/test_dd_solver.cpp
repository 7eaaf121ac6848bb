#include "wcontact/dd_solver.hpp"

#include "wcontact/scenario.hpp"
#include "wcontact/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <random>

using namespace wcontact;
using Catch::Approx;

namespace {

ScenarioConfig coarse_config(int nx = 16, int ny = 8) {
  ScenarioConfig cfg;
  cfg.nx = nx;
  cfg.ny = ny;
  return cfg;
}

/// Two stacked rectangles, upper body clamped on top, constant gap, no loads.
Problem separated_problem(double gap_value) {
  Problem p;
  const IsotropicMaterial mat(1e3, 0.25);
  BodyMesh lower = detail::structured_rectangle(2.0, 0.0, 1.0, 2, 1);
  tag_rectangle_boundary(lower, 2, 1, EdgeKind::dirichlet_full, EdgeKind::neumann,
                         EdgeKind::contact, EdgeKind::neumann, 0);
  p.bodies.push_back({std::move(lower), mat, LoadSpec{}});
  BodyMesh upper = detail::structured_rectangle(2.0, 1.0, 1.0, 2, 1);
  tag_rectangle_boundary(upper, 2, 1, EdgeKind::contact, EdgeKind::neumann,
                         EdgeKind::dirichlet_full, EdgeKind::neumann, 0);
  p.bodies.push_back({std::move(upper), mat, LoadSpec{}});
  ContactPairSpec pair;
  pair.body_a = 0;
  pair.body_b = 1;
  pair.law = power_law(1e-5, 0.5);
  pair.gap.evaluator = [gap_value](const Vec2&) { return gap_value; };
  p.contact_pairs.push_back(std::move(pair));
  return p;
}

}  // namespace

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  REQUIRE_NOTHROW(cfg.validate());
  cfg.gamma_schedule = {2.0};
  REQUIRE_THROWS_AS(cfg.validate(), ConfigError);
  cfg.gamma_schedule = {0.5, -0.1};
  REQUIRE_THROWS_AS(cfg.validate(), ConfigError);
  cfg.gamma_schedule = {0.5};
  cfg.eps_u = 0.0;
  REQUIRE_THROWS_AS(cfg.validate(), ConfigError);
  cfg.eps_u = 1e-3;
  cfg.max_iterations = 0;
  REQUIRE_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("relaxation blend follows u^{k+1} = gamma*u_tilde + (1-gamma)*u^k") {
  const Problem p = generate_scenario(coarse_config(8, 4));
  AssembledProblem ap(p);
  const SolverState s0 = ap.initial_state(1e-4, PsiStrategy::active_set);
  const SolverState full = ap.ddm_step(s0, 1.0, PsiStrategy::active_set);
  const SolverState half = ap.ddm_step(s0, 0.5, PsiStrategy::active_set);
  for (size_t b = 0; b < full.u.size(); ++b) {
    const Vec expected = 0.5 * (full.u[b] + s0.u[b]);
    REQUIRE((half.u[b] - expected).lpNorm<Eigen::Infinity>() <=
            1e-14 * std::max(1e-300, expected.lpNorm<Eigen::Infinity>()));
  }
}

TEST_CASE("unloaded separated bodies converge to zero in one iteration") {
  const Problem p = separated_problem(1.0);
  SolverConfig cfg;
  cfg.gamma_schedule = {1.0};
  cfg.strategy = PsiStrategy::active_set;
  const auto [state, report] = ddm_solve(p, cfg);
  REQUIRE(report.outcome == Outcome::converged);
  REQUIRE(report.iterations() == 1);
  for (const auto& u : state.u) REQUIRE(u.norm() == 0.0);
}

TEST_CASE("newton on unloaded separated bodies finishes in one iteration") {
  const Problem p = separated_problem(1.0);
  SolverConfig cfg;
  const auto [state, report] = monolithic_newton(p, cfg);
  REQUIRE(report.outcome == Outcome::converged);
  REQUIRE(report.iterations() == 1);
  for (const auto& u : state.u) REQUIRE(u.norm() == 0.0);
}

TEST_CASE("groove scenario converges at gamma = 0.6 in order-10 iterations") {
  const Problem p = generate_scenario(coarse_config(32, 8));
  SolverConfig cfg;
  cfg.gamma_schedule = {0.6};
  cfg.strategy = PsiStrategy::active_set;
  cfg.eps_u = 1e-3;
  const auto [state, report] = ddm_solve(p, cfg);
  REQUIRE(report.outcome == Outcome::converged);
  REQUIRE(report.iterations() <= 60);
  // report invariants
  REQUIRE(int(report.history.size()) == report.iterations());
  for (const auto& rec : report.history) {
    REQUIRE(rec.rho.size() == 2);
    for (double r : rec.rho) REQUIRE(r >= 0.0);
  }
}

TEST_CASE("overrelaxation beyond the window does not converge") {
  const Problem p = generate_scenario(coarse_config());
  SolverConfig cfg;
  cfg.gamma_schedule = {1.9};
  cfg.max_iterations = 300;
  const auto [state, report] = ddm_solve(p, cfg);
  REQUIRE(report.outcome != Outcome::converged);
}

TEST_CASE("neumann strategy with a floating body surfaces the solve failure") {
  // the upper groove body is held only by the Robin term; with psi == 0 its
  // reduced stiffness is singular
  const Problem p = generate_scenario(coarse_config(8, 4));
  SolverConfig cfg;
  cfg.strategy = PsiStrategy::neumann;
  const auto [state, report] = ddm_solve(p, cfg);
  REQUIRE(report.outcome == Outcome::diverged);
  REQUIRE(report.note.find("body 1") != std::string::npos);
}

TEST_CASE("newton with a linear layer and the correct initial active set") {
  ScenarioConfig cfg = coarse_config(8, 4);
  cfg.layer_a = 1.0;
  cfg.layer_b = 1e-5;
  cfg.gap_r = 0.0;  // flat interface, fully active at the solution
  const Problem p = generate_scenario(cfg);
  SolverConfig newton_cfg;
  newton_cfg.eps_u = 1e-10;
  newton_cfg.max_iterations = 10;
  const auto [state, report] = monolithic_newton(p, newton_cfg);
  REQUIRE(report.outcome == Outcome::converged);
  REQUIRE(report.iterations() <= 2);
}

TEST_CASE("fixed point: the newton solution is stationary for ddm_step") {
  const CheckResult r = check_fixed_point(coarse_config());
  INFO(r.note);
  REQUIRE(r.pass);
}

TEST_CASE("oracle equivalence of converging strategies on the coarse instance") {
  const CheckResult r = check_oracle_equivalence(coarse_config());
  INFO(r.note);
  REQUIRE(r.pass);
  REQUIRE(r.measured <= 1e-6);
}

TEST_CASE("specialization equivalence with the abstract iteration") {
  const CheckResult r = check_specialization_equivalence(coarse_config(8, 4));
  INFO(r.note);
  REQUIRE(r.pass);
}

TEST_CASE("energy does not increase from the initial state") {
  const CheckResult r = check_energy_descent(coarse_config());
  INFO(r.note);
  REQUIRE(r.pass);
}

TEST_CASE("complementarity holds at the converged coarse groove solution") {
  const Problem p = generate_scenario(coarse_config());
  AssembledProblem ap(p);
  SolverConfig cfg;
  cfg.eps_u = 1e-8;
  cfg.max_iterations = 2000;
  const auto [state, report] = ddm_solve(ap, cfg);
  REQUIRE(report.outcome == Outcome::converged);
  const auto rep = check_complementarity(ap.pairs(), state.u);
  REQUIRE(rep.pass(10.0));
}

TEST_CASE("three-body stack: chained pairs solve and agree with the oracle") {
  // bottom body clamped, middle and top held only through the (fully active)
  // contact layers; two contact pairs, the middle body carries both segments
  Problem p;
  const IsotropicMaterial mat(2.1e5, 0.3);
  const int nx = 8, ny = 4;
  const auto make_layer = [&](double y0, EdgeKind bottom, EdgeKind top, int pair_bottom,
                              int pair_top) {
    BodyMesh mesh = detail::structured_rectangle(2.0, y0, 1.0, nx, ny);
    const RectangleSides sides =
        tag_rectangle_boundary(mesh, nx, ny, bottom, EdgeKind::dirichlet_normal, top,
                               EdgeKind::neumann, bottom == EdgeKind::contact ? pair_bottom
                                                                              : pair_top);
    // tag_rectangle_boundary assigns one pair id; fix up the other side by hand
    for (int e : sides.bottom)
      if (mesh.boundary_edges[size_t(e)].kind == EdgeKind::contact)
        mesh.boundary_edges[size_t(e)].pair_id = pair_bottom;
    for (int e : sides.top)
      if (mesh.boundary_edges[size_t(e)].kind == EdgeKind::contact)
        mesh.boundary_edges[size_t(e)].pair_id = pair_top;
    return mesh;
  };

  p.bodies.push_back({make_layer(0.0, EdgeKind::dirichlet_full, EdgeKind::contact, -1, 0),
                      mat, LoadSpec{}});
  p.bodies.push_back({make_layer(1.0, EdgeKind::contact, EdgeKind::contact, 0, 1), mat,
                      LoadSpec{}});
  BodyMesh top_mesh = make_layer(2.0, EdgeKind::contact, EdgeKind::neumann, 1, -1);
  LoadSpec top_loads;
  for (size_t e = 0; e < top_mesh.boundary_edges.size(); ++e) {
    const auto& be = top_mesh.boundary_edges[e];
    const Vec2 mid = 0.5 * (top_mesh.nodes[size_t(be.a)] + top_mesh.nodes[size_t(be.b)]);
    if (be.kind == EdgeKind::neumann && mid.y() == 3.0) top_loads.tractions[int(e)] = Vec2(0, -10.0);
  }
  p.bodies.push_back({std::move(top_mesh), mat, std::move(top_loads)});

  for (int q = 0; q < 2; ++q) {
    ContactPairSpec pair;
    pair.body_a = q;
    pair.body_b = q + 1;
    pair.law = power_law(2.5e-5, 0.5);
    pair.gap.evaluator = [](const Vec2&) { return 0.0; };
    p.contact_pairs.push_back(std::move(pair));
  }

  AssembledProblem ap(p);
  SolverConfig newton_cfg;
  newton_cfg.eps_u = 1e-13;
  newton_cfg.max_iterations = 100;
  const auto [oracle, oracle_report] = monolithic_newton(ap, newton_cfg);
  REQUIRE(oracle_report.outcome == Outcome::converged);

  SolverConfig ddm_cfg;
  ddm_cfg.gamma_schedule = {0.6};
  ddm_cfg.eps_u = 1e-12;
  ddm_cfg.max_iterations = 20000;
  const auto [state, report] = ddm_solve(ap, ddm_cfg);
  REQUIRE(report.outcome == Outcome::converged);
  REQUIRE(report.history.front().rho.size() == 3);

  const auto oracle_traces = ap.contact_traces(oracle.u);
  const auto traces = ap.contact_traces(state.u);
  for (size_t b = 0; b < traces.size(); ++b) {
    const double scale = std::max(oracle_traces[b].lpNorm<Eigen::Infinity>(), 1e-300);
    REQUIRE((traces[b] - oracle_traces[b]).lpNorm<Eigen::Infinity>() / scale <= 1e-6);
  }

  // weightless stack: discrete equilibrium forces each interface to carry the
  // full load, so the tributary-weighted pressure integral is -q*l
  for (const auto& pair : ap.pairs()) {
    const Vec sigma =
        contact_pressure(pair, state.u[size_t(pair.body_a)], state.u[size_t(pair.body_b)]);
    double force = 0.0;
    for (size_t i = 0; i < pair.nodes.size(); ++i)
      force += pair.nodes[i].tributary * sigma[Eigen::Index(i)];
    REQUIRE(force == Approx(-20.0).epsilon(1e-6));
  }
  REQUIRE(check_complementarity(ap.pairs(), state.u).pass(10.0));
}

TEST_CASE("parallel and sequential body solves are bitwise identical") {
  const Problem p = generate_scenario(coarse_config(8, 4));
  AssembledProblem ap_par(p);
  AssembledProblem ap_seq(p);
  SolverState s_par = ap_par.initial_state(1e-4, PsiStrategy::active_set);
  SolverState s_seq = ap_seq.initial_state(1e-4, PsiStrategy::active_set);
  for (int k = 0; k < 5; ++k) {
    s_par = ap_par.ddm_step(s_par, 0.6, PsiStrategy::active_set, /*parallel=*/true);
    s_seq = ap_seq.ddm_step(s_seq, 0.6, PsiStrategy::active_set, /*parallel=*/false);
    for (size_t b = 0; b < s_par.u.size(); ++b)
      REQUIRE((s_par.u[b] - s_seq.u[b]).lpNorm<Eigen::Infinity>() == 0.0);
  }
}

TEST_CASE("abstract iteration on the scalar problem") {
  const double a = 4.0, g = 2.0, y = 8.0;
  const auto phi = [a](const Vec& u) { return Vec(a * u); };
  SpMat g_mat(1, 1);
  g_mat.insert(0, 0) = g;
  const auto g_form = [&g_mat](int) { return g_mat; };
  Vec u0(1);
  u0[0] = 7.0;

  SECTION("gamma = g/a solves in one step") {
    const auto res = abstract_iterate(phi, Vec::Constant(1, y), g_form, {g / a}, u0, 1e-14, 10);
    REQUIRE(res.iterates.size() >= 2);
    REQUIRE(res.iterates[1][0] == Approx(y / a).epsilon(1e-15));
    REQUIRE(res.converged);
  }
  SECTION("convergence inside the window, divergence outside") {
    for (double ratio : {0.1, 0.9, 1.5, 1.9}) {
      const auto res =
          abstract_iterate(phi, Vec::Constant(1, y), g_form, {ratio * g / a}, u0, 1e-10, 5000);
      REQUIRE(res.converged);
      REQUIRE(res.iterates.back()[0] == Approx(y / a).epsilon(1e-6));
    }
    const auto res =
        abstract_iterate(phi, Vec::Constant(1, y), g_form, {2.2 * g / a}, u0, 1e-10, 5000);
    REQUIRE_FALSE(res.converged);
    REQUIRE(res.diverged);
  }
  SECTION("starting at the exact solution keeps the sequence constant") {
    Vec exact(1);
    exact[0] = y / a;
    const auto res = abstract_iterate(phi, Vec::Constant(1, y), g_form, {0.7}, exact, 1e-14, 5);
    REQUIRE(res.converged);
    REQUIRE(res.iterates[1][0] == exact[0]);
  }
  SECTION("non-SPD forms are rejected") {
    SpMat bad(1, 1);
    bad.insert(0, 0) = -1.0;
    const auto bad_form = [&bad](int) { return bad; };
    REQUIRE_THROWS_AS(abstract_iterate(phi, Vec::Constant(1, y), bad_form, {0.5}, u0, 1e-10, 5),
                      SolveError);
  }
}

TEST_CASE("abstract iteration with G = Phi solves a linear SPD problem in one step") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXd m(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) m(i, j) = dist(rng);
  const Eigen::MatrixXd a_dense = m.transpose() * m + Eigen::MatrixXd::Identity(5, 5);
  SpMat a = a_dense.sparseView();
  const auto phi = [&a](const Vec& u) { return Vec(a * u); };
  const auto g_form = [&a](int) { return a; };
  Vec y(5), u0(5);
  for (int i = 0; i < 5; ++i) {
    y[i] = dist(rng);
    u0[i] = dist(rng);
  }
  const auto res = abstract_iterate(phi, y, g_form, {1.0}, u0, 1e-12, 10);
  const Vec exact = SpdSolver::factorize(a).solve(y);
  REQUIRE((res.iterates[1] - exact).norm() <= 1e-9 * exact.norm());
}

TEST_CASE("theorem-3 estimates") {
  SECTION("scalar case is exact") {
    const double a = 4.0, g = 2.0;
    const auto phi = [a](const Vec& u) { return Vec(a * u); };
    SpMat g_mat(1, 1);
    g_mat.insert(0, 0) = g;
    const auto est = estimate_theorem3(phi, g_mat, 1, 8, 1.0, 5);
    REQUIRE(est.d_phi == Approx(a).epsilon(1e-12));
    REQUIRE(est.b_phi == Approx(a).epsilon(1e-12));
    REQUIRE(est.b_g == Approx(g).epsilon(1e-12));
    REQUIRE(est.m_g == Approx(g).epsilon(1e-12));
    REQUIRE(est.gamma_star == Approx(g / a).epsilon(1e-12));
    REQUIRE(est.coercive);
  }
  SECTION("single probe gives that probe's quotients (scalar)") {
    const double a = 3.0, g = 5.0;
    const auto phi = [a](const Vec& u) { return Vec(a * u); };
    SpMat g_mat(1, 1);
    g_mat.insert(0, 0) = g;
    const auto est = estimate_theorem3(phi, g_mat, 1, 1, 1.0, 9);
    REQUIRE(est.d_phi == Approx(a).epsilon(1e-12));
    REQUIRE(est.b_phi == Approx(a).epsilon(1e-12));
    REQUIRE(est.b_g == Approx(g).epsilon(1e-12));
  }
  SECTION("SPD matrix bounds the window from below") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd m(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = dist(rng);
    const Eigen::MatrixXd a_dense = m.transpose() * m + Eigen::MatrixXd::Identity(6, 6);
    SpMat a = a_dense.sparseView();
    const auto phi = [&a](const Vec& u) { return Vec(a * u); };
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a_dense);
    const double lmin = eig.eigenvalues().minCoeff();
    const double lmax = eig.eigenvalues().maxCoeff();
    const auto est = estimate_theorem3(phi, a, 6, 50, 1.0, 11);
    REQUIRE(est.b_phi >= lmin - 1e-10);
    REQUIRE(est.d_phi <= lmax + 1e-10);
    REQUIRE(est.gamma_star >= lmin * lmin / (lmax * lmax) - 1e-10);
    REQUIRE(est.coercive);
  }
  SECTION("contact Phi keeps the stiffness coercivity floor") {
    const Problem p = generate_scenario(coarse_config(8, 4));
    AssembledProblem ap(p);
    const auto phi = [&ap](const Vec& x) { return ap.phi_global(x); };
    const SpMat k = ap.global_stiffness();
    const Eigen::MatrixXd k_dense(k);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(k_dense);
    const double lmin = eig.eigenvalues().minCoeff();
    const auto est = estimate_theorem3(phi, k, ap.n_global(), 20, 1e-4, 13);
    REQUIRE(est.coercive);
    REQUIRE(est.b_phi >= lmin - 1e-10 * std::abs(lmin));
  }
  SECTION("invalid probe counts are rejected") {
    const auto phi = [](const Vec& u) { return u; };
    SpMat g_mat(1, 1);
    g_mat.insert(0, 0) = 1.0;
    REQUIRE_THROWS_AS(estimate_theorem3(phi, g_mat, 1, 0), ConfigError);
  }
}

TEST_CASE("scalar gamma window check") {
  const CheckResult r = check_scalar_gamma_window(coarse_config(4, 2));
  INFO(r.note);
  REQUIRE(r.pass);
}
