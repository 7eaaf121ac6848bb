#pragma once

// The two-body groove scenario: a lower body [0,l]x[0,h] clamped at the
// bottom and an upper body [0,l]x[h,2h] loaded by a normal traction q on top,
// in unilateral contact through a nonlinear power-law Winkler layer across
// the interface x2 = h. The initial gap is a groove of depth r centered at
// x1 = l; the right edges x1 = l are rollers (u1 = 0), realizing the symmetry
// plane of a groove of half-width b. Structured crossed-diagonal meshing.

#include "wcontact/common.hpp"
#include "wcontact/dd_solver.hpp"
#include "wcontact/model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wcontact {

struct ScenarioConfig {
  double length = 4.0;  // l, cm
  double height = 1.0;  // h, cm (per body)
  int nx = 128;         // cells per body along x1
  int ny = 32;          // cells per body along x2
  double young = 2.1e5;    // E, MPa
  double poisson = 0.3;    // ν
  double load_q = 10.0;    // q, MPa, applied as (0, -q) on the top edge
  double layer_b = 2.5e-5; // B, cm/MPa^a
  double layer_a = 0.5;    // a in (0, 1]
  double gap_r = 5e-4;     // groove depth, cm
  double gap_width = 1.0;  // groove half-width b, cm
  SolverConfig solver;
  std::uint64_t seed = 1;
  std::string output_dir = "out";

  int elements_per_body() const { return 2 * nx * ny; }
  int contact_nodes() const { return nx + 1; }

  /// Exhaustive list of violations; empty means valid.
  std::vector<std::string> violations() const {
    std::vector<std::string> v;
    if (!(length > 0.0)) v.push_back(strfmt("geometry.l must be positive, got %g", length));
    if (!(height > 0.0)) v.push_back(strfmt("geometry.h must be positive, got %g", height));
    if (nx < 1) v.push_back(strfmt("mesh.nx must be >= 1, got %d", nx));
    if (ny < 1) v.push_back(strfmt("mesh.ny must be >= 1, got %d", ny));
    if (!(young > 0.0)) v.push_back(strfmt("material.E must be positive, got %g", young));
    if (!(poisson >= 0.0 && poisson < 0.5))
      v.push_back(strfmt("material.nu must lie in [0, 0.5), got %g", poisson));
    if (!std::isfinite(load_q)) v.push_back("load.q must be finite");
    if (!(layer_b > 0.0)) v.push_back(strfmt("layer.B must be positive, got %g", layer_b));
    if (!(layer_a > 0.0 && layer_a <= 1.0))
      v.push_back(strfmt("layer.a must lie in (0, 1], got %g", layer_a));
    if (!(gap_r >= 0.0)) v.push_back(strfmt("gap.r must be nonnegative, got %g", gap_r));
    if (!(gap_width > 0.0)) v.push_back(strfmt("gap.b must be positive, got %g", gap_width));
    if (solver.gamma_schedule.empty()) v.push_back("solver.gamma schedule is empty");
    for (double g : solver.gamma_schedule)
      if (!(g > 0.0 && g < 2.0)) v.push_back(strfmt("solver.gamma %g outside (0, 2)", g));
    if (!(solver.eps_u > 0.0)) v.push_back("solver.eps_u must be positive");
    if (solver.max_iterations < 1) v.push_back("solver.max_iterations must be >= 1");
    return v;
  }

  void validate() const {
    const auto v = violations();
    if (v.empty()) return;
    std::string all;
    for (const auto& s : v) {
      if (!all.empty()) all += "; ";
      all += s;
    }
    throw ConfigError(all);
  }
};

namespace detail {

/// Structured crossed-diagonal rectangle mesh on [0,lx] x [y0, y0+ly] with
/// nx x ny cells; the diagonal direction alternates with cell parity.
inline BodyMesh structured_rectangle(double lx, double y0, double ly, int nx, int ny) {
  BodyMesh mesh;
  const auto node = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j <= ny; ++j)
    for (int i = 0; i <= nx; ++i)
      mesh.nodes.emplace_back(lx * double(i) / nx, y0 + ly * double(j) / ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int n00 = node(i, j), n10 = node(i + 1, j);
      const int n01 = node(i, j + 1), n11 = node(i + 1, j + 1);
      if ((i + j) % 2 == 0) {
        mesh.triangles.push_back({n00, n10, n11});
        mesh.triangles.push_back({n00, n11, n01});
      } else {
        mesh.triangles.push_back({n00, n10, n01});
        mesh.triangles.push_back({n10, n11, n01});
      }
    }
  }
  return mesh;
}

}  // namespace detail

/// Boundary edge indices of one rectangle side, for tagging and loads.
struct RectangleSides {
  std::vector<int> bottom, right, top, left;  // indices into boundary_edges
};

inline RectangleSides tag_rectangle_boundary(BodyMesh& mesh, int nx, int ny,
                                             EdgeKind bottom, EdgeKind right, EdgeKind top,
                                             EdgeKind left, int contact_pair_id = -1) {
  RectangleSides sides;
  const auto node = [nx](int i, int j) { return j * (nx + 1) + i; };
  const auto add = [&](int a, int b, EdgeKind kind, std::vector<int>& list) {
    BoundaryEdge be;
    be.a = a;
    be.b = b;
    be.kind = kind;
    if (kind == EdgeKind::contact) be.pair_id = contact_pair_id;
    list.push_back(int(mesh.boundary_edges.size()));
    mesh.boundary_edges.push_back(be);
  };
  for (int i = 0; i < nx; ++i) add(node(i, 0), node(i + 1, 0), bottom, sides.bottom);
  for (int j = 0; j < ny; ++j) add(node(nx, j), node(nx, j + 1), right, sides.right);
  for (int i = 0; i < nx; ++i) add(node(i, ny), node(i + 1, ny), top, sides.top);
  for (int j = 0; j < ny; ++j) add(node(0, j), node(0, j + 1), left, sides.left);
  return sides;
}

/// Builds the two-body groove problem from a validated configuration.
inline Problem generate_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  Problem problem;
  const IsotropicMaterial mat(cfg.young, cfg.poisson);

  // lower body: clamped bottom, roller right, contact on top
  BodyMesh lower = detail::structured_rectangle(cfg.length, 0.0, cfg.height, cfg.nx, cfg.ny);
  tag_rectangle_boundary(lower, cfg.nx, cfg.ny, EdgeKind::dirichlet_full,
                         EdgeKind::dirichlet_normal, EdgeKind::contact, EdgeKind::neumann,
                         /*contact_pair_id=*/0);
  problem.bodies.push_back({std::move(lower), mat, LoadSpec{}});

  // upper body: contact on bottom, roller right, loaded top
  BodyMesh upper =
      detail::structured_rectangle(cfg.length, cfg.height, cfg.height, cfg.nx, cfg.ny);
  const RectangleSides upper_sides = tag_rectangle_boundary(
      upper, cfg.nx, cfg.ny, EdgeKind::contact, EdgeKind::dirichlet_normal, EdgeKind::neumann,
      EdgeKind::neumann, /*contact_pair_id=*/0);
  LoadSpec upper_loads;
  for (int e : upper_sides.top) upper_loads.tractions[e] = Vec2(0.0, -cfg.load_q);
  problem.bodies.push_back({std::move(upper), mat, std::move(upper_loads)});

  ContactPairSpec pair;
  pair.body_a = 0;
  pair.body_b = 1;
  pair.law = power_law(cfg.layer_b, cfg.layer_a);
  const double r = cfg.gap_r, b = cfg.gap_width, l = cfg.length;
  pair.gap.evaluator = [r, b, l](const Vec2& p) { return groove_gap(p.x(), r, b, l); };
  problem.contact_pairs.push_back(std::move(pair));

  problem.validate();
  return problem;
}

}  // namespace wcontact
