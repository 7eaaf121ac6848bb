#pragma once

// Problem definition: geometry, materials, loads, nonlinear Winkler laws and
// initial gaps. Units are cm for lengths and MPa for stresses throughout; a
// force then carries MPa·cm and an energy MPa·cm².

#include "wcontact/common.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace wcontact {

struct IsotropicMaterial {
  double young_modulus;  // E > 0, MPa
  double poisson_ratio;  // ν in [0, 0.5)

  IsotropicMaterial(double young, double poisson)
      : young_modulus(young), poisson_ratio(poisson) {
    if (!std::isfinite(young) || !(young > 0.0))
      throw ConfigError(strfmt("young_modulus must be positive and finite, got %g", young));
    if (!std::isfinite(poisson) || !(poisson >= 0.0) || !(poisson < 0.5))
      throw ConfigError(strfmt("poisson_ratio must lie in [0, 0.5), got %g", poisson));
  }
};

/// Plane-strain stress-strain matrix in Voigt order (σ11, σ22, σ12) vs (ε11, ε22, γ12).
inline Mat3 plane_strain_matrix(const IsotropicMaterial& mat) {
  const double e = mat.young_modulus;
  const double nu = mat.poisson_ratio;
  const double c = e / ((1.0 + nu) * (1.0 - 2.0 * nu));
  Mat3 d;
  d << c * (1.0 - nu), c * nu, 0.0,
       c * nu, c * (1.0 - nu), 0.0,
       0.0, 0.0, c * (1.0 - 2.0 * nu) / 2.0;
  return d;
}

/// Pointwise normal response of a nonlinear Winkler layer. The response g maps
/// layer compression (cm) to normal stress (MPa), with g(0) = 0 and g strictly
/// increasing. g_minus_primitive, when set, is the closed form of z ↦ ∫_0^z g⁻(s) ds.
struct WinklerLaw {
  std::function<double(double)> response;    // g
  std::function<double(double)> derivative;  // g'
  std::optional<double> lipschitz_bound;     // M, MPa/cm, valid on a declared interval only
  std::function<double(double)> g_minus_primitive;
};

/// Truncated response g⁻(z) = 0 for z ≥ 0, g(z) otherwise; never positive.
inline double eval_g_minus(const WinklerLaw& law, double z) {
  return z >= 0.0 ? 0.0 : law.response(z);
}

/// g(w) = B^{-1/a} sgn(w) |w|^{1/a}. B is the layer compliance in cm/MPa^a,
/// a ∈ (0,1] the exponent; a = 1 is the linear layer with stiffness 1/B.
inline WinklerLaw power_law(double compliance_b, double exponent_a) {
  if (!std::isfinite(compliance_b) || !(compliance_b > 0.0))
    throw ConfigError(strfmt("power_law: compliance B must be positive, got %g", compliance_b));
  if (!std::isfinite(exponent_a) || !(exponent_a > 0.0) || !(exponent_a <= 1.0))
    throw ConfigError(strfmt("power_law: exponent a must lie in (0, 1], got %g", exponent_a));

  const double p = 1.0 / exponent_a;
  const double scale = std::pow(compliance_b, -p);

  WinklerLaw law;
  law.response = [scale, p](double w) {
    if (w == 0.0) return 0.0;
    return (w > 0.0 ? scale : -scale) * std::pow(std::abs(w), p);
  };
  law.derivative = [scale, p](double w) {
    if (p == 1.0) return scale;           // linear layer, g' ≡ 1/B
    if (w == 0.0) return 0.0;             // a < 1: derivative vanishes at the origin
    return scale * p * std::pow(std::abs(w), p - 1.0);
  };
  law.g_minus_primitive = [scale, p](double z) {
    if (z >= 0.0) return 0.0;
    return scale * std::pow(-z, p + 1.0) / (p + 1.0);
  };
  if (exponent_a == 1.0) law.lipschitz_bound = scale;  // globally Lipschitz only when linear
  return law;
}

/// Groove-shaped initial gap r·{[1-(x1-l)²/b²]⁺}^{3/2}. C¹ at the
/// support boundary |x1-l| = b because of the 3/2 exponent.
inline double groove_gap(double x1, double depth_r, double half_width_b, double length_l) {
  if (!(half_width_b > 0.0))
    throw ConfigError(strfmt("groove_gap: half width b must be positive, got %g", half_width_b));
  const double s = (x1 - length_l) / half_width_b;
  const double arg = std::max(0.0, 1.0 - s * s);
  return depth_r * std::pow(arg, 1.5);
}

struct LawValidation {
  bool monotone = true;
  double first_violation_at = std::numeric_limits<double>::quiet_NaN();
  double empirical_lipschitz = 0.0;  // max sampled difference quotient
  bool exceeds_declared_bound = false;
};

/// Samples strict monotonicity and the maximal difference quotient of a law on
/// [w_min, w_max]. Violations are flagged in the report, never thrown.
inline LawValidation validate_law(const WinklerLaw& law, double w_min, double w_max,
                                  int n_samples) {
  if (!(w_min < w_max))
    throw ConfigError(strfmt("validate_law: need w_min < w_max, got [%g, %g]", w_min, w_max));
  if (n_samples < 2) throw ConfigError("validate_law: need at least 2 samples");

  LawValidation report;
  double prev_w = w_min;
  double prev_g = law.response(w_min);
  for (int i = 1; i < n_samples; ++i) {
    const double w = w_min + (w_max - w_min) * double(i) / double(n_samples - 1);
    const double g = law.response(w);
    if (!(g > prev_g) && report.monotone) {
      report.monotone = false;
      report.first_violation_at = w;
    }
    report.empirical_lipschitz =
        std::max(report.empirical_lipschitz, std::abs(g - prev_g) / (w - prev_w));
    prev_w = w;
    prev_g = g;
  }
  if (law.lipschitz_bound &&
      report.empirical_lipschitz > *law.lipschitz_bound * (1.0 + 1e-12))
    report.exceeds_declared_bound = true;
  return report;
}

enum class EdgeKind { dirichlet_full, dirichlet_normal, neumann, contact };

struct BoundaryEdge {
  int a = -1;
  int b = -1;
  EdgeKind kind = EdgeKind::neumann;
  int pair_id = -1;  // index into Problem::contact_pairs, contact edges only
};

struct BodyMesh {
  std::vector<Vec2> nodes;                       // cm
  std::vector<std::array<int, 3>> triangles;     // CCW
  std::vector<BoundaryEdge> boundary_edges;

  double signed_area(int e) const {
    const auto& t = triangles[size_t(e)];
    const Vec2 d1 = nodes[size_t(t[1])] - nodes[size_t(t[0])];
    const Vec2 d2 = nodes[size_t(t[2])] - nodes[size_t(t[0])];
    return 0.5 * (d1.x() * d2.y() - d1.y() * d2.x());
  }

  void validate() const {
    const int n = int(nodes.size());
    if (n < 3) throw ConfigError("mesh: fewer than 3 nodes");
    for (const auto& p : nodes)
      if (!p.allFinite()) throw ConfigError("mesh: non-finite node coordinate");
    if (triangles.empty()) throw ConfigError("mesh: no triangles");
    for (size_t e = 0; e < triangles.size(); ++e) {
      for (int k = 0; k < 3; ++k)
        if (triangles[e][size_t(k)] < 0 || triangles[e][size_t(k)] >= n)
          throw ConfigError(strfmt("mesh: triangle %zu references invalid node", e));
      const double area = signed_area(int(e));
      if (!(area > 0.0))
        throw ConfigError(strfmt(
            "mesh: triangle %zu is degenerate or negatively oriented (signed area %g)", e, area));
    }
    std::set<std::pair<int, int>> seen;
    bool has_dirichlet = false;
    for (const auto& be : boundary_edges) {
      if (be.a < 0 || be.a >= n || be.b < 0 || be.b >= n || be.a == be.b)
        throw ConfigError("mesh: boundary edge references invalid nodes");
      const auto key = std::minmax(be.a, be.b);
      if (!seen.insert(key).second)
        throw ConfigError(strfmt("mesh: boundary edge (%d,%d) tagged more than once",
                                 key.first, key.second));
      if (be.kind == EdgeKind::dirichlet_full || be.kind == EdgeKind::dirichlet_normal)
        has_dirichlet = true;
      if (be.kind == EdgeKind::contact && be.pair_id < 0)
        throw ConfigError("mesh: contact edge without pair id");
    }
    if (!has_dirichlet)
      throw ConfigError("mesh: body has no Dirichlet-tagged edge");
  }
};

struct LoadSpec {
  std::function<Vec2(const Vec2&)> body_force;  // f, MPa/cm; empty means zero
  std::map<int, Vec2> tractions;                // boundary-edge index -> p, MPa

  void validate(const BodyMesh& mesh) const {
    for (const auto& [edge, p] : tractions) {
      if (edge < 0 || edge >= int(mesh.boundary_edges.size()))
        throw ConfigError(strfmt("loads: traction on unknown boundary edge %d", edge));
      if (!p.allFinite()) throw ConfigError("loads: non-finite traction");
      if (mesh.boundary_edges[size_t(edge)].kind != EdgeKind::neumann)
        throw ConfigError(strfmt("loads: traction on non-neumann edge %d", edge));
    }
  }
};

/// Initial distance between two bodies, evaluated at boundary points of the
/// contact segment. Negative gaps (initial overlap) are accepted but untested.
struct GapFunction {
  std::function<double(const Vec2&)> evaluator;  // cm
};

struct Body {
  BodyMesh mesh;
  IsotropicMaterial material;
  LoadSpec loads;
};

struct ContactPairSpec {
  int body_a = -1;  // α < β
  int body_b = -1;
  WinklerLaw law;
  GapFunction gap;
};

struct Problem {
  std::vector<Body> bodies;
  std::vector<ContactPairSpec> contact_pairs;

  void validate() const {
    if (bodies.empty()) throw ConfigError("problem: no bodies");
    const int n = int(bodies.size());
    for (int b = 0; b < n; ++b) {
      bodies[size_t(b)].mesh.validate();
      bodies[size_t(b)].loads.validate(bodies[size_t(b)].mesh);
    }
    std::set<std::pair<int, int>> index_set;
    for (size_t q = 0; q < contact_pairs.size(); ++q) {
      const auto& pair = contact_pairs[q];
      if (pair.body_a < 0 || pair.body_b >= n || pair.body_a >= pair.body_b)
        throw ConfigError(strfmt("problem: contact pair %zu has invalid body indices", q));
      if (!index_set.insert({pair.body_a, pair.body_b}).second)
        throw ConfigError(strfmt("problem: duplicate contact pair {%d,%d}",
                                 pair.body_a, pair.body_b));
      if (!pair.law.response || !pair.law.derivative)
        throw ConfigError(strfmt("problem: contact pair %zu has an incomplete Winkler law", q));
      if (!pair.gap.evaluator)
        throw ConfigError(strfmt("problem: contact pair %zu has no gap function", q));
    }
    // every contact tag must be claimed by exactly the pair it names
    for (int b = 0; b < n; ++b) {
      for (const auto& be : bodies[size_t(b)].mesh.boundary_edges) {
        if (be.kind != EdgeKind::contact) continue;
        if (be.pair_id < 0 || be.pair_id >= int(contact_pairs.size()))
          throw ConfigError(strfmt("problem: body %d has contact tag %d without a pair",
                                   b, be.pair_id));
        const auto& pair = contact_pairs[size_t(be.pair_id)];
        if (pair.body_a != b && pair.body_b != b)
          throw ConfigError(strfmt("problem: body %d carries contact tag of pair %d "
                                   "it does not belong to", b, be.pair_id));
      }
    }
    for (size_t q = 0; q < contact_pairs.size(); ++q) {
      const auto count = [&](int body) {
        int c = 0;
        for (const auto& be : bodies[size_t(body)].mesh.boundary_edges)
          if (be.kind == EdgeKind::contact && be.pair_id == int(q)) ++c;
        return c;
      };
      if (count(contact_pairs[q].body_a) == 0 || count(contact_pairs[q].body_b) == 0)
        throw ConfigError(strfmt("problem: contact pair %zu has no tagged edges on "
                                 "one of its bodies", q));
    }
  }
};

}  // namespace wcontact
