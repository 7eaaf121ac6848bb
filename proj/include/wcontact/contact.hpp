#pragma once

// Discrete coupling across contact pairs: node-to-node pairing on matching
// meshes, gap state (t, χ, ψ, g⁻, g'), lumped Robin matrix and contact
// right-hand sides, contact pressures, the gradient of the layer energy J and
// a posteriori complementarity checks.

#include "wcontact/common.hpp"
#include "wcontact/fem2d.hpp"
#include "wcontact/model.hpp"

#include <cstdint>
#include <vector>

namespace wcontact {

struct PairedNode {
  int node_a = -1;         // node id on body_a's contact segment
  int node_b = -1;         // node id on body_b's segment at the same x1
  double x1 = 0.0;         // running coordinate, cm
  double tributary = 0.0;  // trapezoid weight, cm (identical on both sides)
  double gap = 0.0;        // initial gap d, cm
};

struct ContactPair {
  int body_a = -1;
  int body_b = -1;
  Vec2 normal_a;  // outward unit normal of body_a's segment
  Vec2 normal_b;  // ≈ -normal_a
  std::vector<PairedNode> nodes;
  WinklerLaw law;
};

enum class Side { a, b };
enum class PsiStrategy { neumann, full_robin, active_set };

inline const char* to_string(PsiStrategy s) {
  switch (s) {
    case PsiStrategy::neumann: return "neumann";
    case PsiStrategy::full_robin: return "full_robin";
    case PsiStrategy::active_set: return "active_set";
  }
  return "?";
}

/// Node-to-node pairing of the two tagged segments of a contact pair.
/// Requires matching discretizations (same node count, same x1 positions).
inline ContactPair build_pairing(const Problem& problem, int pair_index) {
  if (pair_index < 0 || pair_index >= int(problem.contact_pairs.size()))
    throw ConfigError(strfmt("build_pairing: no contact pair %d", pair_index));
  const auto& spec = problem.contact_pairs[size_t(pair_index)];
  const BodyMesh& mesh_a = problem.bodies[size_t(spec.body_a)].mesh;
  const BodyMesh& mesh_b = problem.bodies[size_t(spec.body_b)].mesh;
  const ContactSegment seg_a = extract_contact_segment(mesh_a, pair_index);
  const ContactSegment seg_b = extract_contact_segment(mesh_b, pair_index);

  if (seg_a.nodes.size() != seg_b.nodes.size())
    throw ConfigError(strfmt("build_pairing: segment node counts differ (%zu vs %zu)",
                             seg_a.nodes.size(), seg_b.nodes.size()));
  if ((seg_a.normal + seg_b.normal).norm() > 1e-12)
    throw ConfigError("build_pairing: segment normals are not opposite");

  ContactPair pair;
  pair.body_a = spec.body_a;
  pair.body_b = spec.body_b;
  pair.normal_a = seg_a.normal;
  pair.normal_b = seg_b.normal;
  pair.law = spec.law;
  pair.nodes.reserve(seg_a.nodes.size());
  const double scale = std::max(1.0, std::abs(seg_a.coord.back()));
  for (size_t i = 0; i < seg_a.nodes.size(); ++i) {
    if (std::abs(seg_a.coord[i] - seg_b.coord[i]) > 1e-12 * scale)
      throw ConfigError(strfmt("build_pairing: meshes do not match at x1 = %.17g vs %.17g",
                               seg_a.coord[i], seg_b.coord[i]));
    PairedNode pn;
    pn.node_a = seg_a.nodes[i];
    pn.node_b = seg_b.nodes[i];
    pn.x1 = seg_a.coord[i];
    pn.tributary = seg_a.tributary[i];
    pn.gap = spec.gap.evaluator(mesh_a.nodes[size_t(pn.node_a)]);
    if (!std::isfinite(pn.gap))
      throw ConfigError(strfmt("build_pairing: non-finite gap at x1 = %g", pn.x1));
    pair.nodes.push_back(pn);
  }
  return pair;
}

/// Per-node contact state at one iterate: t = d - u_an - u_bn, the active-set
/// indicator χ = [t < 0], the Robin indicator ψ per strategy, and the law
/// values g⁻(t), g'(t).
struct GapState {
  std::vector<double> t;
  std::vector<double> g_minus;
  std::vector<double> g_prime;
  std::vector<std::uint8_t> chi;
  std::vector<std::uint8_t> psi;

  int active_count() const {
    int n = 0;
    for (auto c : chi) n += c;
    return n;
  }
};

inline double normal_component(const Vec& u_full, int node, const Vec2& normal) {
  return normal.x() * u_full[2 * node] + normal.y() * u_full[2 * node + 1];
}

inline GapState gap_state(const ContactPair& pair, const Vec& u_a, const Vec& u_b,
                          PsiStrategy strategy) {
  GapState s;
  const size_t n = pair.nodes.size();
  s.t.resize(n);
  s.g_minus.resize(n);
  s.g_prime.resize(n);
  s.chi.resize(n);
  s.psi.resize(n);
  for (size_t i = 0; i < n; ++i) {
    const auto& pn = pair.nodes[i];
    const double uan = normal_component(u_a, pn.node_a, pair.normal_a);
    const double ubn = normal_component(u_b, pn.node_b, pair.normal_b);
    const double t = pn.gap - uan - ubn;
    s.t[i] = t;
    s.chi[i] = t < 0.0 ? 1 : 0;  // t = 0 counts as separated
    switch (strategy) {
      case PsiStrategy::neumann: s.psi[i] = 0; break;
      case PsiStrategy::full_robin: s.psi[i] = 1; break;
      case PsiStrategy::active_set: s.psi[i] = s.chi[i]; break;
    }
    s.g_minus[i] = eval_g_minus(pair.law, t);
    s.g_prime[i] = pair.law.derivative(t);
    if (s.g_prime[i] < 0.0)
      throw ConfigError(strfmt("gap_state: law derivative is negative (%g) at t = %g",
                               s.g_prime[i], t));
  }
  return s;
}

/// Lumped Robin matrix addend for one side: the normal dof of each paired node
/// gains ψ·g'(t)·tributary. Diagonal and PSD by construction.
inline SpMat assemble_robin(const ContactPair& pair, const GapState& state, Side side,
                            const DofMap& dofs) {
  const Vec2 normal = side == Side::a ? pair.normal_a : pair.normal_b;
  std::vector<Triplet> trips;
  for (size_t i = 0; i < pair.nodes.size(); ++i) {
    if (!state.psi[i]) continue;
    const double c = state.g_prime[i] * pair.nodes[i].tributary;
    if (c == 0.0) continue;
    const int node = side == Side::a ? pair.nodes[i].node_a : pair.nodes[i].node_b;
    for (int ci = 0; ci < 2; ++ci)
      for (int cj = 0; cj < 2; ++cj) {
        const double v = c * normal[ci] * normal[cj];
        if (v != 0.0) trips.emplace_back(dofs.dof(node, ci), dofs.dof(node, cj), v);
      }
  }
  SpMat x(dofs.n_full(), dofs.n_full());
  x.setFromTriplets(trips.begin(), trips.end());
  return x;
}

/// Contact right-hand side for one side: per paired node the normal dof gains
/// [ψ·g'(t)·u_{side,n} + g⁻(t)]·tributary, where u_side is the side's current
/// iterate (the traces the Robin term was linearized around).
inline Vec assemble_contact_rhs(const ContactPair& pair, const GapState& state,
                                const Vec& u_side, Side side, const DofMap& dofs) {
  const Vec2 normal = side == Side::a ? pair.normal_a : pair.normal_b;
  Vec rhs = Vec::Zero(dofs.n_full());
  for (size_t i = 0; i < pair.nodes.size(); ++i) {
    const auto& pn = pair.nodes[i];
    const int node = side == Side::a ? pn.node_a : pn.node_b;
    const double un = normal_component(u_side, node, normal);
    const double value =
        (state.psi[i] ? state.g_prime[i] * un : 0.0) + state.g_minus[i];
    for (int c = 0; c < 2; ++c) rhs[dofs.dof(node, c)] += value * pn.tributary * normal[c];
  }
  return rhs;
}

/// Normal contact stress σ_n = g⁻(d - u_an - u_bn) per paired node; the same
/// value is attributed to both sides.
inline Vec contact_pressure(const ContactPair& pair, const Vec& u_a, const Vec& u_b) {
  Vec sigma(pair.nodes.size());
  for (size_t i = 0; i < pair.nodes.size(); ++i) {
    const auto& pn = pair.nodes[i];
    const double uan = normal_component(u_a, pn.node_a, pair.normal_a);
    const double ubn = normal_component(u_b, pn.node_b, pair.normal_b);
    sigma[Eigen::Index(i)] = eval_g_minus(pair.law, pn.gap - uan - ubn);
  }
  return sigma;
}

/// Gradient of the discrete layer energy J(u) = Σ tributary·∫_0^t g⁻, as one
/// full-dof vector per body. Each paired node contributes -tributary·g⁻(t)
/// along the side's outward normal.
inline std::vector<Vec> grad_j(const std::vector<ContactPair>& pairs,
                               const std::vector<Vec>& fields) {
  std::vector<Vec> grad(fields.size());
  for (size_t b = 0; b < fields.size(); ++b) grad[b] = Vec::Zero(fields[b].size());
  for (const auto& pair : pairs) {
    const Vec& u_a = fields[size_t(pair.body_a)];
    const Vec& u_b = fields[size_t(pair.body_b)];
    for (const auto& pn : pair.nodes) {
      const double uan = normal_component(u_a, pn.node_a, pair.normal_a);
      const double ubn = normal_component(u_b, pn.node_b, pair.normal_b);
      const double gm = eval_g_minus(pair.law, pn.gap - uan - ubn);
      if (gm == 0.0) continue;
      for (int c = 0; c < 2; ++c) {
        grad[size_t(pair.body_a)][2 * pn.node_a + c] -= pn.tributary * gm * pair.normal_a[c];
        grad[size_t(pair.body_b)][2 * pn.node_b + c] -= pn.tributary * gm * pair.normal_b[c];
      }
    }
  }
  return grad;
}

/// Discrete layer energy J(u) ≥ 0. Uses the law's closed-form antiderivative
/// when present, adaptive quadrature of g⁻ otherwise.
inline double layer_energy(const std::vector<ContactPair>& pairs,
                           const std::vector<Vec>& fields) {
  double j = 0.0;
  for (const auto& pair : pairs) {
    const Vec& u_a = fields[size_t(pair.body_a)];
    const Vec& u_b = fields[size_t(pair.body_b)];
    for (const auto& pn : pair.nodes) {
      const double uan = normal_component(u_a, pn.node_a, pair.normal_a);
      const double ubn = normal_component(u_b, pn.node_b, pair.normal_b);
      const double t = pn.gap - uan - ubn;
      if (t >= 0.0) continue;
      double inner;
      if (pair.law.g_minus_primitive) {
        inner = pair.law.g_minus_primitive(t);
      } else {
        const auto& law = pair.law;
        inner = integrate([&law](double z) { return eval_g_minus(law, z); }, 0.0, t);
      }
      j += pn.tributary * inner;
    }
  }
  return j;
}

/// Total energy F1(u) = Σ_α [½ u'K u - l'u] + J(u). Assembles fresh; solvers
/// keep their own cached assemblies for per-iteration reporting.
inline double total_energy(const Problem& problem, const std::vector<Vec>& fields) {
  if (fields.size() != problem.bodies.size())
    throw ConfigError("total_energy: one displacement field per body required");
  double f1 = 0.0;
  for (size_t b = 0; b < problem.bodies.size(); ++b) {
    const auto& body = problem.bodies[b];
    const DofMap dofs = DofMap::build(body.mesh);
    const SpMat k = assemble_stiffness(body.mesh, body.material, dofs);
    const Vec l = assemble_load(body.mesh, body.loads, dofs);
    f1 += 0.5 * fields[b].dot(k * fields[b]) - l.dot(fields[b]);
  }
  std::vector<ContactPair> pairs;
  for (int q = 0; q < int(problem.contact_pairs.size()); ++q)
    pairs.push_back(build_pairing(problem, q));
  return f1 + layer_energy(pairs, fields);
}

/// A posteriori check of the pointwise contact conditions with the layer
/// compression recovered as w = min(t, 0): σ_n = g(w) ≤ 0, no residual
/// penetration beyond w, and vanishing gap-pressure product.
struct ComplementarityReport {
  double max_sigma = 0.0;              // most positive σ_n (must be ≤ tiny)
  double max_penetration = 0.0;        // max of u_an + u_bn + w - d
  double max_product = 0.0;            // max |(u_an + u_bn + w - d)·σ_n|
  double max_law_mismatch = 0.0;       // max |g(w) - g⁻(t)|
  bool pass(double q_scale, double tol_pen = 1e-10, double tol_prod_rel = 1e-8) const {
    return max_sigma <= 1e-12 * std::max(1.0, q_scale) && max_penetration <= tol_pen &&
           max_product <= tol_prod_rel * std::max(q_scale, 1e-300) &&
           max_law_mismatch <= 1e-12 * std::max(1.0, q_scale);
  }
};

inline ComplementarityReport check_complementarity(const std::vector<ContactPair>& pairs,
                                                   const std::vector<Vec>& fields) {
  ComplementarityReport rep;
  rep.max_sigma = -1e300;
  for (const auto& pair : pairs) {
    const Vec& u_a = fields[size_t(pair.body_a)];
    const Vec& u_b = fields[size_t(pair.body_b)];
    for (const auto& pn : pair.nodes) {
      const double uan = normal_component(u_a, pn.node_a, pair.normal_a);
      const double ubn = normal_component(u_b, pn.node_b, pair.normal_b);
      const double t = pn.gap - uan - ubn;
      const double w = std::min(t, 0.0);
      const double sigma = pair.law.response(w);
      rep.max_sigma = std::max(rep.max_sigma, sigma);
      rep.max_penetration = std::max(rep.max_penetration, uan + ubn + w - pn.gap);
      rep.max_product = std::max(rep.max_product, std::abs((uan + ubn + w - pn.gap) * sigma));
      rep.max_law_mismatch =
          std::max(rep.max_law_mismatch, std::abs(sigma - eval_g_minus(pair.law, t)));
    }
  }
  return rep;
}

}  // namespace wcontact
