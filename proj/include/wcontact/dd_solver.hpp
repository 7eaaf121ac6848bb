#pragma once

// Iterative engines for the multi-body Winkler contact problem:
//  - ddm_step / ddm_solve: the parallel Robin–Robin domain decomposition.
//    Each step solves, independently per body, (K_a + X_a^k) ũ = l_a + rhs_a^k
//    where X_a^k is the lumped Robin addend ψ·g'(t^k)·tributary on contact
//    normal dofs and rhs_a^k carries ψ·g'(t^k)·u_an^k + g⁻(t^k); the iterate
//    is then blended as u^{k+1} = γ^k ũ + (1-γ^k) u^k.
//  - monolithic_newton: the coupled semismooth-Newton reference solver with
//    the cross-body active-set coupling χ·g'(t^k)(u_an+u_bn)(v_an+v_bn).
//  - abstract_iterate: the generic nonstationary scheme
//    u^{k+1} = u^k - γ^k (G^k)⁻¹(Φ(u^k) - y); the two solvers above are
//    specializations of it.
//  - estimate_theorem3: sampled bounds (R_Φ, D_Φ, B_Φ, B_G*, M_G*) and the
//    implied admissible relaxation window (0, 2γ*), γ* = B_Φ B_G* / D_Φ².

#include "wcontact/common.hpp"
#include "wcontact/contact.hpp"
#include "wcontact/fem2d.hpp"
#include "wcontact/linsolve.hpp"
#include "wcontact/model.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wcontact {

struct SolverConfig {
  std::vector<double> gamma_schedule{0.6};  // γ^k = schedule[min(k, size-1)]
  PsiStrategy strategy = PsiStrategy::active_set;
  double eps_u = 1e-3;
  int max_iterations = 500;
  double divergence_guard = 10.0;  // ratio of min_a ρ_a to its running minimum
  int divergence_window = 20;      // consecutive offending iterations
  double initial_trace = 1e-4;     // cm, initial contact-node normal displacement
  bool parallel_bodies = true;

  double gamma(int k) const {
    return gamma_schedule[std::min(size_t(std::max(k, 0)), gamma_schedule.size() - 1)];
  }

  void validate() const {
    if (gamma_schedule.empty()) throw ConfigError("solver: empty gamma schedule");
    for (double g : gamma_schedule)
      if (!std::isfinite(g) || !(g > 0.0 && g < 2.0))
        throw ConfigError(strfmt("solver: gamma %g outside (0, 2)", g));
    if (!(eps_u > 0.0)) throw ConfigError("solver: eps_u must be positive");
    if (max_iterations < 1) throw ConfigError("solver: max_iterations must be >= 1");
    if (!(divergence_guard > 1.0)) throw ConfigError("solver: divergence_guard must exceed 1");
  }
};

enum class Outcome { converged, max_iterations, diverged };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::converged: return "converged";
    case Outcome::max_iterations: return "max_iterations";
    case Outcome::diverged: return "diverged";
  }
  return "?";
}

struct IterationRecord {
  int k = 0;                // 1-based iteration counter
  std::vector<double> rho;  // per body, contact-node trace change
  double energy = 0.0;      // F1(u^k), MPa·cm²
  int active_nodes = 0;     // |{χ = 1}| of the state the step linearized at
  double gamma = 0.0;
};

struct IterationReport {
  std::vector<IterationRecord> history;
  Outcome outcome = Outcome::max_iterations;
  std::string note;  // failure detail (solve failures surface body and iteration here)

  int iterations() const { return int(history.size()); }
};

struct SolverState {
  std::vector<Vec> u;          // full-dof nodal displacements per body
  std::vector<GapState> gaps;  // per pair, the state used by the producing step
  int k = 0;
};

/// Per-problem assembly cache: reduced stiffness and loads per body, contact
/// pairings, and the per-body factorization reused while the Robin diagonal
/// is unchanged. Mutable (caches); create one per concurrent solve. Holds a
/// reference to the problem, which must outlive it.
class AssembledProblem {
 public:
  explicit AssembledProblem(const Problem& problem, SpdSolver::Options lin_opts = {})
      : problem_(&problem), lin_opts_(lin_opts) {
    problem.validate();
    const int nb = int(problem.bodies.size());
    bodies_.resize(size_t(nb));
    for (int b = 0; b < nb; ++b) {
      auto& bd = bodies_[size_t(b)];
      const auto& body = problem.bodies[size_t(b)];
      bd.dofs = DofMap::build(body.mesh);
      const SpMat k_full = assemble_stiffness(body.mesh, body.material, bd.dofs);
      const Vec l_full = assemble_load(body.mesh, body.loads, bd.dofs);
      bd.k_free = reduce_matrix(bd.dofs, k_full);
      bd.l_free = reduce_vector(bd.dofs, l_full);
    }
    for (int q = 0; q < int(problem.contact_pairs.size()); ++q)
      pairs_.push_back(build_pairing(problem, q));
    for (size_t q = 0; q < pairs_.size(); ++q) {
      bodies_[size_t(pairs_[q].body_a)].segments.push_back({int(q), Side::a});
      bodies_[size_t(pairs_[q].body_b)].segments.push_back({int(q), Side::b});
    }
    offsets_.resize(size_t(nb) + 1, 0);
    for (int b = 0; b < nb; ++b)
      offsets_[size_t(b) + 1] = offsets_[size_t(b)] + bodies_[size_t(b)].dofs.n_free();
  }

  const Problem& problem() const { return *problem_; }
  int n_bodies() const { return int(bodies_.size()); }
  const DofMap& dofs(int b) const { return bodies_[size_t(b)].dofs; }
  const std::vector<ContactPair>& pairs() const { return pairs_; }
  bool has_contact(int b) const { return !bodies_[size_t(b)].segments.empty(); }
  const SpMat& stiffness(int b) const { return bodies_[size_t(b)].k_free; }
  const Vec& load(int b) const { return bodies_[size_t(b)].l_free; }

  /// Initial iterate: contact-node normal traces set to initial_trace, zero
  /// elsewhere; Dirichlet dofs stay zero.
  SolverState initial_state(double initial_trace, PsiStrategy strategy) const {
    SolverState s;
    s.k = 0;
    s.u.resize(bodies_.size());
    for (size_t b = 0; b < bodies_.size(); ++b)
      s.u[b] = Vec::Zero(bodies_[b].dofs.n_full());
    for (const auto& pair : pairs_) {
      for (const auto& pn : pair.nodes) {
        for (int c = 0; c < 2; ++c) {
          set_if_free(s.u[size_t(pair.body_a)], bodies_[size_t(pair.body_a)].dofs,
                      2 * pn.node_a + c, initial_trace * pair.normal_a[c]);
          set_if_free(s.u[size_t(pair.body_b)], bodies_[size_t(pair.body_b)].dofs,
                      2 * pn.node_b + c, initial_trace * pair.normal_b[c]);
        }
      }
    }
    s.gaps = gap_states(s.u, strategy);
    return s;
  }

  std::vector<GapState> gap_states(const std::vector<Vec>& fields, PsiStrategy strategy) const {
    std::vector<GapState> gs(pairs_.size());
    for (size_t q = 0; q < pairs_.size(); ++q)
      gs[q] = gap_state(pairs_[q], fields[size_t(pairs_[q].body_a)],
                        fields[size_t(pairs_[q].body_b)], strategy);
    return gs;
  }

  /// F1(u) from the cached assemblies.
  double energy(const std::vector<Vec>& fields) const {
    double f1 = 0.0;
    for (size_t b = 0; b < bodies_.size(); ++b) {
      const Vec uf = reduce_vector(bodies_[b].dofs, fields[b]);
      f1 += 0.5 * uf.dot(bodies_[b].k_free * uf) - bodies_[b].l_free.dot(uf);
    }
    return f1 + layer_energy(pairs_, fields);
  }

  /// Contact-node normal traces per body, concatenated over the body's pairs
  /// in pair order. Shared ordering for stopping tests and solver comparisons.
  std::vector<Vec> contact_traces(const std::vector<Vec>& fields) const {
    std::vector<Vec> traces(bodies_.size());
    for (size_t b = 0; b < bodies_.size(); ++b) {
      std::vector<double> vals;
      for (const auto& [q, side] : bodies_[b].segments) {
        const auto& pair = pairs_[size_t(q)];
        const Vec2 normal = side == Side::a ? pair.normal_a : pair.normal_b;
        for (const auto& pn : pair.nodes) {
          const int node = side == Side::a ? pn.node_a : pn.node_b;
          vals.push_back(normal_component(fields[b], node, normal));
        }
      }
      traces[b] = vals.empty() ? Vec(0) : Vec(Eigen::Map<Vec>(vals.data(), Eigen::Index(vals.size())));
    }
    return traces;
  }

  /// Relative change of contact traces per body (the stopping norm).
  /// An exactly zero new trace falls back to the absolute change.
  std::vector<double> contact_rho(const std::vector<Vec>& prev,
                                  const std::vector<Vec>& next) const {
    const auto tp = contact_traces(prev);
    const auto tn = contact_traces(next);
    std::vector<double> rho(bodies_.size(), 0.0);
    for (size_t b = 0; b < bodies_.size(); ++b) {
      if (tn[b].size() == 0) continue;
      const double num = (tn[b] - tp[b]).norm();
      const double den = tn[b].norm();
      rho[b] = den > 0.0 ? num / den : num;
    }
    return rho;
  }

  /// One Robin–Robin step at relaxation γ. The per-body solves are mutually
  /// independent; the gap-state build is the only cross-body synchronization.
  SolverState ddm_step(const SolverState& state, double gamma_k, PsiStrategy strategy,
                       bool parallel = true) {
    const auto gs = gap_states(state.u, strategy);
    SolverState next;
    next.k = state.k + 1;
    next.gaps = gs;
    next.u.resize(bodies_.size());

    auto solve_body = [&](int b) -> Vec {
      try {
        auto& bd = bodies_[size_t(b)];
        Vec robin = Vec::Zero(bd.dofs.n_free());
        Vec rhs_full = Vec::Zero(bd.dofs.n_full());
        for (const auto& [q, side] : bd.segments) {
          const auto& pair = pairs_[size_t(q)];
          const auto& s = gs[size_t(q)];
          accumulate_robin_diag(pair, s, side, bd.dofs, robin);
          rhs_full += assemble_contact_rhs(pair, s, state.u[size_t(b)], side, bd.dofs);
        }
        const Vec rhs = bd.l_free + reduce_vector(bd.dofs, rhs_full);
        refactorize_if_needed(bd, robin);
        const Vec u_tilde = bd.solver->solve(rhs);
        const Vec u_old = reduce_vector(bd.dofs, state.u[size_t(b)]);
        return expand_vector(bd.dofs, u_old + gamma_k * (u_tilde - u_old));
      } catch (const SolveError& e) {
        throw SolveError(strfmt("body %d, iteration %d: %s", b, state.k + 1, e.what()));
      }
    };

    if (parallel && bodies_.size() > 1) {
      std::vector<std::future<Vec>> futures;
      for (int b = 1; b < n_bodies(); ++b)
        futures.push_back(std::async(std::launch::async, solve_body, b));
      next.u[0] = solve_body(0);
      for (int b = 1; b < n_bodies(); ++b) next.u[size_t(b)] = futures[size_t(b - 1)].get();
    } else {
      for (int b = 0; b < n_bodies(); ++b) next.u[size_t(b)] = solve_body(b);
    }
    return next;
  }

  // ---- global (all-bodies) views, used by the Newton oracle and the
  // ---- abstract-iteration equivalence harness

  int n_global() const { return offsets_.back(); }
  int offset(int b) const { return offsets_[size_t(b)]; }

  const SpMat& global_stiffness() const {
    if (k_global_.rows() == 0) {
      std::vector<Triplet> trips;
      for (size_t b = 0; b < bodies_.size(); ++b) {
        const int off = offsets_[b];
        const SpMat& k = bodies_[b].k_free;
        for (int col = 0; col < k.outerSize(); ++col)
          for (SpMat::InnerIterator it(k, col); it; ++it)
            trips.emplace_back(int(it.row()) + off, int(it.col()) + off, it.value());
      }
      k_global_.resize(n_global(), n_global());
      k_global_.setFromTriplets(trips.begin(), trips.end());
      k_global_.makeCompressed();
    }
    return k_global_;
  }

  Vec global_load() const {
    Vec l(n_global());
    for (size_t b = 0; b < bodies_.size(); ++b)
      l.segment(offsets_[b], bodies_[b].dofs.n_free()) = bodies_[b].l_free;
    return l;
  }

  Vec pack(const std::vector<Vec>& fields) const {
    Vec x(n_global());
    for (size_t b = 0; b < bodies_.size(); ++b)
      x.segment(offsets_[b], bodies_[b].dofs.n_free()) =
          reduce_vector(bodies_[b].dofs, fields[b]);
    return x;
  }

  std::vector<Vec> unpack(const Vec& x) const {
    std::vector<Vec> fields(bodies_.size());
    for (size_t b = 0; b < bodies_.size(); ++b)
      fields[b] = expand_vector(bodies_[b].dofs,
                                x.segment(offsets_[b], bodies_[b].dofs.n_free()));
    return fields;
  }

  /// Φ(u) = K u + ∇J(u) on the packed free-dof space; Y = global_load().
  Vec phi_global(const Vec& x) const {
    const auto fields = unpack(x);
    const auto gj = grad_j(pairs_, fields);
    Vec out = global_stiffness() * x;
    for (size_t b = 0; b < bodies_.size(); ++b)
      out.segment(offsets_[b], bodies_[b].dofs.n_free()) +=
          reduce_vector(bodies_[b].dofs, gj[b]);
    return out;
  }

  /// Block-diagonal Robin matrix X^k of the current fields, packed globally.
  SpMat global_robin(const std::vector<Vec>& fields, PsiStrategy strategy) const {
    const auto gs = gap_states(fields, strategy);
    std::vector<Triplet> trips;
    for (size_t b = 0; b < bodies_.size(); ++b) {
      Vec robin = Vec::Zero(bodies_[b].dofs.n_free());
      for (const auto& [q, side] : bodies_[b].segments)
        accumulate_robin_diag(pairs_[size_t(q)], gs[size_t(q)], side, bodies_[b].dofs, robin);
      for (int i = 0; i < robin.size(); ++i)
        if (robin[i] != 0.0) trips.emplace_back(offsets_[b] + i, offsets_[b] + i, robin[i]);
    }
    SpMat x(n_global(), n_global());
    x.setFromTriplets(trips.begin(), trips.end());
    return x;
  }

  /// Cross-coupled second-subdifferential addend C^k: per active paired node,
  /// χ·g'(t)·tributary on the span of (v_an + v_bn).
  SpMat global_newton_coupling(const std::vector<GapState>& gs) const {
    std::vector<Triplet> trips;
    for (size_t q = 0; q < pairs_.size(); ++q) {
      const auto& pair = pairs_[q];
      const auto& s = gs[q];
      const auto& dofs_a = bodies_[size_t(pair.body_a)].dofs;
      const auto& dofs_b = bodies_[size_t(pair.body_b)].dofs;
      for (size_t i = 0; i < pair.nodes.size(); ++i) {
        if (!s.chi[i] || s.g_prime[i] == 0.0) continue;
        const double c = s.g_prime[i] * pair.nodes[i].tributary;
        // packed (global index, weight) entries of the functional v_an + v_bn
        std::vector<std::pair<int, double>> n_vec;
        for (int comp = 0; comp < 2; ++comp) {
          if (pair.normal_a[comp] != 0.0) {
            const int fi = dofs_a.free_index[size_t(2 * pair.nodes[i].node_a + comp)];
            if (fi >= 0)
              n_vec.emplace_back(offsets_[size_t(pair.body_a)] + fi, pair.normal_a[comp]);
          }
          if (pair.normal_b[comp] != 0.0) {
            const int fi = dofs_b.free_index[size_t(2 * pair.nodes[i].node_b + comp)];
            if (fi >= 0)
              n_vec.emplace_back(offsets_[size_t(pair.body_b)] + fi, pair.normal_b[comp]);
          }
        }
        for (const auto& [gi, wi] : n_vec)
          for (const auto& [gj, wj] : n_vec) trips.emplace_back(gi, gj, c * wi * wj);
      }
    }
    SpMat c(n_global(), n_global());
    c.setFromTriplets(trips.begin(), trips.end());
    return c;
  }

 private:
  struct BodyData {
    DofMap dofs;
    SpMat k_free;
    Vec l_free;
    std::vector<std::pair<int, Side>> segments;  // (pair index, side)
    Vec robin_diag;                              // diagonal of the factorized K + X
    std::optional<SpdSolver> solver;
  };

  static void set_if_free(Vec& u, const DofMap& dofs, int full_dof, double value) {
    if (dofs.free_index[size_t(full_dof)] >= 0) u[full_dof] = value;
  }

  /// Adds ψ·g'(t)·tributary to the free normal dofs (free-dof indexed diagonal).
  static void accumulate_robin_diag(const ContactPair& pair, const GapState& s, Side side,
                                    const DofMap& dofs, Vec& robin) {
    const Vec2 normal = side == Side::a ? pair.normal_a : pair.normal_b;
    for (size_t i = 0; i < pair.nodes.size(); ++i) {
      if (!s.psi[i] || s.g_prime[i] == 0.0) continue;
      const double c = s.g_prime[i] * pair.nodes[i].tributary;
      const int node = side == Side::a ? pair.nodes[i].node_a : pair.nodes[i].node_b;
      for (int comp = 0; comp < 2; ++comp) {
        if (normal[comp] == 0.0) continue;
        const int fi = dofs.free_index[size_t(2 * node + comp)];
        if (fi >= 0) robin[fi] += c * normal[comp] * normal[comp];
      }
    }
  }

  void refactorize_if_needed(BodyData& bd, const Vec& robin) {
    if (bd.solver && bd.robin_diag.size() == robin.size() &&
        (bd.robin_diag - robin).lpNorm<Eigen::Infinity>() <= 1e-14)
      return;
    SpMat a = bd.k_free;
    // contact normal dofs always carry a stiffness diagonal entry, so adding
    // the Robin diagonal never changes the sparsity pattern
    std::vector<Triplet> trips;
    for (int i = 0; i < robin.size(); ++i)
      if (robin[i] != 0.0) trips.emplace_back(i, i, robin[i]);
    SpMat x(bd.dofs.n_free(), bd.dofs.n_free());
    x.setFromTriplets(trips.begin(), trips.end());
    a += x;
    bd.solver = SpdSolver::factorize(a, lin_opts_);
    bd.robin_diag = robin;
  }

  const Problem* problem_;
  SpdSolver::Options lin_opts_;
  std::vector<BodyData> bodies_;
  std::vector<ContactPair> pairs_;
  std::vector<int> offsets_;
  mutable SpMat k_global_;
};

/// Free-function form of the Robin–Robin step.
inline SolverState ddm_step(AssembledProblem& ap, const SolverState& state, double gamma_k,
                            PsiStrategy strategy, bool parallel = true) {
  return ap.ddm_step(state, gamma_k, strategy, parallel);
}

namespace detail {

/// Shared iteration driver: stopping rule, divergence guard and reporting are
/// identical for the DDM and the Newton oracle.
template <typename StepFn>
std::pair<SolverState, IterationReport> iterate_to_convergence(AssembledProblem& ap,
                                                               const SolverConfig& cfg,
                                                               StepFn&& step) {
  SolverState state = ap.initial_state(cfg.initial_trace, cfg.strategy);
  IterationReport report;
  double running_min = std::numeric_limits<double>::infinity();
  int bad_streak = 0;
  double u_ref = std::max(std::abs(cfg.initial_trace), 1e-300);

  for (int k = 0; k < cfg.max_iterations; ++k) {
    const double gamma_k = cfg.gamma(k);
    SolverState next;
    try {
      next = step(state, gamma_k);
    } catch (const SolveError& e) {
      report.outcome = Outcome::diverged;
      report.note = e.what();
      return {std::move(state), std::move(report)};
    }
    const auto rho = ap.contact_rho(state.u, next.u);

    IterationRecord rec;
    rec.k = k + 1;
    rec.rho = rho;
    rec.energy = ap.energy(next.u);
    rec.active_nodes = 0;
    for (const auto& g : next.gaps) rec.active_nodes += g.active_count();
    rec.gamma = gamma_k;
    report.history.push_back(std::move(rec));
    state = std::move(next);

    double u_max = 0.0;
    for (const auto& u : state.u) u_max = std::max(u_max, u.lpNorm<Eigen::Infinity>());
    if (k == 0) u_ref = std::max(u_ref, u_max);
    if (u_max > 1e6 * u_ref) {
      report.outcome = Outcome::diverged;
      report.note = strfmt("field norm %g exceeds 1e6 x initial scale %g", u_max, u_ref);
      return {std::move(state), std::move(report)};
    }

    bool all_converged = true;
    double rho_min = std::numeric_limits<double>::infinity();
    for (size_t b = 0; b < rho.size(); ++b) {
      if (!ap.has_contact(int(b))) continue;  // bodies without contact do not vote
      all_converged = all_converged && rho[b] <= cfg.eps_u;
      rho_min = std::min(rho_min, rho[b]);
    }
    if (all_converged) {
      report.outcome = Outcome::converged;
      return {std::move(state), std::move(report)};
    }
    running_min = std::min(running_min, rho_min);
    if (rho_min > cfg.divergence_guard * running_min) {
      if (++bad_streak >= cfg.divergence_window) {
        report.outcome = Outcome::diverged;
        report.note = strfmt("rho stalled above %g x its running minimum %g for %d iterations",
                             cfg.divergence_guard, running_min, cfg.divergence_window);
        return {std::move(state), std::move(report)};
      }
    } else {
      bad_streak = 0;
    }
  }
  report.outcome = Outcome::max_iterations;
  return {std::move(state), std::move(report)};
}

}  // namespace detail

/// Parallel Robin–Robin solve. Stopping rule: every body's
/// contact-trace change must fall below eps_u simultaneously. Divergence is an
/// outcome, not an exception.
inline std::pair<SolverState, IterationReport> ddm_solve(AssembledProblem& ap,
                                                         const SolverConfig& cfg) {
  cfg.validate();
  return detail::iterate_to_convergence(
      ap, cfg, [&](const SolverState& s, double gamma_k) {
        return ap.ddm_step(s, gamma_k, cfg.strategy, cfg.parallel_bodies);
      });
}

inline std::pair<SolverState, IterationReport> ddm_solve(const Problem& problem,
                                                         const SolverConfig& cfg) {
  AssembledProblem ap(problem);
  return ddm_solve(ap, cfg);
}

/// Coupled semismooth-Newton solve (γ = 1): (K + C^k) u^{k+1} = l + C^k u^k - ∇J(u^k)
/// with the active-set coupling C^k. Reference oracle for the DDM family.
inline std::pair<SolverState, IterationReport> monolithic_newton(AssembledProblem& ap,
                                                                 const SolverConfig& cfg) {
  cfg.validate();
  const SpMat& k_glob = ap.global_stiffness();
  const Vec l_glob = ap.global_load();
  return detail::iterate_to_convergence(
      ap, cfg, [&](const SolverState& s, double /*gamma_k*/) {
        const auto gs = ap.gap_states(s.u, PsiStrategy::active_set);
        const SpMat c = ap.global_newton_coupling(gs);
        const Vec x_old = ap.pack(s.u);
        const auto gj = grad_j(ap.pairs(), s.u);
        Vec rhs = l_glob + c * x_old;
        for (int b = 0; b < ap.n_bodies(); ++b)
          rhs.segment(ap.offset(b), ap.dofs(b).n_free()) -=
              reduce_vector(ap.dofs(b), gj[size_t(b)]);
        const SpMat a = k_glob + c;
        const Vec x_new = SpdSolver::factorize(a).solve(rhs);
        SolverState next;
        next.k = s.k + 1;
        next.u = ap.unpack(x_new);
        next.gaps = gs;
        return next;
      });
}

inline std::pair<SolverState, IterationReport> monolithic_newton(const Problem& problem,
                                                                 const SolverConfig& cfg) {
  AssembledProblem ap(problem);
  return monolithic_newton(ap, cfg);
}

struct AbstractIterateResult {
  std::vector<Vec> iterates;  // includes u0
  bool converged = false;
  bool diverged = false;
};

/// Generic finite-dimensional nonstationary iteration
/// u^{k+1} = u^k - γ^k (G^k)⁻¹ (Φ(u^k) - y). Each G^k must be symmetric
/// positive definite; non-SPD forms are rejected.
inline AbstractIterateResult abstract_iterate(const std::function<Vec(const Vec&)>& phi,
                                              const Vec& y,
                                              const std::function<SpMat(int)>& g_form,
                                              const std::vector<double>& gammas, const Vec& u0,
                                              double tol, int max_k) {
  if (gammas.empty()) throw ConfigError("abstract_iterate: empty gamma sequence");
  AbstractIterateResult res;
  res.iterates.push_back(u0);
  Vec u = u0;
  const double blowup = 1e12 * (u0.norm() + y.norm() + 1.0);
  for (int k = 0; k < max_k; ++k) {
    const double gamma_k = gammas[std::min(size_t(k), gammas.size() - 1)];
    const SpMat g = g_form(k);
    const SpdSolver solver = SpdSolver::factorize(g);  // rejects non-SPD forms
    const Vec residual = phi(u) - y;
    const Vec u_next = u - gamma_k * solver.solve(residual);
    res.iterates.push_back(u_next);
    const double num = (u_next - u).norm();
    const double den = u_next.norm();
    u = u_next;
    if ((den > 0.0 ? num / den : num) <= tol) {
      res.converged = true;
      break;
    }
    if (u.norm() > blowup) {
      res.diverged = true;
      break;
    }
  }
  return res;
}

struct Theorem3Estimate {
  double r_phi = 0.0;      // boundedness |Φ(u,v)| ≤ R‖v‖
  double d_phi = 0.0;      // Lipschitz |Φ(u+w,v)-Φ(u,v)| ≤ D‖v‖‖w‖
  double b_phi = 0.0;      // strong monotonicity Φ(u+v,v)-Φ(u,v) ≥ B‖v‖²
  double b_g = 0.0;        // min Rayleigh quotient of G
  double m_g = 0.0;        // max Rayleigh quotient of G
  double gamma_star = 0.0; // B_Φ B_G* / D_Φ²; admissible window is (0, 2γ*)
  bool coercive = false;   // B_Φ > 0; false signals a property violation
};

/// Monte-Carlo estimates of the Theorem-3 constants over random probe vectors
/// of the given amplitude. Zero probe vectors are excluded by construction.
inline Theorem3Estimate estimate_theorem3(const std::function<Vec(const Vec&)>& phi,
                                          const SpMat& g, int dim, int probe_count,
                                          double probe_scale = 1.0, std::uint64_t seed = 1) {
  if (dim < 1) throw ConfigError("estimate_theorem3: dimension must be >= 1");
  if (probe_count < 1) throw ConfigError("estimate_theorem3: need at least one probe");
  if (g.rows() != dim || g.cols() != dim)
    throw ConfigError("estimate_theorem3: G does not match the space dimension");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-probe_scale, probe_scale);
  auto draw = [&]() {
    Vec v(dim);
    do {
      for (int i = 0; i < dim; ++i) v[i] = dist(rng);
    } while (v.norm() == 0.0);
    return v;
  };

  Theorem3Estimate est;
  est.b_phi = std::numeric_limits<double>::infinity();
  est.b_g = std::numeric_limits<double>::infinity();
  est.m_g = -std::numeric_limits<double>::infinity();
  for (int p = 0; p < probe_count; ++p) {
    const Vec u = draw();
    const Vec w = draw();
    const Vec v = draw();
    const Vec phi_u = phi(u);
    est.r_phi = std::max(est.r_phi, phi_u.norm());
    est.d_phi = std::max(est.d_phi, (phi(u + w) - phi_u).norm() / w.norm());
    est.b_phi = std::min(est.b_phi, (phi(u + v) - phi_u).dot(v) / v.squaredNorm());
    const double rayleigh = v.dot(g * v) / v.squaredNorm();
    est.b_g = std::min(est.b_g, rayleigh);
    est.m_g = std::max(est.m_g, rayleigh);
  }
  est.coercive = est.b_phi > 0.0;
  est.gamma_star = est.d_phi > 0.0
                       ? est.b_phi * est.b_g / (est.d_phi * est.d_phi)
                       : std::numeric_limits<double>::infinity();
  return est;
}

}  // namespace wcontact
