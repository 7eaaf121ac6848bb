#pragma once

// Experiment harness: single runs and parameter sweeps with CSV artifacts.
// Sweep entries are independent and run concurrently up to a worker count
// taken from the WCONTACT_WORKERS environment variable (default 1).

#include "wcontact/common.hpp"
#include "wcontact/csv.hpp"
#include "wcontact/dd_solver.hpp"
#include "wcontact/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace wcontact {

inline int worker_count_from_env() {
  if (const char* env = std::getenv("WCONTACT_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

struct RunSummary {
  Outcome outcome = Outcome::max_iterations;
  int iterations = 0;
  double seconds = 0.0;
  std::string note;
};

struct RunArtifacts {
  std::filesystem::path convergence_csv;
  std::filesystem::path pressure_csv;
  std::filesystem::path summary_file;
  RunSummary summary;
};

namespace detail {

inline void write_convergence_csv(const std::filesystem::path& path, int n_bodies,
                                  const IterationReport& report) {
  CsvWriter csv(path);
  std::vector<std::string> header{"k"};
  for (int b = 0; b < n_bodies; ++b) header.push_back(strfmt("rho_%d", b + 1));
  header.insert(header.end(), {"energy_F1", "active_nodes", "gamma"});
  csv.row(header);
  for (const auto& rec : report.history) {
    std::vector<std::string> cells{csv_int(rec.k)};
    for (double r : rec.rho) cells.push_back(csv_num(r));
    cells.push_back(csv_num(rec.energy));
    cells.push_back(csv_int(rec.active_nodes));
    cells.push_back(csv_num(rec.gamma));
    csv.row(cells);
  }
}

inline double write_pressure_csv(const std::filesystem::path& path,
                                 const AssembledProblem& ap, const SolverState& state) {
  CsvWriter csv(path);
  csv.row({"x1_cm", "sigma_n_MPa", "gap_cm", "t_cm"});
  double peak = 0.0;
  for (const auto& pair : ap.pairs()) {
    const Vec& u_a = state.u[size_t(pair.body_a)];
    const Vec& u_b = state.u[size_t(pair.body_b)];
    const Vec sigma = contact_pressure(pair, u_a, u_b);
    for (size_t i = 0; i < pair.nodes.size(); ++i) {
      const auto& pn = pair.nodes[i];
      const double t = pn.gap - normal_component(u_a, pn.node_a, pair.normal_a) -
                       normal_component(u_b, pn.node_b, pair.normal_b);
      csv.row({csv_num(pn.x1), csv_num(sigma[Eigen::Index(i)]), csv_num(pn.gap), csv_num(t)});
      peak = std::max(peak, std::abs(sigma[Eigen::Index(i)]));
    }
  }
  return peak;
}

}  // namespace detail

/// Builds the scenario, runs the Robin–Robin solver and writes
/// convergence.csv, pressure.csv and summary.txt into the output directory.
/// Divergent outcomes still produce artifacts.
inline RunArtifacts cmd_run(const ScenarioConfig& cfg) {
  const Problem problem = generate_scenario(cfg);
  AssembledProblem ap(problem);

  const auto t0 = std::chrono::steady_clock::now();
  const auto [state, report] = ddm_solve(ap, cfg.solver);
  const auto t1 = std::chrono::steady_clock::now();

  RunArtifacts art;
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  art.convergence_csv = dir / "convergence.csv";
  art.pressure_csv = dir / "pressure.csv";
  art.summary_file = dir / "summary.txt";
  art.summary.outcome = report.outcome;
  art.summary.iterations = report.iterations();
  art.summary.seconds = std::chrono::duration<double>(t1 - t0).count();
  art.summary.note = report.note;

  detail::write_convergence_csv(art.convergence_csv, ap.n_bodies(), report);
  detail::write_pressure_csv(art.pressure_csv, ap, state);
  std::ofstream summary(art.summary_file);
  summary << "outcome=" << to_string(report.outcome) << "\n"
          << "iterations=" << report.iterations() << "\n"
          << strfmt("seconds=%.3f", art.summary.seconds) << "\n";
  if (!report.note.empty()) summary << "note=" << report.note << "\n";
  return art;
}

namespace detail {

/// Runs jobs 0..n-1 on up to `workers` threads; each job owns its state.
template <typename Fn>
void run_jobs(int n, int workers, Fn&& fn) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail

struct GammaSweepRow {
  double gamma = 0.0;
  Outcome outcome = Outcome::max_iterations;
  int iterations = 0;
  std::string note;
};

/// One ddm_solve per γ; failures are recorded per row and the sweep continues.
inline std::vector<GammaSweepRow> cmd_sweep_gamma(const ScenarioConfig& cfg,
                                                  const std::vector<double>& gammas,
                                                  int workers = worker_count_from_env()) {
  if (gammas.empty()) throw ConfigError("sweep-gamma: empty gamma list");
  std::vector<GammaSweepRow> rows(gammas.size());
  detail::run_jobs(int(gammas.size()), workers, [&](int i) {
    GammaSweepRow& row = rows[size_t(i)];
    row.gamma = gammas[size_t(i)];
    try {
      ScenarioConfig run_cfg = cfg;
      run_cfg.solver.gamma_schedule = {row.gamma};
      run_cfg.validate();
      const Problem problem = generate_scenario(run_cfg);
      const auto [state, report] = ddm_solve(problem, run_cfg.solver);
      row.outcome = report.outcome;
      row.iterations = report.iterations();
      row.note = report.note;
    } catch (const Error& e) {
      row.outcome = Outcome::diverged;
      row.iterations = 0;
      row.note = e.what();
    }
  });
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "gamma_sweep.csv");
  csv.row({"gamma", "outcome", "iterations"});
  for (const auto& row : rows)
    csv.row({csv_num(row.gamma), to_string(row.outcome), csv_int(row.iterations)});
  return rows;
}

struct LayerSweepRow {
  double layer_b = 0.0;
  double layer_a = 0.0;
  Outcome outcome = Outcome::max_iterations;
  int iterations = 0;
  double peak_pressure = 0.0;  // max |σ_n|, MPa
  std::filesystem::path profile_csv;
  std::string note;
};

/// One run per (B, a) layer; writes a pressure profile per pair plus the
/// comparison table layer_sweep.csv with peak |σ_n| per entry.
inline std::vector<LayerSweepRow> cmd_sweep_layer(
    const ScenarioConfig& cfg, const std::vector<std::pair<double, double>>& layers,
    int workers = worker_count_from_env()) {
  std::vector<LayerSweepRow> rows(layers.size());
  detail::run_jobs(int(layers.size()), workers, [&](int i) {
    LayerSweepRow& row = rows[size_t(i)];
    row.layer_b = layers[size_t(i)].first;
    row.layer_a = layers[size_t(i)].second;
    row.profile_csv = std::filesystem::path(cfg.output_dir) /
                      strfmt("pressure_B%g_a%g.csv", row.layer_b, row.layer_a);
    try {
      ScenarioConfig run_cfg = cfg;
      run_cfg.layer_b = row.layer_b;
      run_cfg.layer_a = row.layer_a;
      run_cfg.validate();
      const Problem problem = generate_scenario(run_cfg);
      AssembledProblem ap(problem);
      const auto [state, report] = ddm_solve(ap, run_cfg.solver);
      row.outcome = report.outcome;
      row.iterations = report.iterations();
      row.note = report.note;
      row.peak_pressure = detail::write_pressure_csv(row.profile_csv, ap, state);
    } catch (const Error& e) {
      row.outcome = Outcome::diverged;
      row.note = e.what();
    }
  });
  CsvWriter csv(std::filesystem::path(cfg.output_dir) / "layer_sweep.csv");
  csv.row({"B", "a", "outcome", "iterations", "max_abs_sigma_n_MPa"});
  for (const auto& row : rows)
    csv.row({csv_num(row.layer_b), csv_num(row.layer_a), to_string(row.outcome),
             csv_int(row.iterations), csv_num(row.peak_pressure)});
  return rows;
}

}  // namespace wcontact
